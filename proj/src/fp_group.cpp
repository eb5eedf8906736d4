#include "charvar/fp_group.hpp"

namespace charvar {

bool AbelianizationData::lattice_contains(const IntVec& v) const {
  if (v.size() != ngens) throw Error("lattice_contains: dimension mismatch");
  IntVec w = U * v;
  for (Index i = 0; i < ngens; ++i) {
    Int d = i < static_cast<Index>(diag.size()) ? diag[i] : Int(0);
    if (d == 0) {
      if (w(i) != 0) return false;
    } else if (w(i) % d != 0) {
      return false;
    }
  }
  return true;
}

AbelianizationData abelianization(const Presentation& p) {
  const Index n = p.ngens();
  const Index r = static_cast<Index>(p.relators.size());
  IntMat B(n, r);
  for (Index c = 0; c < r; ++c)
    B.col(c) = exponent_vector(p.relators[c], n);

  SNFResult snf = smith_normal_form(B);
  AbelianizationData ab;
  ab.ngens = n;
  ab.U = std::move(snf.U);
  Index s = 0;
  for (Index i = 0; i < std::min(n, r); ++i) {
    ab.diag.push_back(snf.D(i, i));
    if (snf.D(i, i) != 0) ++s;
    if (snf.D(i, i) > 1) ab.torsion.push_back(snf.D(i, i));
  }
  ab.rank = n - s;
  ab.basis_map = ab.U.bottomRows(ab.rank);
  return ab;
}

Index betti1(const Presentation& p) { return abelianization(p).rank; }

Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra) {
  Presentation q = p;
  for (const Word& w : extra) {
    if (w.max_gen_index() >= p.ngens())
      throw Error("quotient_by: word uses a generator outside the presentation");
    if (!w.empty()) q.relators.push_back(w);
  }
  return q;
}

Presentation semidirect_cyclic(const Presentation& base, const CyclicAction& action) {
  ActionCheck check = validate_action(base, action);
  if (!check.ok)
    throw Error("semidirect_cyclic: invalid action: " + check.failures.front());

  Presentation q;
  q.generators = base.generators;
  std::string t_name = "t";
  while (q.gen_index(t_name) >= 0) t_name += "_";
  q.generators.push_back(t_name);
  const int t = base.ngens();

  q.relators = base.relators;
  q.relators.push_back(Word::generator(t, action.order));
  for (int a = 0; a < base.ngens(); ++a) {
    Word conj = Word::generator(t) * Word::generator(a) * Word::generator(t, -1);
    q.relators.push_back(conj * action.images[static_cast<size_t>(a)].inverse());
  }
  return q;
}

ActionCheck validate_action(const Presentation& base, const CyclicAction& action,
                            const std::vector<ActionWitness>& witnesses) {
  ActionCheck out;
  auto fail = [&out](const std::string& msg) {
    out.ok = false;
    out.failures.push_back(msg);
  };

  const Index n = base.ngens();
  if (static_cast<Index>(action.images.size()) != n) {
    fail("action must give one image per generator");
    return out;
  }
  if (action.order < 1) {
    fail("action order must be >= 1");
    return out;
  }
  for (const Word& w : action.images)
    if (w.max_gen_index() >= n) {
      fail("action image uses a generator outside the presentation");
      return out;
    }

  AbelianizationData ab = abelianization(base);
  IntMat M(n, n);
  for (Index j = 0; j < n; ++j)
    M.col(j) = exponent_vector(action.images[static_cast<size_t>(j)], n);

  // Relator images must die in H1; equivalently M preserves the lattice.
  for (size_t c = 0; c < base.relators.size(); ++c) {
    IntVec img = M * exponent_vector(base.relators[c], n);
    if (!ab.lattice_contains(img)) {
      fail("relator " + std::to_string(c) +
           " has nontrivial abelianized image under the action");
      break;
    }
  }

  // M^N = I modulo the lattice: the induced H1 map is an automorphism of
  // order dividing N, with inverse M^(N-1).
  long N = checked_long(action.order, "action order");
  IntMat Mp = int_identity(n);
  for (long k = 0; k < N; ++k) Mp = M * Mp;
  bool order_ok = true;
  for (Index j = 0; j < n && order_ok; ++j) {
    IntVec v = Mp.col(j);
    v(j) -= 1;
    if (!ab.lattice_contains(v)) order_ok = false;
  }
  if (!order_ok)
    fail("abelianized action is not an automorphism of order dividing N");

  for (size_t wi = 0; wi < witnesses.size(); ++wi) {
    const ActionWitness& w = witnesses[wi];
    if (static_cast<Index>(w.gen_images.size()) != n) {
      fail("witness " + std::to_string(wi) + ": wrong number of matrices");
      continue;
    }
    std::vector<RatMat> inv;
    inv.reserve(w.gen_images.size());
    for (const RatMat& m : w.gen_images) inv.push_back(rat_inverse(m));
    RatMat t_inv = rat_inverse(w.t_matrix);
    auto eval = [&](const Word& word) {
      RatMat acc = rat_identity(w.t_matrix.rows());
      word.for_each_unit([&](int g, int sign) {
        acc = acc * (sign > 0 ? w.gen_images[static_cast<size_t>(g)]
                              : inv[static_cast<size_t>(g)]);
      });
      return acc;
    };
    for (Index a = 0; a < n; ++a) {
      RatMat lhs = w.t_matrix * w.gen_images[static_cast<size_t>(a)] * t_inv;
      RatMat rhs = eval(action.images[static_cast<size_t>(a)]);
      if (lhs != rhs) {
        fail("witness " + std::to_string(wi) +
             ": conjugation by t disagrees with the action on generator " +
             base.generators[static_cast<size_t>(a)]);
        break;
      }
    }
  }
  return out;
}

long combine_dimensions(const std::map<long, long>& d, long N) {
  if (N < 0) throw Error("combine_dimensions: negative rank");
  for (const auto& [k, v] : d)
    if (v < 0) throw Error("combine_dimensions: negative dimension");
  std::vector<long> best(static_cast<size_t>(N) + 1, 0);
  for (long k = 1; k <= N; ++k) {
    long b = 0;
    for (long m = 1; m <= k; ++m) {
      auto it = d.find(m);
      long dm = it == d.end() ? 0 : it->second;
      b = std::max(b, dm + best[static_cast<size_t>(k - m)]);
    }
    best[static_cast<size_t>(k)] = b;
  }
  return best[static_cast<size_t>(N)];
}

}  // namespace charvar
