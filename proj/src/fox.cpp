#include "charvar/fox.hpp"

#include "charvar/linalg.hpp"

namespace charvar {

GroupRingElement GroupRingElement::of(const Word& w, const Rat& c) {
  GroupRingElement e;
  e.add(w, c);
  return e;
}

void GroupRingElement::add(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
  a += b;
  return a;
}

GroupRingElement GroupRingElement::left_mul(const Word& w) const {
  GroupRingElement out;
  for (const auto& [u, c] : terms_) out.add(w * u, c);
  return out;
}

GroupRingElement GroupRingElement::scaled(const Rat& c) const {
  GroupRingElement out;
  for (const auto& [u, k] : terms_) out.add(u, k * c);
  return out;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement res;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      long e = checked_long(l.exp, "fox exponent");
      if (e > 0) {
        for (long j = 0; j < e; ++j)
          res.add(prefix * Word::generator(gen, Int(j)), Rat(1));
      } else {
        for (long j = 1; j <= -e; ++j)
          res.add(prefix * Word::generator(gen, Int(-j)), Rat(-1));
      }
    }
    prefix = prefix * Word::generator(l.gen, l.exp);
  }
  return res;
}

ModuleAction ModuleAction::from_matrices(std::vector<RatMat> mats) {
  ModuleAction a;
  a.dim = mats.empty() ? 1 : mats[0].rows();
  for (const RatMat& m : mats) {
    if (m.rows() != a.dim || m.cols() != a.dim)
      throw Error("module action: matrices must be square of equal size");
    a.invs.push_back(rat_inverse(m));
  }
  a.mats = std::move(mats);
  return a;
}

ModuleAction ModuleAction::from_rep(const Representation& r) {
  ModuleAction a;
  a.dim = r.dim();
  for (int g = 0; g < r.group().ngens(); ++g) {
    a.mats.push_back(r.mat(g));
    a.invs.push_back(r.inv(g));
  }
  return a;
}

ModuleAction ModuleAction::conjugation(const Representation& r) {
  ModuleAction a;
  a.dim = r.dim() * r.dim();
  for (int g = 0; g < r.group().ngens(); ++g) {
    a.mats.push_back(kron(r.mat(g), r.inv(g).transpose()));
    a.invs.push_back(kron(r.inv(g), r.mat(g).transpose()));
  }
  return a;
}

ModuleAction ModuleAction::trivial(Index ngens) {
  ModuleAction a;
  a.dim = 1;
  for (Index g = 0; g < ngens; ++g) {
    a.mats.push_back(rat_identity(1));
    a.invs.push_back(rat_identity(1));
  }
  return a;
}

RatMat ModuleAction::eval(const Word& w) const {
  RatMat acc = rat_identity(dim);
  w.for_each_unit([&](int g, int sign) {
    if (g < 0 || static_cast<size_t>(g) >= mats.size())
      throw Error("module action: generator index out of range");
    acc = acc * (sign > 0 ? mats[static_cast<size_t>(g)] : invs[static_cast<size_t>(g)]);
  });
  return acc;
}

RatMat ModuleAction::eval(const GroupRingElement& e) const {
  RatMat acc = RatMat::Zero(dim, dim);
  for (const auto& [w, c] : e.terms()) acc += RatMat(eval(w) * c);
  return acc;
}

H1Report h1_dimension(const Presentation& p, const ModuleAction& act, std::string at) {
  const Index n = p.ngens();
  const Index m = act.dim;
  const Index r = static_cast<Index>(p.relators.size());
  if (static_cast<Index>(act.mats.size()) != n)
    throw Error("h1_dimension: action must assign a matrix to every generator");
  for (const Word& rel : p.relators)
    if (!is_identity(act.eval(rel)))
      throw Error("h1_dimension: invalid action, relator " +
                  print_word(rel, p.generators) + " acts nontrivially");

  RatMat jac = RatMat::Zero(r * m, n * m);
  for (Index ri = 0; ri < r; ++ri)
    for (Index gi = 0; gi < n; ++gi) {
      GroupRingElement d = fox_derivative(p.relators[static_cast<size_t>(ri)],
                                          static_cast<int>(gi));
      if (!d.is_zero()) jac.block(ri * m, gi * m, m, m) = act.eval(d);
    }

  RatMat stacked(n * m, m);
  for (Index gi = 0; gi < n; ++gi)
    stacked.block(gi * m, 0, m, m) = act.mats[static_cast<size_t>(gi)] - rat_identity(m);

  H1Report rep;
  rep.module_dim = static_cast<long>(m);
  rep.dimZ1 = static_cast<long>(n * m - rat_rank(jac));
  rep.dimB1 = static_cast<long>(rat_rank(stacked));
  rep.dimH1 = rep.dimZ1 - rep.dimB1;
  if (rep.dimH1 < 0)
    throw Error("h1_dimension: negative H1, coboundaries escape the cocycles");
  rep.is_even = rep.dimH1 % 2 == 0;
  rep.at = std::move(at);
  return rep;
}

H1Report local_charvar_dim(const Representation& r) {
  if (r.validate())
    throw Error("local_charvar_dim: representation does not satisfy the relators");
  BurnsideResult b = burnside(r);
  if (!b.absolutely_irreducible)
    throw Error("local_charvar_dim: representation is not absolutely irreducible "
                "(algebra dimension " + std::to_string(b.algebra.dim) + ")");
  return h1_dimension(r.group(), ModuleAction::conjugation(r),
                      "conjugation module at an absolutely irreducible point, N = " +
                          std::to_string(r.dim()));
}

}  // namespace charvar
