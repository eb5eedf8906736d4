#include "charvar/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace charvar {

namespace {

std::vector<std::vector<int>> permutations_of(int degree) {
  std::vector<int> p(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

std::string cycle_label(const std::vector<int>& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    out << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out << (first ? "" : " ") << j;
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out << ")";
  }
  return any ? out.str() : "e";
}

}  // namespace

void FiniteTarget::finalize(std::vector<int> generators) {
  const int n = order_;
  if (n <= 0 || static_cast<int>(table_.size()) != n * n)
    throw Error("finite target: malformed table");
  for (int v : table_)
    if (v < 0 || v >= n) throw Error("finite target: table entry out of range");

  // Identity: a two-sided unit.
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error("finite target: no identity element");

  inverse_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<size_t>(a)] < 0)
      throw Error("finite target: element without inverse");
  }

  // Light's test: associativity on a generating set implies associativity.
  if (generators.empty())
    for (int g = 0; g < n; ++g) generators.push_back(g);
  std::vector<bool> reached(static_cast<size_t>(n), false);
  std::deque<int> queue{identity_};
  reached[static_cast<size_t>(identity_)] = true;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int g : generators) {
      int b = mul(a, g);
      if (!reached[static_cast<size_t>(b)]) {
        reached[static_cast<size_t>(b)] = true;
        queue.push_back(b);
      }
    }
  }
  for (bool r : reached)
    if (!r) throw Error("finite target: generators do not generate");
  for (int g : generators)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul(mul(a, g), b) != mul(a, mul(g, b)))
          throw Error("finite target: table is not associative");

  if (labels_.empty())
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  if (static_cast<int>(labels_.size()) != n)
    throw Error("finite target: label count mismatch");
}

FiniteTarget FiniteTarget::cyclic(long n) {
  if (n < 1) throw Error("cyclic target: order must be >= 1");
  FiniteTarget t{Blank{}};
  t.name_ = "Z/" + std::to_string(n);
  t.order_ = static_cast<int>(n);
  t.table_.resize(static_cast<size_t>(n * n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      t.table_[static_cast<size_t>(a * n + b)] = static_cast<int>((a + b) % n);
  for (long a = 0; a < n; ++a) t.labels_.push_back(std::to_string(a));
  t.finalize({n > 1 ? 1 : 0});
  return t;
}

FiniteTarget FiniteTarget::symmetric(int degree) {
  if (degree < 1) throw Error("symmetric target: degree must be >= 1");
  auto perms = permutations_of(degree);
  FiniteTarget t{Blank{}};
  t.name_ = "S" + std::to_string(degree);
  t.order_ = static_cast<int>(perms.size());
  const int n = t.order_;
  // Composition p*q applies q first; elements indexed lexicographically.
  std::vector<std::vector<int>> idx_of;
  auto find = [&perms](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) -
                            perms.begin());
  };
  t.table_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<int> comp(static_cast<size_t>(degree));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < degree; ++i)
        comp[static_cast<size_t>(i)] =
            perms[static_cast<size_t>(a)]
                 [static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
      t.table_[static_cast<size_t>(a * n + b)] = find(comp);
    }
  for (int a = 0; a < n; ++a) t.labels_.push_back(cycle_label(perms[static_cast<size_t>(a)]));

  std::vector<int> gens;
  if (degree >= 2) {
    std::vector<int> transp(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) transp[static_cast<size_t>(i)] = i;
    std::swap(transp[0], transp[1]);
    gens.push_back(find(transp));
    std::vector<int> cyc(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % degree;
    gens.push_back(find(cyc));
  } else {
    gens.push_back(0);
  }
  t.finalize(gens);
  return t;
}

FiniteTarget FiniteTarget::from_table(std::string name, std::vector<std::vector<int>> table,
                                      std::vector<std::string> labels,
                                      std::vector<int> generators) {
  FiniteTarget t{Blank{}};
  t.name_ = std::move(name);
  t.order_ = static_cast<int>(table.size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != t.order_)
      throw Error("finite target: table is not square");
    t.table_.insert(t.table_.end(), row.begin(), row.end());
  }
  t.labels_ = std::move(labels);
  t.finalize(std::move(generators));
  return t;
}

FiniteTarget FiniteTarget::product(const FiniteTarget& a, const FiniteTarget& b) {
  FiniteTarget t{Blank{}};
  t.name_ = a.name_ + " x " + b.name_;
  const int na = a.order_, nb = b.order_, n = na * nb;
  t.order_ = n;
  t.table_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
      t.table_[static_cast<size_t>(i * n + j)] = a.mul(ai, aj) * nb + b.mul(bi, bj);
    }
  for (int i = 0; i < n; ++i)
    t.labels_.push_back("(" + a.label(i / nb) + ", " + b.label(i % nb) + ")");
  std::vector<int> gens;
  for (int g = 0; g < na; ++g) gens.push_back(g * nb + b.identity());
  for (int g = 0; g < nb; ++g) gens.push_back(a.identity() * nb + g);
  t.finalize(std::move(gens));
  return t;
}

int FiniteTarget::pow(int g, const Int& e) const {
  Int m = e % order_;
  if (m < 0) m += order_;
  long k = checked_long(m);
  int acc = identity_;
  int base = g;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteTarget::element_order(int g) const {
  int acc = g, ord = 1;
  while (acc != identity_) {
    acc = mul(acc, g);
    ++ord;
  }
  return ord;
}

int FiniteHom::eval(const Word& w) const {
  int acc = target.identity();
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<size_t>(l.gen) >= images.size())
      throw Error("hom: generator index out of range");
    acc = target.mul(acc, target.pow(images[static_cast<size_t>(l.gen)], l.exp));
  }
  return acc;
}

std::optional<std::string> FiniteHom::check() const {
  if (images.size() != source.generators.size())
    return "wrong number of generator images";
  for (size_t i = 0; i < source.relators.size(); ++i)
    if (eval(source.relators[i]) != target.identity())
      return "relator " + print_word(source.relators[i], source.generators) +
             " has nontrivial image";
  return std::nullopt;
}

int SubgroupData::coset_of(int target_elem) const {
  int c = elem_coset_[static_cast<size_t>(target_elem)];
  if (c < 0) throw Error("element outside the image subgroup");
  return c;
}

int SubgroupData::step(int coset, int gen, int sign) const {
  int img = hom.images[static_cast<size_t>(gen)];
  if (sign < 0) img = hom.target.inv(img);
  return coset_of(hom.target.mul(coset_elem[static_cast<size_t>(coset)], img));
}

Word SubgroupData::rewrite(const Word& w) const {
  if (hom.eval(w) != hom.target.identity())
    throw Error("rewrite: word is not in the kernel subgroup");
  const int ngens = ambient.ngens();
  std::vector<Letter> out;
  int c = 0;
  w.for_each_unit([&](int g, int sign) {
    if (sign > 0) {
      int k = edge_gen_[static_cast<size_t>(c * ngens + g)];
      if (k >= 0) out.push_back({k, 1});
      c = step(c, g, 1);
    } else {
      int cp = step(c, g, -1);
      int k = edge_gen_[static_cast<size_t>(cp * ngens + g)];
      if (k >= 0) out.push_back({k, -1});
      c = cp;
    }
  });
  if (c != 0) throw Error("rewrite: coset walk did not return to the identity");
  return Word::reduced(std::move(out));
}

Word SubgroupData::ambient_word(const Word& kernel_word) const {
  std::vector<Word> images;
  images.reserve(schreier_gens.size());
  for (const SchreierGen& s : schreier_gens) images.push_back(s.ambient);
  return substitute(kernel_word, images);
}

SubgroupData kernel_subgroup(const Presentation& p, const FiniteHom& hom) {
  if (auto bad = hom.check())
    throw Error("kernel_subgroup: invalid homomorphism: " + *bad);

  SubgroupData s;
  s.ambient = p;
  s.hom = hom;
  const int ngens = p.ngens();
  const FiniteTarget& T = hom.target;

  s.elem_coset_.assign(static_cast<size_t>(T.order()), -1);
  std::deque<int> queue;
  s.elem_coset_[static_cast<size_t>(T.identity())] = 0;
  s.coset_elem.push_back(T.identity());
  s.transversal.push_back(Word());
  queue.push_back(0);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < ngens; ++g)
      for (int sign : {1, -1}) {
        int img = hom.images[static_cast<size_t>(g)];
        if (sign < 0) img = T.inv(img);
        int e = T.mul(s.coset_elem[static_cast<size_t>(c)], img);
        if (s.elem_coset_[static_cast<size_t>(e)] < 0) {
          s.elem_coset_[static_cast<size_t>(e)] = static_cast<int>(s.coset_elem.size());
          s.coset_elem.push_back(e);
          s.transversal.push_back(s.transversal[static_cast<size_t>(c)] *
                                  Word::generator(g, Int(sign)));
          queue.push_back(s.elem_coset_[static_cast<size_t>(e)]);
        }
      }
  }

  const int index = static_cast<int>(s.coset_elem.size());
  s.edge_gen_.assign(static_cast<size_t>(index * ngens), -1);
  Presentation kp;
  for (int c = 0; c < index; ++c)
    for (int g = 0; g < ngens; ++g) {
      int cn = s.step(c, g, 1);
      Word w = s.transversal[static_cast<size_t>(c)] * Word::generator(g) *
               s.transversal[static_cast<size_t>(cn)].inverse();
      if (w.empty()) continue;  // tree edge
      s.edge_gen_[static_cast<size_t>(c * ngens + g)] =
          static_cast<int>(s.schreier_gens.size());
      kp.generators.push_back("s" + std::to_string(c) + "_" +
                              p.generators[static_cast<size_t>(g)]);
      s.schreier_gens.push_back({c, g, std::move(w)});
    }

  std::set<Word> seen;
  for (int c = 0; c < index; ++c)
    for (const Word& r : p.relators) {
      Word conj = s.transversal[static_cast<size_t>(c)] * r *
                  s.transversal[static_cast<size_t>(c)].inverse();
      Word rw = s.rewrite(conj);
      if (rw.empty()) continue;
      if (seen.insert(rw).second) kp.relators.push_back(rw);
    }
  s.kernel_presentation = std::move(kp);
  return s;
}

GroupWithAction cyclic_cover_group(long N, long branch_count) {
  if (N < 1) throw Error("cyclic cover: N must be >= 1");
  if (branch_count < 1) throw Error("cyclic cover: need at least one branch point");

  Presentation base;
  for (long i = 1; i <= branch_count; ++i)
    base.generators.push_back("g" + std::to_string(i));

  FiniteHom hom{base, FiniteTarget::cyclic(N),
                std::vector<int>(static_cast<size_t>(branch_count), N > 1 ? 1 : 0)};
  SubgroupData s = kernel_subgroup(base, hom);

  // Fill punctures: every coset conjugate of each puncture loop raised to
  // its covering degree becomes a relator of the closed cover.
  std::vector<Word> fillers;
  std::set<Word> seen;
  auto add_conjugates = [&](const Word& loop, const Int& power) {
    Word lp = loop.pow(power);
    for (const Word& t : s.transversal) {
      Word rw = s.rewrite(t * lp * t.inverse());
      if (!rw.empty() && seen.insert(rw).second) fillers.push_back(rw);
    }
  };
  for (int i = 0; i < branch_count; ++i)
    add_conjugates(Word::generator(i), Int(N));

  long m_inf = ((-branch_count) % N + N) % N;
  Int e_inf = Int(N) / gcd(Int(m_inf == 0 ? N : m_inf), Int(N));
  Word g_inf;
  for (int i = 0; i < branch_count; ++i) g_inf = g_inf * Word::generator(i);
  add_conjugates(g_inf.inverse(), e_inf);

  GroupWithAction out;
  out.group = quotient_by(s.kernel_presentation, fillers);
  out.effective_branch_points = branch_count + (m_inf != 0 ? 1 : 0);

  // Deck generator: conjugation by the transversal word over 1 in Z/N.
  const Word& t1 = s.transversal[static_cast<size_t>(s.coset_of(N > 1 ? 1 : 0))];
  CyclicAction action;
  action.order = N;
  for (const SchreierGen& sg : s.schreier_gens)
    action.images.push_back(s.rewrite(t1 * sg.ambient * t1.inverse()));
  out.action = std::move(action);

  out.ab = abelianization(out.group);
  if (out.ab.rank % 2 != 0)
    throw Error("cyclic cover: odd first Betti number, construction bug");
  out.genus = static_cast<long>(out.ab.rank / 2);
  return out;
}

IntMat h1_action(const GroupWithAction& g) {
  if (!g.ab.torsion.empty())
    throw Error("h1_action: cover H1 has torsion, construction bug");
  const Index n = g.ab.ngens;
  const Index rank = g.ab.rank;

  IntMat M(n, n);
  for (Index j = 0; j < n; ++j)
    M.col(j) = exponent_vector(g.action.images[static_cast<size_t>(j)], n);

  // Sections of the free coordinates: columns of U^-1 past the torsion block.
  RatMat u_inv_rat = rat_inverse(to_rat(g.ab.U));
  IntMat u_inv(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (denominator(u_inv_rat(i, j)) != 1)
        throw Error("h1_action: unimodular inverse is not integral");
      u_inv(i, j) = numerator(u_inv_rat(i, j));
    }

  IntMat A(rank, rank);
  for (Index k = 0; k < rank; ++k)
    A.col(k) = g.ab.basis_map * (M * u_inv.col(n - rank + k));

  long N = checked_long(g.action.order);
  IntMat Ap = int_identity(rank);
  for (long i = 0; i < N; ++i) Ap = A * Ap;
  if (Ap != int_identity(rank))
    throw Error("h1_action: action matrix does not have order dividing N");
  return A;
}

namespace {

struct HomCandidate {
  std::string description;
  FiniteTarget target;
  std::vector<int> images;
};

bool covers_something(const FiniteHom& hom, const std::vector<std::pair<Word, Int>>& elems,
                      const std::vector<bool>& covered) {
  for (size_t i = 0; i < elems.size(); ++i)
    if (!covered[i] && hom.eval(elems[i].first) != hom.target.identity()) return true;
  return false;
}

}  // namespace

AvoidanceResult avoidance_subgroup(const Presentation& p,
                                   const std::vector<std::pair<Word, Int>>& elements,
                                   const AvoidanceBudget& budget) {
  for (const auto& [w, ord] : elements) {
    if (w.empty())
      throw Error("avoidance: listed element is the identity word");
    if (w.max_gen_index() >= p.ngens())
      throw Error("avoidance: element uses a generator outside the presentation");
  }

  AvoidanceResult out;
  if (elements.empty()) {
    FiniteHom hom{p, FiniteTarget::cyclic(1),
                  std::vector<int>(static_cast<size_t>(p.ngens()), 0)};
    out.subgroup = kernel_subgroup(p, hom);
    out.certificate.index = 1;
    return out;
  }

  std::vector<bool> covered(elements.size(), false);
  std::vector<QuotientUse> used;
  std::vector<size_t> elem_quotient(elements.size(), 0);
  auto all_covered = [&covered] {
    for (bool c : covered)
      if (!c) return false;
    return true;
  };
  auto adopt = [&](const std::string& desc, const FiniteTarget& target,
                   const std::vector<int>& images) {
    FiniteHom hom{p, target, images};
    if (hom.check()) return false;
    if (!covers_something(hom, elements, covered)) return false;
    used.push_back({desc, target, images});
    for (size_t i = 0; i < elements.size(); ++i)
      if (!covered[i] && hom.eval(elements[i].first) != target.identity()) {
        covered[i] = true;
        elem_quotient[i] = used.size() - 1;
      }
    return true;
  };

  // Route 1: cyclic quotients read off the abelianization coordinates.
  AbelianizationData ab = abelianization(p);
  const Index n = p.ngens();
  for (Index i = 0; i < static_cast<Index>(ab.diag.size()) && !all_covered(); ++i) {
    if (ab.diag[i] <= 1) continue;
    long m = checked_long(ab.diag[i], "torsion invariant");
    std::vector<int> imgs;
    for (Index j = 0; j < n; ++j) {
      Int r = ab.U(i, j) % m;
      if (r < 0) r += m;
      imgs.push_back(static_cast<int>(r.convert_to<long>()));
    }
    adopt("Z/" + std::to_string(m) + " from torsion coordinate " + std::to_string(i),
          FiniteTarget::cyclic(m), imgs);
  }
  for (Index k = 0; k < ab.rank && !all_covered(); ++k) {
    for (long m = 2; m <= 6 && !all_covered(); ++m) {
      std::vector<int> imgs;
      for (Index j = 0; j < n; ++j) {
        Int r = ab.basis_map(k, j) % m;
        if (r < 0) r += m;
        imgs.push_back(static_cast<int>(r.convert_to<long>()));
      }
      adopt("Z/" + std::to_string(m) + " from free coordinate " + std::to_string(k),
            FiniteTarget::cyclic(m), imgs);
    }
  }

  // Route 2: homomorphisms into small symmetric groups, exhaustive when the
  // assignment space is small, seeded random otherwise. First certificate in
  // enumeration order wins, so results are reproducible.
  for (int degree = 2; degree <= budget.max_degree && !all_covered(); ++degree) {
    FiniteTarget target = FiniteTarget::symmetric(degree);
    const long order = target.order();
    double total = 1;
    for (int g = 0; g < p.ngens(); ++g) total *= static_cast<double>(order);
    std::vector<int> imgs(static_cast<size_t>(p.ngens()), 0);
    std::string desc = target.name() + " homomorphism search";
    if (total <= 200000.0) {
      const long count = static_cast<long>(total);
      for (long code = 0; code < count && !all_covered(); ++code) {
        long c = code;
        for (size_t g = 0; g < imgs.size(); ++g) {
          imgs[g] = static_cast<int>(c % order);
          c /= order;
        }
        adopt(desc, target, imgs);
      }
    } else {
      Rng rng(budget.seed + static_cast<std::uint64_t>(degree));
      for (long trial = 0; trial < budget.max_trials && !all_covered(); ++trial) {
        for (size_t g = 0; g < imgs.size(); ++g)
          imgs[g] = static_cast<int>(rng.below(static_cast<std::uint64_t>(order)));
        adopt(desc + " (seeded)", target, imgs);
      }
    }
  }

  for (size_t i = 0; i < elements.size(); ++i)
    if (!covered[i])
      throw Error("avoidance: budget exhausted without certificate for element " +
                  print_word(elements[i].first, p.generators));

  // Intersect the kernels via the product target.
  FiniteTarget target = used[0].target;
  std::vector<int> images = used[0].gen_images;
  for (size_t u = 1; u < used.size(); ++u) {
    FiniteTarget next = FiniteTarget::product(target, used[u].target);
    std::vector<int> merged;
    for (size_t g = 0; g < images.size(); ++g)
      merged.push_back(images[g] * used[u].target.order() + used[u].gen_images[g]);
    target = std::move(next);
    images = std::move(merged);
  }

  FiniteHom hom{p, target, images};
  out.subgroup = kernel_subgroup(p, hom);
  out.certificate.quotients = used;
  for (size_t i = 0; i < elements.size(); ++i) {
    const QuotientUse& q = used[elem_quotient[i]];
    FiniteHom qh{p, q.target, q.gen_images};
    int img = qh.eval(elements[i].first);
    out.certificate.elements.push_back({elements[i].first, elements[i].second,
                                        elem_quotient[i], q.target.label(img),
                                        q.target.element_order(img)});
  }
  out.certificate.index = out.subgroup.index();
  return out;
}

}  // namespace charvar
