#include "charvar/rep.hpp"

#include "charvar/linalg.hpp"

namespace charvar {

Representation::Representation(Presentation group, std::vector<RatMat> matrices)
    : group_(std::move(group)), mats_(std::move(matrices)) {
  if (mats_.size() != group_.generators.size())
    throw Error("representation: one matrix per generator required");
  dim_ = mats_.empty() ? 1 : mats_[0].rows();
  if (dim_ < 1) throw Error("representation: dimension must be >= 1");
  invs_.reserve(mats_.size());
  for (const RatMat& m : mats_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw Error("representation: matrices must be square of equal size");
    invs_.push_back(rat_inverse(m));  // throws on singular input
  }
}

Representation Representation::trivial(Presentation group, Index dim) {
  std::vector<RatMat> mats(group.generators.size(), rat_identity(dim));
  return Representation(std::move(group), std::move(mats));
}

RatMat Representation::eval(const Word& w) const {
  RatMat acc = rat_identity(dim_);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<size_t>(l.gen) >= mats_.size())
      throw Error("representation: generator index out of range");
    const RatMat& base = l.exp > 0 ? mats_[static_cast<size_t>(l.gen)]
                                   : invs_[static_cast<size_t>(l.gen)];
    long k = checked_long(abs(l.exp), "matrix power");
    RatMat b = base;
    while (k) {
      if (k & 1) acc = acc * b;
      k >>= 1;
      if (k) b = b * b;
    }
  }
  return acc;
}

std::optional<std::string> Representation::validate() const {
  for (const Word& r : group_.relators)
    if (!is_identity(eval(r))) return print_word(r, group_.generators);
  return std::nullopt;
}

Rat CharacterVector::eval(const Word& w) const {
  IntVec coords = ab.free_coords(exponent_vector(w, ab.ngens));
  Rat v(1);
  for (Index k = 0; k < coords.size(); ++k)
    v *= rat_pow(values[static_cast<size_t>(k)], coords(k));
  return v;
}

CharacterVector make_character(const Presentation& base, std::vector<Rat> values) {
  return make_character(base, abelianization(base), std::move(values));
}

CharacterVector make_character(Presentation base, AbelianizationData ab,
                               std::vector<Rat> values) {
  if (static_cast<Index>(values.size()) != ab.rank)
    throw Error("character: one value per free coordinate required");
  for (const Rat& v : values)
    if (v == 0) throw Error("character: values must be nonzero");
  return CharacterVector{std::move(base), std::move(ab), std::move(values)};
}

Representation character_rep(const CharacterVector& chi) {
  std::vector<RatMat> mats;
  for (Index j = 0; j < chi.ab.ngens; ++j) {
    RatMat m(1, 1);
    Rat v(1);
    for (Index k = 0; k < chi.ab.rank; ++k)
      v *= rat_pow(chi.values[static_cast<size_t>(k)], chi.ab.basis_map(k, j));
    m(0, 0) = v;
    mats.push_back(std::move(m));
  }
  return Representation(chi.base, std::move(mats));
}

CharacterVector twist_by_action(const CharacterVector& chi, const IntMat& A) {
  if (A.rows() != chi.ab.rank || A.cols() != chi.ab.rank)
    throw Error("twist: matrix size does not match the character rank");
  std::vector<Rat> out;
  for (Index j = 0; j < A.cols(); ++j) {
    Rat v(1);
    for (Index k = 0; k < A.rows(); ++k)
      v *= rat_pow(chi.values[static_cast<size_t>(k)], A(k, j));
    out.push_back(std::move(v));
  }
  CharacterVector t = chi;
  t.values = std::move(out);
  return t;
}

std::vector<CharacterVector> character_orbit(const CharacterVector& chi,
                                             const IntMat& A, long N) {
  std::vector<CharacterVector> orbit{chi};
  for (long i = 1; i < N; ++i) orbit.push_back(twist_by_action(orbit.back(), A));
  return orbit;
}

bool orbit_distinct(const CharacterVector& chi, const IntMat& A, long N) {
  auto orbit = character_orbit(chi, A, N);
  for (size_t i = 0; i < orbit.size(); ++i)
    for (size_t j = i + 1; j < orbit.size(); ++j)
      if (orbit[i] == orbit[j]) return false;
  return true;
}

Representation restrict_to(const SubgroupData& s, const Representation& r) {
  if (r.group().generators != s.ambient.generators)
    throw Error("restrict: representation is not over the ambient group");
  std::vector<RatMat> mats;
  mats.reserve(s.schreier_gens.size());
  for (const SchreierGen& sg : s.schreier_gens) mats.push_back(r.eval(sg.ambient));
  return Representation(s.kernel_presentation, std::move(mats));
}

Representation induce(const SubgroupData& s, const Representation& w) {
  if (w.group().generators != s.kernel_presentation.generators)
    throw Error("induce: representation is not over the kernel presentation");
  const long r = s.index();
  const Index m = w.dim();
  const Index dim = static_cast<Index>(r) * m;
  std::vector<RatMat> mats;
  for (int x = 0; x < s.ambient.ngens(); ++x) {
    RatMat M = RatMat::Zero(dim, dim);
    for (int c = 0; c < r; ++c) {
      int cp = s.step(c, x, -1);  // unique row with t_cp x t_c^-1 in the kernel
      Word u = s.transversal[static_cast<size_t>(cp)] * Word::generator(x) *
               s.transversal[static_cast<size_t>(c)].inverse();
      RatMat block = w.eval(s.rewrite(u));
      M.block(static_cast<Index>(cp) * m, static_cast<Index>(c) * m, m, m) = block;
    }
    mats.push_back(std::move(M));
  }
  return Representation(s.ambient, std::move(mats));
}

namespace {

struct ClosureSeeds {
  std::vector<Word> words;
  std::vector<const RatMat*> mats;
};

ClosureSeeds closure_seeds(const Representation& r) {
  ClosureSeeds s;
  for (int g = 0; g < r.group().ngens(); ++g) {
    s.words.push_back(Word::generator(g));
    s.mats.push_back(&r.mat(g));
    s.words.push_back(Word::generator(g, -1));
    s.mats.push_back(&r.inv(g));
  }
  return s;
}

}  // namespace

BurnsideResult burnside(const Representation& r) {
  const Index n2 = r.dim() * r.dim();
  RowSpan span(n2);
  AlgebraBasis basis;
  auto try_add = [&](const Word& word, RatMat m) {
    if (!span.insert(vec_rowmajor(m))) return;
    basis.words.push_back(word);
    basis.matrices.push_back(std::move(m));
  };
  try_add(Word(), rat_identity(r.dim()));
  ClosureSeeds seeds = closure_seeds(r);
  for (size_t q = 0; q < basis.words.size() && span.dim() < n2; ++q) {
    // Copy: try_add may reallocate the basis vectors.
    const Word base_word = basis.words[q];
    const RatMat base_mat = basis.matrices[q];
    for (size_t si = 0; si < seeds.words.size() && span.dim() < n2; ++si)
      try_add(base_word * seeds.words[si], base_mat * (*seeds.mats[si]));
  }
  basis.dim = span.dim();
  return BurnsideResult{basis.dim == n2, std::move(basis)};
}

bool equivalent_semisimple(const Representation& r1, const Representation& r2) {
  if (r1.dim() != r2.dim())
    throw Error("equivalent_semisimple: dimension mismatch");
  if (r1.group().generators.size() != r2.group().generators.size())
    throw Error("equivalent_semisimple: group mismatch");

  // Traces are compared on a word set spanning the image algebra of the
  // direct sum; equal characters there determine equal characters on the
  // whole group, which settles equivalence for semisimple inputs.
  const Index width = 2 * r1.dim() * r1.dim();
  RowSpan span(width);
  std::vector<Word> words;
  std::vector<std::pair<RatMat, RatMat>> pairs;
  bool equal = true;
  auto try_add = [&](const Word& word, RatMat a, RatMat b) {
    if (a.trace() != b.trace()) {
      equal = false;
      return;
    }
    RatVec v(width);
    v << vec_rowmajor(a), vec_rowmajor(b);
    if (!span.insert(std::move(v))) return;
    words.push_back(word);
    pairs.emplace_back(std::move(a), std::move(b));
  };

  try_add(Word(), rat_identity(r1.dim()), rat_identity(r2.dim()));
  ClosureSeeds s1 = closure_seeds(r1);
  ClosureSeeds s2 = closure_seeds(r2);
  for (size_t q = 0; q < words.size() && equal; ++q) {
    const Word base_word = words[q];
    const auto base = pairs[q];
    for (size_t si = 0; si < s1.words.size() && equal; ++si)
      try_add(base_word * s1.words[si], base.first * (*s1.mats[si]),
              base.second * (*s2.mats[si]));
  }
  return equal;
}

bool picard_lefschetz_check(const Representation& r, const std::vector<Word>& gamma1,
                            const std::vector<Word>& gamma2) {
  for (const Word& w : gamma1) {
    RatMat m = r.eval(w);
    if (!is_identity(m * m)) return false;
  }
  for (const Word& w : gamma2)
    if (!is_identity(r.eval(w))) return false;
  return true;
}

}  // namespace charvar
