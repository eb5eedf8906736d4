#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/fp_group.hpp"
#include "charvar/subgroup.hpp"

namespace charvar {

// Exact matrix representation: one invertible rational matrix per generator.
class Representation {
 public:
  Representation() = default;
  Representation(Presentation group, std::vector<RatMat> matrices);

  static Representation trivial(Presentation group, Index dim = 1);

  const Presentation& group() const { return group_; }
  Index dim() const { return dim_; }
  const RatMat& mat(int gen) const { return mats_[static_cast<size_t>(gen)]; }
  const RatMat& inv(int gen) const { return invs_[static_cast<size_t>(gen)]; }
  const std::vector<RatMat>& matrices() const { return mats_; }

  RatMat eval(const Word& w) const;

  // First relator whose image is not the identity, nullopt when valid.
  std::optional<std::string> validate() const;

 private:
  Presentation group_;
  Index dim_ = 0;
  std::vector<RatMat> mats_;
  std::vector<RatMat> invs_;
};

// Rational character: one nonzero value per free-coordinate of H1; torsion
// classes implicitly map to 1.
struct CharacterVector {
  Presentation base;
  AbelianizationData ab;
  std::vector<Rat> values;

  Rat eval(const Word& w) const;
  bool operator==(const CharacterVector& o) const { return values == o.values; }
};

CharacterVector make_character(const Presentation& base, std::vector<Rat> values);
CharacterVector make_character(Presentation base, AbelianizationData ab,
                               std::vector<Rat> values);

Representation character_rep(const CharacterVector& chi);

// chi composed with the H1 automorphism A: (chi.A)_j = prod_k chi_k^(A_kj).
CharacterVector twist_by_action(const CharacterVector& chi, const IntMat& A);

bool orbit_distinct(const CharacterVector& chi, const IntMat& A, long N);

std::vector<CharacterVector> character_orbit(const CharacterVector& chi,
                                             const IntMat& A, long N);

// Restriction along a finite-index kernel subgroup: Schreier generators map
// to the images of their ambient words.
Representation restrict_to(const SubgroupData& s, const Representation& r);

// Induction by coset blocks: block (c', c) of x is W(t_c' x t_c^-1) whenever
// that word lies in the kernel, zero otherwise.
Representation induce(const SubgroupData& s, const Representation& w);

struct AlgebraBasis {
  std::vector<Word> words;
  std::vector<RatMat> matrices;
  Index dim = 0;
};

struct BurnsideResult {
  bool absolutely_irreducible = false;
  AlgebraBasis algebra;
};

// Linear closure of the group image inside End(V); absolutely irreducible
// iff the closure has dimension dim^2.
BurnsideResult burnside(const Representation& r);

// Exact character comparison on a word set spanning the image algebra of
// r1 (+) r2; sound and complete for semisimple inputs.
bool equivalent_semisimple(const Representation& r1, const Representation& r2);

// R(w)^2 = I for every gamma1 word and R(w) = I for every gamma2 word.
bool picard_lefschetz_check(const Representation& r, const std::vector<Word>& gamma1,
                            const std::vector<Word>& gamma2);

}  // namespace charvar
