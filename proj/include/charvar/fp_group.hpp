#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charvar/linalg.hpp"
#include "charvar/word.hpp"

namespace charvar {

// H1 of a presented group: Z^n / (column lattice of the relator exponent
// matrix), split into free rank, torsion chain, and coordinate maps.
struct AbelianizationData {
  Index ngens = 0;
  Index rank = 0;
  std::vector<Int> torsion;  // > 1, each dividing the next
  IntMat basis_map;          // rank x ngens; free-part coordinates of gen j
  IntMat U;                  // unimodular change of basis from the SNF
  std::vector<Int> diag;     // full diagonal of D (zeros included)

  // Membership in the relator lattice, i.e. triviality in H1.
  bool lattice_contains(const IntVec& v) const;
  IntVec free_coords(const IntVec& v) const { return basis_map * v; }
};

AbelianizationData abelianization(const Presentation& p);
Index betti1(const Presentation& p);

Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra);

// Generator of Z/N acting by generator -> image word.
struct CyclicAction {
  Int order = 1;
  std::vector<Word> images;
};

// Adds a fresh generator t with relators t^N and t a t^-1 action(a)^-1.
Presentation semidirect_cyclic(const Presentation& base, const CyclicAction& action);

struct ActionCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// A matrix witness for the conjugation identity: T rho(a) T^-1 = rho(action(a)).
struct ActionWitness {
  std::vector<RatMat> gen_images;
  RatMat t_matrix;
};

ActionCheck validate_action(const Presentation& base, const CyclicAction& action,
                            const std::vector<ActionWitness>& witnesses = {});

// max over partitions N1+...+Nr = N of sum d(Ni); absent ranks count 0.
long combine_dimensions(const std::map<long, long>& d, long N);

}  // namespace charvar
