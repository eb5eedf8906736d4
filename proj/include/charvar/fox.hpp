#pragma once

#include <map>
#include <string>
#include <vector>

#include "charvar/rep.hpp"
#include "charvar/word.hpp"

namespace charvar {

// Finite Q-linear combination of reduced words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement one() { return of(Word()); }
  static GroupRingElement of(const Word& w, const Rat& c = Rat(1));

  void add(const Word& w, const Rat& c);
  GroupRingElement& operator+=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
  GroupRingElement left_mul(const Word& w) const;   // w * this
  GroupRingElement scaled(const Rat& c) const;

  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GroupRingElement&) const = default;

 private:
  std::map<Word, Rat> terms_;  // no zero coefficients
};

// Free differential calculus: d(uv) = du + u dv, d(x)/dx = 1,
// d(x^-1)/dx = -x^-1.
GroupRingElement fox_derivative(const Word& w, int gen);

// A linear action of the group on Q^m, given on generators.
struct ModuleAction {
  Index dim = 0;
  std::vector<RatMat> mats;
  std::vector<RatMat> invs;

  static ModuleAction from_matrices(std::vector<RatMat> mats);
  static ModuleAction from_rep(const Representation& r);
  // v -> R(g) v R(g)^-1 on the full matrix space, row-major coordinates.
  static ModuleAction conjugation(const Representation& r);
  static ModuleAction trivial(Index ngens);

  RatMat eval(const Word& w) const;
  RatMat eval(const GroupRingElement& e) const;
};

struct H1Report {
  long dimZ1 = 0;
  long dimB1 = 0;
  long dimH1 = 0;
  long module_dim = 0;
  bool is_even = false;
  std::string at;
};

// Cocycles from the Fox Jacobian of the relators, coboundaries from the
// module invariants.
H1Report h1_dimension(const Presentation& p, const ModuleAction& act,
                      std::string at = "");

// Tangent dimension of the GL_N character variety at an absolutely
// irreducible point: H^1 with the conjugation module. Refuses reducible
// representations.
H1Report local_charvar_dim(const Representation& r);

}  // namespace charvar
