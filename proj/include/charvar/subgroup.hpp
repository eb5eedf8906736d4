#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/fp_group.hpp"
#include "charvar/word.hpp"

namespace charvar {

// Finite group given by its multiplication table. The table is checked to be
// a group law at construction (Light's associativity test on a generating
// set, plus identity/inverse checks).
class FiniteTarget {
 public:
  FiniteTarget() : name_("Z/1"), order_(1), table_{0}, inverse_{0}, labels_{"0"} {}

  static FiniteTarget cyclic(long n);
  static FiniteTarget symmetric(int degree);
  static FiniteTarget from_table(std::string name, std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels,
                                 std::vector<int> generators = {});
  static FiniteTarget product(const FiniteTarget& a, const FiniteTarget& b);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
  int pow(int g, const Int& e) const;
  int element_order(int g) const;
  const std::string& label(int g) const { return labels_[static_cast<size_t>(g)]; }
  const std::string& name() const { return name_; }

 private:
  struct Blank {};
  explicit FiniteTarget(Blank) {}
  void finalize(std::vector<int> generators);  // identity/inverse/associativity

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;   // row-major order_ x order_
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

struct FiniteHom {
  Presentation source;
  FiniteTarget target;
  std::vector<int> images;  // one target element per generator

  int eval(const Word& w) const;
  // First relator with nontrivial image, if any.
  std::optional<std::string> check() const;
};

struct SchreierGen {
  int coset;
  int gen;
  Word ambient;  // t_c x t_{c.x}^-1, freely reduced
};

// Finite-index kernel subgroup with Schreier transversal and a
// Reidemeister-Schreier presentation of the kernel.
struct SubgroupData {
  Presentation ambient;
  FiniteHom hom;
  std::vector<int> coset_elem;       // coset id -> target element; 0 = identity
  std::vector<Word> transversal;     // prefix-closed, breadth-first
  std::vector<SchreierGen> schreier_gens;
  Presentation kernel_presentation;  // over the Schreier generators

  long index() const { return static_cast<long>(coset_elem.size()); }
  int coset_of(int target_elem) const;
  int step(int coset, int gen, int sign) const;  // coset transition

  // Rewrites a kernel member into the Schreier generators; throws on
  // non-members.
  Word rewrite(const Word& w) const;
  // Substitutes each Schreier generator by its ambient word.
  Word ambient_word(const Word& kernel_word) const;

 private:
  friend SubgroupData kernel_subgroup(const Presentation&, const FiniteHom&);
  std::vector<int> elem_coset_;  // target element -> coset id (-1 unreachable)
  std::vector<int> edge_gen_;    // (coset, gen) -> schreier index, -1 for tree edges
};

SubgroupData kernel_subgroup(const Presentation& p, const FiniteHom& hom);

// pi_1 of the smooth cyclic cover y^N = f(x), deg f = branch_count with
// distinct roots, plus the deck generator acting on it.
struct GroupWithAction {
  Presentation group;
  CyclicAction action;
  long genus = 0;
  AbelianizationData ab;
  long effective_branch_points = 0;  // includes infinity when it ramifies
};

GroupWithAction cyclic_cover_group(long N, long branch_count);

// Integer matrix of the deck generator on H1 of the cover; requires the
// abelianization to be torsion-free.
IntMat h1_action(const GroupWithAction& g);

struct AvoidanceBudget {
  int max_degree = 5;
  long max_trials = 4000;
  std::uint64_t seed = 1;
};

struct QuotientUse {
  std::string description;
  FiniteTarget target;
  std::vector<int> gen_images;
};

struct AvoidanceCertificate {
  struct ElementCert {
    Word element;
    Int claimed_order;
    size_t quotient;          // index into quotients
    std::string image_label;  // nontrivial image in that quotient
    long image_order;
  };
  std::vector<QuotientUse> quotients;
  std::vector<ElementCert> elements;
  long index = 1;
};

struct AvoidanceResult {
  SubgroupData subgroup;
  AvoidanceCertificate certificate;
};

// Finite-index normal subgroup avoiding every listed nontrivial element:
// abelianization quotients first, then homomorphism search into symmetric
// groups of degree <= budget.max_degree. Throws when the budget is exhausted.
AvoidanceResult avoidance_subgroup(const Presentation& p,
                                   const std::vector<std::pair<Word, Int>>& elements,
                                   const AvoidanceBudget& budget = {});

}  // namespace charvar
