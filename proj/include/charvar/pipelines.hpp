#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/fox.hpp"
#include "charvar/rep.hpp"
#include "charvar/subgroup.hpp"

namespace charvar {

// Raised when an input violates a documented precondition (as opposed to a
// computation or certificate failure).
struct ConfigError : Error {
  using Error::Error;
};

struct Theorem1Params {
  long N = 2;
  long deg_f = 6;
  int samples = 5;
  std::uint64_t seed = 7;
  int eq_v_words = 50;
};

struct Theorem1Sample {
  std::vector<Rat> chi;
  bool orbit_distinct = false;
  bool valid = false;
  bool irreducible = false;
  long algebra_dim = 0;
  bool res_matches_eq_v = false;
  bool twist_equivalent = false;  // V_chi ~ V_{chi.gamma}
  H1Report h1;
  long h1_oracle = 0;
  bool h1_matches_oracle = false;
  bool h1_ge_2g = false;
  bool certified = false;
};

struct Theorem1Report {
  Theorem1Params params;
  long genus = 0;
  long effective_branch_points = 0;
  long betti1_cover = 0;
  IntMat action_matrix;
  bool action_order_ok = false;
  bool action_fixed_space_zero = false;
  long total_generators = 0;
  long total_relators = 0;
  long betti1_total = 0;
  std::vector<Int> torsion_total;
  std::vector<Theorem1Sample> samples;
  std::vector<std::vector<bool>> equivalent;  // pairwise, certified samples
  std::vector<std::vector<bool>> same_orbit;
  bool equivalence_matches_orbits = false;
  bool all_certified = false;
  std::string failure;  // first failed certificate, empty when certified
};

// Cover -> deck action -> semidirect product -> induced character family,
// with every claim certified exactly along the way.
Theorem1Report build_theorem1(const Theorem1Params& params);

struct CoverReport {
  long N = 0;
  long branch_points = 0;
  long effective_branch_points = 0;
  long genus = 0;
  long betti1 = 0;
  bool torsion_free = false;
  IntMat action_matrix;
  bool action_order_ok = false;
  bool action_fixed_space_zero = false;
  std::string warning;
};

CoverReport build_cover_report(long N, long branch_count);

struct DescentInput {
  Presentation p;
  std::vector<Word> gamma1;
  std::vector<Word> gamma2;
  std::vector<int> parity;  // one 0/1 per generator of p
  std::vector<std::pair<Word, Int>> links;
  int characters = 2;
  std::uint64_t seed = 11;
  AvoidanceBudget budget;
  bool allow_any_link_order = false;
  std::optional<std::vector<RatMat>> test_rep;  // optional predicate gate
};

struct DescentStage {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct DescentCharRecord {
  std::vector<Rat> chi;
  long induced_dim = 0;
  bool w_valid = false;
  bool inner_valid = false;
  bool valid = false;
  bool picard_ok = false;
  bool irreducible = false;
  long algebra_dim = 0;
};

struct DescentReport {
  std::vector<DescentStage> stages;
  bool gate_checked = false;
  Presentation input_group;
  Presentation quotient_group;
  long index2 = 0;
  long kernel_generators = 0;
  long kernel_relators = 0;
  AvoidanceCertificate avoidance;
  bool has_avoidance = false;
  std::vector<DescentCharRecord> characters;
  std::vector<std::vector<bool>> equivalent;
  bool induced_pairwise_distinct = false;
  bool all_ok = false;
  std::string failure;
};

// Quotient by the squared gamma1 loops and the gamma2 loops, index-two
// kernel of the parity map, avoidance subgroup past the link elements, then
// induction of sampled characters back up the chain.
DescentReport descent_chain(const DescentInput& input);

DescentInput descent_toy_input(std::uint64_t seed = 11);
DescentInput descent_s3_input(std::uint64_t seed = 11);

}  // namespace charvar
