#include "charvar/pipelines.hpp"

#include <algorithm>

#include "charvar/linalg.hpp"

namespace charvar {

namespace {

// Kernel of total -> Z/N (cover generators -> 0, t -> 1) together with the
// identification of its Schreier generators as words of the cover group:
// s_{c,a} = t^r a t^-r maps to action^r(a), the t-power Schreier generator
// maps to the empty word.
struct CoverFibre {
  SubgroupData sub;
  std::vector<Word> to_cover;  // per Schreier generator of sub
};

CoverFibre cover_fibre(const Presentation& total, const GroupWithAction& cover) {
  const int n_k = cover.group.ngens();
  const long N = checked_long(cover.action.order);
  std::vector<int> images(static_cast<size_t>(total.ngens()), 0);
  images.back() = N > 1 ? 1 : 0;
  FiniteHom hom{total, FiniteTarget::cyclic(N), images};

  CoverFibre f;
  f.sub = kernel_subgroup(total, hom);
  for (const SchreierGen& sg : f.sub.schreier_gens) {
    if (sg.gen >= n_k) {
      f.to_cover.push_back(Word());  // a power of t^N, trivial downstairs
      continue;
    }
    long r = f.sub.coset_elem[static_cast<size_t>(sg.coset)];
    Word w = Word::generator(sg.gen);
    for (long i = 0; i < r; ++i) w = substitute(w, cover.action.images);
    f.to_cover.push_back(std::move(w));
  }
  return f;
}

Representation character_on_fibre(const CoverFibre& f, const Representation& chi_rep) {
  std::vector<RatMat> mats;
  mats.reserve(f.to_cover.size());
  for (const Word& w : f.to_cover) mats.push_back(chi_rep.eval(w));
  return Representation(f.sub.kernel_presentation, std::move(mats));
}

Word random_kernel_word(Rng& rng, int ngens, int len) {
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) {
    int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(ngens)));
    int sign = rng.below(2) ? 1 : -1;
    ls.push_back({g, Int(sign)});
  }
  return Word::reduced(std::move(ls));
}

}  // namespace

CoverReport build_cover_report(long N, long branch_count) {
  GroupWithAction g = cyclic_cover_group(N, branch_count);
  CoverReport rep;
  rep.N = N;
  rep.branch_points = branch_count;
  rep.effective_branch_points = g.effective_branch_points;
  rep.genus = g.genus;
  rep.betti1 = static_cast<long>(g.ab.rank);
  rep.torsion_free = g.ab.torsion.empty();
  rep.action_matrix = h1_action(g);  // checks A^N = I and torsion-freeness
  rep.action_order_ok = true;
  RatMat fixed = to_rat(rep.action_matrix) - rat_identity(g.ab.rank);
  rep.action_fixed_space_zero = rank_and_kernel(fixed).kernel.empty();
  if (rep.genus == 0)
    rep.warning = "genus 0: the cover carries no character family";
  return rep;
}

Theorem1Report build_theorem1(const Theorem1Params& params) {
  if (params.N < 2) throw ConfigError("theorem1: N must be >= 2");
  if (params.deg_f < 1) throw ConfigError("theorem1: deg f must be >= 1");
  if (params.samples < 1) throw ConfigError("theorem1: need at least one sample");

  Theorem1Report rep;
  rep.params = params;

  GroupWithAction cover = cyclic_cover_group(params.N, params.deg_f);
  if (cover.genus < 1)
    throw Error("theorem1: genus 0, no character family (increase deg f)");
  rep.genus = cover.genus;
  rep.effective_branch_points = cover.effective_branch_points;
  rep.betti1_cover = static_cast<long>(cover.ab.rank);

  IntMat A = h1_action(cover);
  rep.action_matrix = A;
  rep.action_order_ok = true;  // h1_action certified A^N = I
  RatMat fixed = to_rat(A) - rat_identity(A.rows());
  rep.action_fixed_space_zero = rank_and_kernel(fixed).kernel.empty();
  if (!rep.action_fixed_space_zero)
    throw Error("certificate failed: deck action has a nonzero fixed space on H1");

  Presentation total = semidirect_cyclic(cover.group, cover.action);
  rep.total_generators = total.ngens();
  rep.total_relators = static_cast<long>(total.relators.size());
  AbelianizationData ab_total = abelianization(total);
  rep.betti1_total = static_cast<long>(ab_total.rank);
  rep.torsion_total = ab_total.torsion;
  if (rep.betti1_total != 0)
    throw Error("certificate failed: total group has nonzero first Betti number");

  CoverFibre fibre = cover_fibre(total, cover);
  const long N = params.N;
  const long two_g = 2 * cover.genus;

  Rng rng(params.seed);
  std::vector<CharacterVector> chis;
  std::vector<Representation> induced;
  for (int s = 0; s < params.samples; ++s) {
    std::vector<Rat> values;
    for (long k = 0; k < two_g; ++k) values.push_back(rng.nonzero_rat());
    CharacterVector chi = make_character(cover.group, cover.ab, values);

    Theorem1Sample rec;
    rec.chi = chi.values;
    rec.orbit_distinct = orbit_distinct(chi, A, N);
    if (!rec.orbit_distinct) {
      // Logged, never counted as a disproof of genericity.
      rep.samples.push_back(std::move(rec));
      chis.push_back(chi);
      induced.emplace_back();
      continue;
    }

    Representation chi_rep = character_rep(chi);
    if (chi_rep.validate())
      throw Error("certificate failed: character representation invalid");

    Representation w = character_on_fibre(fibre, chi_rep);
    if (w.validate())
      throw Error("certificate failed: fibre character invalid on kernel relators");

    Representation v = induce(fibre.sub, w);
    rec.valid = !v.validate().has_value();
    if (!rec.valid)
      throw Error("certificate failed: induced representation invalid");

    BurnsideResult b = burnside(v);
    rec.irreducible = b.absolutely_irreducible;
    rec.algebra_dim = static_cast<long>(b.algebra.dim);

    // Restriction matches chi + chi.gamma + ... on random kernel words.
    Representation res = restrict_to(fibre.sub, v);
    auto orbit = character_orbit(chi, A, N);
    rec.res_matches_eq_v = true;
    for (int t = 0; t < params.eq_v_words && rec.res_matches_eq_v; ++t) {
      Word kw = random_kernel_word(rng, fibre.sub.kernel_presentation.ngens(), 8);
      Word down = substitute(kw, fibre.to_cover);
      Rat expected(0);
      for (const CharacterVector& c : orbit) expected += c.eval(down);
      if (res.eval(kw).trace() != expected) rec.res_matches_eq_v = false;
    }

    if (rec.irreducible) {
      rec.h1 = local_charvar_dim(v);
      rec.h1_oracle = 0;
      CharacterVector tw = chi;
      for (long d = 0; d < N; ++d) {
        rec.h1_oracle += (tw == chi) ? two_g : two_g - 2;
        tw = twist_by_action(tw, A);
      }
      rec.h1_matches_oracle = rec.h1.dimH1 == rec.h1_oracle;
      rec.h1_ge_2g = rec.h1.dimH1 >= two_g;
    }

    // V_chi is equivalent to V_{chi.gamma}.
    CharacterVector chi_g = twist_by_action(chi, A);
    Representation w_g = character_on_fibre(fibre, character_rep(chi_g));
    Representation v_g = induce(fibre.sub, w_g);
    rec.twist_equivalent = equivalent_semisimple(v, v_g);

    rec.certified = rec.valid && rec.irreducible && rec.res_matches_eq_v &&
                    rec.twist_equivalent && rec.h1.is_even && rec.h1_ge_2g &&
                    rec.h1_matches_oracle;
    rep.samples.push_back(std::move(rec));
    chis.push_back(chi);
    induced.push_back(std::move(v));
  }

  const size_t ns = rep.samples.size();
  rep.equivalent.assign(ns, std::vector<bool>(ns, false));
  rep.same_orbit.assign(ns, std::vector<bool>(ns, false));
  rep.equivalence_matches_orbits = true;
  for (size_t i = 0; i < ns; ++i) {
    if (!rep.samples[i].orbit_distinct) continue;
    auto orbit_i = character_orbit(chis[i], A, N);
    for (size_t j = 0; j < ns; ++j) {
      if (!rep.samples[j].orbit_distinct) continue;
      bool same = false;
      for (const CharacterVector& c : orbit_i)
        if (c == chis[j]) same = true;
      rep.same_orbit[i][j] = same;
      if (j <= i) continue;
      bool eq = equivalent_semisimple(induced[i], induced[j]);
      rep.equivalent[i][j] = rep.equivalent[j][i] = eq;
      if (eq != same) rep.equivalence_matches_orbits = false;
    }
    rep.equivalent[i][i] = true;
    rep.same_orbit[i][i] = true;
  }

  rep.all_certified = rep.equivalence_matches_orbits;
  for (const Theorem1Sample& s : rep.samples)
    if (s.orbit_distinct && !s.certified) rep.all_certified = false;
  if (!rep.all_certified) {
    for (size_t i = 0; i < ns; ++i) {
      const Theorem1Sample& s = rep.samples[i];
      if (!s.orbit_distinct || s.certified) continue;
      rep.failure = "sample " + std::to_string(i) + ": " +
                    std::string(!s.irreducible          ? "not absolutely irreducible"
                                : !s.res_matches_eq_v   ? "restriction trace mismatch"
                                : !s.twist_equivalent   ? "twist equivalence failed"
                                : !s.h1_matches_oracle  ? "H1 oracle mismatch"
                                : !s.h1.is_even         ? "H1 dimension odd"
                                                        : "H1 below 2g");
      break;
    }
    if (rep.failure.empty()) rep.failure = "equivalence classes do not match orbits";
  }
  return rep;
}

namespace {

DescentStage stage_fail(DescentReport& rep, const std::string& name,
                        const std::string& detail) {
  DescentStage st{name, false, detail};
  rep.stages.push_back(st);
  rep.all_ok = false;
  rep.failure = name + ": " + detail;
  return st;
}

void stage_ok(DescentReport& rep, const std::string& name, const std::string& detail) {
  rep.stages.push_back({name, true, detail});
}

}  // namespace

DescentReport descent_chain(const DescentInput& input) {
  DescentReport rep;
  rep.all_ok = true;
  rep.input_group = input.p;

  if (static_cast<int>(input.parity.size()) != input.p.ngens())
    throw ConfigError("descent: parity map must assign 0/1 to every generator");
  for (int v : input.parity)
    if (v != 0 && v != 1) throw ConfigError("descent: parity values must be 0 or 1");
  for (const auto& [w, ord] : input.links)
    if (!input.allow_any_link_order && ord != 2 && ord != 3)
      throw ConfigError("descent: link orders are 2 or 3 (A1/A2 links); override to relax");
  if (input.characters < 1)
    throw ConfigError("descent: need at least one character");

  // Optional predicate gate on a supplied representation of the input group.
  if (input.test_rep) {
    rep.gate_checked = true;
    Representation r(input.p, *input.test_rep);
    bool ok = picard_lefschetz_check(r, input.gamma1, input.gamma2);
    if (!ok) {
      stage_fail(rep, "monodromy predicates",
                 "supplied representation violates R(g1)^2 = I or R(g2) = I");
      return rep;
    }
    stage_ok(rep, "monodromy predicates", "supplied representation satisfies both");
  }

  std::vector<Word> extra;
  for (const Word& w : input.gamma1) extra.push_back(w * w);
  for (const Word& w : input.gamma2) extra.push_back(w);
  rep.quotient_group = quotient_by(input.p, extra);
  stage_ok(rep, "quotient",
           "added " + std::to_string(extra.size()) + " relators (squared gamma1, gamma2)");

  FiniteHom parity{rep.quotient_group, FiniteTarget::cyclic(2), input.parity};
  if (auto bad = parity.check()) {
    stage_fail(rep, "index-two kernel", "parity map is not a homomorphism: " + *bad);
    return rep;
  }
  bool surjective = false;
  for (int v : input.parity) surjective = surjective || v == 1;
  if (!surjective) {
    stage_fail(rep, "index-two kernel", "parity map is trivial, no double cover");
    return rep;
  }
  SubgroupData s2 = kernel_subgroup(rep.quotient_group, parity);
  rep.index2 = s2.index();
  rep.kernel_generators = s2.kernel_presentation.ngens();
  rep.kernel_relators = static_cast<long>(s2.kernel_presentation.relators.size());
  stage_ok(rep, "index-two kernel",
           "index " + std::to_string(rep.index2) + ", " +
               std::to_string(rep.kernel_generators) + " Schreier generators");

  std::vector<std::pair<Word, Int>> links_rewritten;
  for (const auto& [w, ord] : input.links) {
    if (parity.eval(w) != parity.target.identity()) {
      stage_fail(rep, "avoidance", "link element " + print_word(w, input.p.generators) +
                                       " is not in the index-two subgroup");
      return rep;
    }
    Word kw = s2.rewrite(w);
    if (kw.empty()) {
      stage_fail(rep, "avoidance", "link element rewrites to the identity");
      return rep;
    }
    links_rewritten.emplace_back(std::move(kw), ord);
  }
  AvoidanceResult av;
  try {
    av = avoidance_subgroup(s2.kernel_presentation, links_rewritten, input.budget);
  } catch (const Error& e) {
    stage_fail(rep, "avoidance", e.what());
    return rep;
  }
  rep.avoidance = av.certificate;
  rep.has_avoidance = true;
  stage_ok(rep, "avoidance",
           "index " + std::to_string(av.certificate.index) + " kernel, " +
               std::to_string(av.certificate.quotients.size()) + " quotient(s) used");

  AbelianizationData ab_av = abelianization(av.subgroup.kernel_presentation);
  if (ab_av.rank == 0) {
    stage_fail(rep, "induction", "avoidance kernel has no free characters");
    return rep;
  }

  Rng rng(input.seed);
  std::vector<Representation> finals;
  bool chars_ok = true;
  for (int k = 0; k < input.characters; ++k) {
    std::vector<Rat> values;
    for (Index i = 0; i < ab_av.rank; ++i) values.push_back(rng.nonzero_rat());
    CharacterVector chi =
        make_character(av.subgroup.kernel_presentation, ab_av, values);
    DescentCharRecord rec;
    rec.chi = chi.values;

    Representation w = character_rep(chi);
    rec.w_valid = !w.validate().has_value();
    Representation v1 = induce(av.subgroup, w);
    rec.inner_valid = !v1.validate().has_value();
    Representation v = induce(s2, v1);
    rec.valid = !v.validate().has_value();
    rec.induced_dim = v.dim();
    rec.picard_ok = picard_lefschetz_check(v, input.gamma1, input.gamma2);
    BurnsideResult b = burnside(v);
    rec.irreducible = b.absolutely_irreducible;
    rec.algebra_dim = static_cast<long>(b.algebra.dim);
    chars_ok = chars_ok && rec.w_valid && rec.inner_valid && rec.valid && rec.picard_ok;
    rep.characters.push_back(std::move(rec));
    finals.push_back(std::move(v));
  }
  if (!chars_ok) {
    stage_fail(rep, "induction", "an induced representation failed validation");
    return rep;
  }
  stage_ok(rep, "induction",
           std::to_string(finals.size()) + " induced representation(s) of dimension " +
               std::to_string(finals[0].dim()));

  const size_t nc = finals.size();
  rep.equivalent.assign(nc, std::vector<bool>(nc, false));
  rep.induced_pairwise_distinct = true;
  for (size_t i = 0; i < nc; ++i) {
    rep.equivalent[i][i] = true;
    for (size_t j = i + 1; j < nc; ++j) {
      bool eq = equivalent_semisimple(finals[i], finals[j]);
      rep.equivalent[i][j] = rep.equivalent[j][i] = eq;
      if (eq) rep.induced_pairwise_distinct = false;
    }
  }
  if (nc > 1 && !rep.induced_pairwise_distinct) {
    stage_fail(rep, "inequivalence", "two sampled characters induced equivalent representations");
    return rep;
  }
  if (nc > 1)
    stage_ok(rep, "inequivalence", "induced representations pairwise inequivalent");

  return rep;
}

DescentInput descent_toy_input(std::uint64_t seed) {
  DescentInput in;
  in.p = parse_presentation("gens: a, gam\n");
  in.gamma1 = {parse_word("gam", in.p)};
  in.parity = {0, 1};
  in.characters = 2;
  in.seed = seed;
  return in;
}

DescentInput descent_s3_input(std::uint64_t seed) {
  DescentInput in;
  in.p = parse_presentation("gens: a, b, gam\n");
  in.gamma1 = {parse_word("gam", in.p)};
  in.parity = {0, 0, 1};
  in.links = {{parse_word("[a,b]", in.p), Int(3)}};
  in.characters = 2;
  in.seed = seed;
  in.budget.max_degree = 3;
  return in;
}

}  // namespace charvar
