#include "doctest.h"

#include "charvar/subgroup.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

Presentation free_group(int rank) {
  Presentation p;
  for (int i = 1; i <= rank; ++i) p.generators.push_back("x" + std::to_string(i));
  return p;
}

Word random_member(Rng& rng, const SubgroupData& s, int len) {
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i)
    ls.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(s.ambient.ngens()))),
                  Int(rng.below(2) ? 1 : -1)});
  Word w = Word::reduced(std::move(ls));
  int c = s.hom.eval(w);
  return w * s.transversal[static_cast<size_t>(s.coset_of(c))].inverse();
}

}  // namespace

TEST_CASE("finite targets") {
  FiniteTarget z4 = FiniteTarget::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.pow(1, Int(-1)) == 3);
  CHECK(z4.element_order(2) == 2);

  FiniteTarget s3 = FiniteTarget::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.label(s3.identity()) == "e");

  FiniteTarget prod = FiniteTarget::product(z4, s3);
  CHECK(prod.order() == 24);
  CHECK(prod.identity() == z4.identity() * 6 + s3.identity());

  // A latin square that is not a group law (no associativity).
  CHECK_THROWS_AS(FiniteTarget::from_table("bad",
                                           {{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}},
                                           {"0", "1", "2", "3", "4"}),
                  Error);
}

TEST_CASE("kernel subgroup: 2Z inside Z") {
  Presentation z = free_group(1);
  FiniteHom hom{z, FiniteTarget::cyclic(2), {1}};
  SubgroupData s = kernel_subgroup(z, hom);
  CHECK(s.index() == 2);
  REQUIRE(s.schreier_gens.size() == 1);
  CHECK(s.schreier_gens[0].ambient == parse_word("x1^2", z));
  CHECK(s.kernel_presentation.relators.empty());
}

TEST_CASE("kernel subgroup: rank 3 for F2 over Z/2") {
  Presentation f2 = free_group(2);
  FiniteHom hom{f2, FiniteTarget::cyclic(2), {1, 1}};
  SubgroupData s = kernel_subgroup(f2, hom);
  CHECK(s.index() == 2);
  CHECK(s.kernel_presentation.ngens() == 3);  // 1 + n(r-1) = 1 + 2*1
  CHECK(betti1(s.kernel_presentation) == 3);
}

TEST_CASE("kernel subgroup: 3Z via a 3-cycle in S3") {
  Presentation z = free_group(1);
  FiniteTarget s3 = FiniteTarget::symmetric(3);
  int three_cycle = -1;
  for (int g = 0; g < s3.order(); ++g)
    if (s3.element_order(g) == 3) {
      three_cycle = g;
      break;
    }
  REQUIRE(three_cycle >= 0);
  SubgroupData s = kernel_subgroup(z, FiniteHom{z, s3, {three_cycle}});
  CHECK(s.index() == 3);
  REQUIRE(s.schreier_gens.size() == 1);
  CHECK(s.schreier_gens[0].ambient == parse_word("x1^3", z));
}

TEST_CASE("kernel subgroup rejects invalid homomorphisms") {
  Presentation p = parse_presentation("gens: t\nrels: t^3");
  CHECK_THROWS_AS(kernel_subgroup(p, FiniteHom{p, FiniteTarget::cyclic(2), {1}}), Error);
}

TEST_CASE("Nielsen-Schreier ranks over cyclic and symmetric targets") {
  for (int r = 1; r <= 3; ++r) {
    Presentation f = free_group(r);
    for (long n = 2; n <= 5; ++n) {
      FiniteHom hom{f, FiniteTarget::cyclic(n),
                    std::vector<int>(static_cast<size_t>(r), 1)};
      SubgroupData s = kernel_subgroup(f, hom);
      CHECK(s.index() == n);
      CHECK(s.kernel_presentation.ngens() == 1 + n * (r - 1));
      CHECK(betti1(s.kernel_presentation) == 1 + n * (r - 1));
    }
  }
  // Index 6 via a surjection onto S3.
  Presentation f2 = free_group(2);
  FiniteTarget s3 = FiniteTarget::symmetric(3);
  int transposition = -1, three_cycle = -1;
  for (int g = 0; g < 6; ++g) {
    if (s3.element_order(g) == 2 && transposition < 0) transposition = g;
    if (s3.element_order(g) == 3 && three_cycle < 0) three_cycle = g;
  }
  SubgroupData s = kernel_subgroup(f2, FiniteHom{f2, s3, {transposition, three_cycle}});
  CHECK(s.index() == 6);
  CHECK(s.kernel_presentation.ngens() == 7);  // 1 + 6(2-1)
}

TEST_CASE("rewrite: examples and round trips") {
  Presentation z = free_group(1);
  SubgroupData s = kernel_subgroup(z, FiniteHom{z, FiniteTarget::cyclic(2), {1}});
  CHECK(s.rewrite(parse_word("x1^2", z)) == Word::generator(0));
  CHECK_THROWS_AS(s.rewrite(parse_word("x1", z)), Error);

  Rng rng(99);
  std::vector<SubgroupData> corpus;
  corpus.push_back(std::move(s));
  Presentation f2 = free_group(2);
  corpus.push_back(kernel_subgroup(f2, FiniteHom{f2, FiniteTarget::cyclic(3), {1, 1}}));
  Presentation f3 = free_group(3);
  corpus.push_back(kernel_subgroup(f3, FiniteHom{f3, FiniteTarget::cyclic(2), {1, 0, 1}}));
  for (const SubgroupData& sub : corpus)
    for (int t = 0; t < 70; ++t) {
      Word member = random_member(rng, sub, 10);
      Word rewritten = sub.rewrite(member);
      CHECK(sub.ambient_word(rewritten) == member);
    }
}

TEST_CASE("cyclic covers match the Riemann-Hurwitz oracle") {
  struct Case {
    long N, b, genus;
  } cases[] = {{2, 6, 2}, {2, 2, 0}, {3, 4, 3}};
  for (auto c : cases) {
    GroupWithAction g = cyclic_cover_group(c.N, c.b);
    CHECK(g.genus == c.genus);
    CHECK(g.ab.rank == 2 * c.genus);
    CHECK(g.ab.torsion.empty());
    CHECK(g.genus == oracles::riemann_hurwitz_genus(c.N, c.b));
  }
}

TEST_CASE("cyclic covers: Riemann-Hurwitz across the small grid") {
  for (long N = 2; N <= 4; ++N)
    for (long b = 1; b <= 8; ++b) {
      GroupWithAction g = cyclic_cover_group(N, b);
      CAPTURE(N);
      CAPTURE(b);
      CHECK(g.genus == oracles::riemann_hurwitz_genus(N, b));
      CHECK(g.ab.torsion.empty());
      ActionCheck ok = validate_action(g.group, g.action);
      CHECK(ok.ok);
    }
}

TEST_CASE("deck action on H1") {
  GroupWithAction hyper = cyclic_cover_group(2, 6);
  IntMat a = h1_action(hyper);
  CHECK(a == IntMat(-int_identity(4)));  // hyperelliptic involution

  for (long N = 2; N <= 4; ++N)
    for (long b = 3; b <= 6; ++b) {
      GroupWithAction g = cyclic_cover_group(N, b);
      if (g.genus == 0) continue;
      IntMat m = h1_action(g);  // internally certifies A^N = I
      RatMat fixed = to_rat(m) - rat_identity(m.rows());
      CHECK(rank_and_kernel(fixed).kernel.empty());
    }

  GroupWithAction degenerate = cyclic_cover_group(1, 3);
  CHECK(degenerate.genus == 0);
  CHECK(h1_action(degenerate).rows() == 0);
}

TEST_CASE("avoidance: abelian certificate for Z/2 * Z/3") {
  Presentation p = parse_presentation("gens: a, b\nrels: a^2, b^3");
  AvoidanceResult r = avoidance_subgroup(
      p, {{parse_word("a", p), Int(2)}, {parse_word("b", p), Int(3)}});
  CHECK(r.certificate.index == 6);
  REQUIRE(r.certificate.elements.size() == 2);
  for (const auto& e : r.certificate.elements) CHECK(e.image_label != "0");
  CHECK(r.subgroup.index() == 6);
}

TEST_CASE("avoidance: empty list gives the whole group") {
  Presentation p = parse_presentation("gens: a, b\nrels: [a,b]");
  AvoidanceResult r = avoidance_subgroup(p, {});
  CHECK(r.subgroup.index() == 1);
  CHECK(r.certificate.index == 1);
  CHECK(r.subgroup.kernel_presentation.ngens() == 2);
}

TEST_CASE("avoidance: S3 search catches an element invisible to H1") {
  Presentation p = parse_presentation("gens: a, b\nrels: a^2, b^3, (a*b)^2");
  AvoidanceResult r = avoidance_subgroup(p, {{parse_word("b", p), Int(3)}});
  REQUIRE(r.certificate.elements.size() == 1);
  CHECK(r.certificate.elements[0].image_order == 3);
  CHECK(r.certificate.quotients[r.certificate.elements[0].quotient].target.name() ==
        "S3");
}

TEST_CASE("avoidance: intersecting two quotients via the product target") {
  Presentation z2 = parse_presentation("gens: x, y\nrels: [x,y]");
  AvoidanceResult r = avoidance_subgroup(
      z2, {{parse_word("x", z2), Int(2)}, {parse_word("y", z2), Int(2)}});
  CHECK(r.certificate.quotients.size() == 2);
  CHECK(r.certificate.index == 4);  // Z/2 x Z/2
  CHECK(r.subgroup.index() == 4);
  // Every listed element is nontrivial in its certifying quotient.
  for (const auto& e : r.certificate.elements) CHECK(e.image_label != "0");
}

TEST_CASE("avoidance: explicit failure when the budget is too small") {
  // b is invisible to H1 and to S2, and the budget stops there.
  Presentation p = parse_presentation("gens: a, b\nrels: a^2, b^3, (a*b)^2");
  AvoidanceBudget tiny;
  tiny.max_degree = 2;
  CHECK_THROWS_WITH_AS(avoidance_subgroup(p, {{parse_word("b", p), Int(3)}}, tiny),
                       doctest::Contains("budget exhausted"), Error);
}

TEST_CASE("avoidance: rejects the identity word") {
  Presentation p = parse_presentation("gens: a");
  CHECK_THROWS_AS(avoidance_subgroup(p, {{Word(), Int(2)}}), Error);
}
