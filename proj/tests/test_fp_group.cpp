#include "doctest.h"

#include <algorithm>

#include "charvar/fp_group.hpp"

using namespace charvar;

namespace {

Presentation parse(const char* s) { return parse_presentation(s); }

}  // namespace

TEST_CASE("abelianization: worked examples") {
  AbelianizationData z2 = abelianization(parse("gens: a, b\nrels: [a,b]"));
  CHECK(z2.rank == 2);
  CHECK(z2.torsion.empty());

  AbelianizationData t3 = abelianization(parse("gens: t\nrels: t^3"));
  CHECK(t3.rank == 0);
  CHECK(t3.torsion == std::vector<Int>{3});

  AbelianizationData g2 =
      abelianization(parse("gens: a1, b1, a2, b2\nrels: [a1,b1]*[a2,b2]"));
  CHECK(g2.rank == 4);
  CHECK(g2.torsion.empty());
}

TEST_CASE("abelianization: free coordinates evaluate generators") {
  Presentation p = parse("gens: a, b\nrels: a^2*b^-2");
  AbelianizationData ab = abelianization(p);
  CHECK(ab.rank == 1);
  // a and b have the same class in H1; their free coordinates agree.
  CHECK(ab.free_coords(exponent_vector(parse_word("a", p), 2)) ==
        ab.free_coords(exponent_vector(parse_word("b", p), 2)));
  CHECK(ab.lattice_contains(exponent_vector(parse_word("a^2*b^-2", p), 2)));
  CHECK_FALSE(ab.lattice_contains(exponent_vector(parse_word("a", p), 2)));
}

TEST_CASE("abelianization is invariant under relator and generator shuffles") {
  Presentation p = parse("gens: x, y, z\nrels: x^2*y^4, [y,z], z^6");
  AbelianizationData base = abelianization(p);

  Presentation shuffled = p;
  std::swap(shuffled.relators[0], shuffled.relators[2]);
  AbelianizationData s = abelianization(shuffled);
  CHECK(s.rank == base.rank);
  CHECK(s.torsion == base.torsion);

  // Relabel generators z, x, y -> x, y, z.
  Presentation relabeled = parse("gens: z, x, y\nrels: x^2*y^4, [y,z], z^6");
  AbelianizationData r = abelianization(relabeled);
  CHECK(r.rank == base.rank);
  CHECK(r.torsion == base.torsion);
}

TEST_CASE("quotient_by") {
  Presentation f2 = parse("gens: a, b");
  Presentation q = quotient_by(f2, {parse_word("a", f2)});
  CHECK(betti1(q) == 1);

  Presentation z = parse("gens: a");
  AbelianizationData mod2 = abelianization(quotient_by(z, {parse_word("a^2", z)}));
  CHECK(mod2.rank == 0);
  CHECK(mod2.torsion == std::vector<Int>{2});

  CHECK(quotient_by(f2, {}) == f2);
  CHECK_THROWS_AS(quotient_by(z, {Word::generator(5)}), Error);
}

TEST_CASE("betti1 never grows under quotients") {
  Presentation p = parse("gens: a, b, c\nrels: [a,b]");
  Index before = betti1(p);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Letter> ls;
    for (int i = 0; i < 4; ++i)
      ls.push_back({static_cast<int>(rng.below(3)), Int(rng.range(-2, 2))});
    Word w = Word::reduced(std::move(ls));
    CHECK(betti1(quotient_by(p, {w})) <= before);
  }
}

TEST_CASE("semidirect product: Z^2 by inversion") {
  Presentation z2 = parse("gens: a, b\nrels: [a,b]");
  CyclicAction inv{2, {parse_word("a^-1", z2), parse_word("b^-1", z2)}};
  Presentation tot = semidirect_cyclic(z2, inv);
  AbelianizationData ab = abelianization(tot);
  CHECK(ab.rank == 0);
  CHECK(ab.torsion == std::vector<Int>{2, 2, 2});
}

TEST_CASE("semidirect product: trivial action keeps the rank") {
  Presentation p = parse("gens: a, b\nrels: [a,b]");
  CyclicAction id{1, {parse_word("a", p), parse_word("b", p)}};
  CHECK(betti1(semidirect_cyclic(p, id)) == betti1(p));
}

TEST_CASE("validate_action") {
  Presentation z2 = parse("gens: a, b\nrels: [a,b]");
  CyclicAction good{2, {parse_word("a^-1", z2), parse_word("b^-1", z2)}};
  CHECK(validate_action(z2, good).ok);

  CyclicAction bad{2, {parse_word("a^2", z2), parse_word("b", z2)}};
  ActionCheck c = validate_action(z2, bad);
  CHECK_FALSE(c.ok);
  REQUIRE(!c.failures.empty());

  CyclicAction wrong_order{3, {parse_word("a^-1", z2), parse_word("b^-1", z2)}};
  CHECK_FALSE(validate_action(z2, wrong_order).ok);
}

TEST_CASE("validate_action with matrix witnesses") {
  Presentation z2 = parse("gens: a, b\nrels: [a,b]");
  CyclicAction inv{2, {parse_word("a^-1", z2), parse_word("b^-1", z2)}};

  // rho(a) = diag(2, 1/2), rho(b) = diag(3, 1/3), t swaps the coordinates:
  // t rho(a) t^-1 = rho(a)^-1.
  RatMat da = RatMat::Zero(2, 2), db = RatMat::Zero(2, 2), sw = RatMat::Zero(2, 2);
  da(0, 0) = Rat(2);
  da(1, 1) = Rat(1, 2);
  db(0, 0) = Rat(3);
  db(1, 1) = Rat(1, 3);
  sw(0, 1) = 1;
  sw(1, 0) = 1;
  CHECK(validate_action(z2, inv, {{{da, db}, sw}}).ok);

  // The identity witness does not conjugate rho(a) to rho(a)^-1.
  CHECK_FALSE(validate_action(z2, inv, {{{da, db}, rat_identity(2)}}).ok);
}

TEST_CASE("combine_dimensions") {
  CHECK(combine_dimensions({{1, 2}}, 2) == 4);
  CHECK(combine_dimensions({{1, 0}, {2, 6}}, 2) == 6);
  CHECK(combine_dimensions({}, 5) == 0);
  CHECK(combine_dimensions({{2, 3}, {3, 5}}, 7) == 11);  // 2+2+3 beats 3+3+...

  // positive iff some d(M) > 0 with M <= N
  for (long n = 1; n <= 6; ++n) {
    CHECK(combine_dimensions({{4, 9}}, n) == (n >= 4 ? 9 : 0));
    CHECK((combine_dimensions({{4, 9}}, n) > 0) == (n >= 4));
  }
  CHECK_THROWS_AS(combine_dimensions({{1, -2}}, 3), Error);
}
