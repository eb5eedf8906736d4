#include "doctest.h"

#include "charvar/fox.hpp"

using namespace charvar;

namespace {

Word random_word(Rng& rng, int ngens, int len) {
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i)
    ls.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(ngens))),
                  Int(rng.range(-2, 2))});
  return Word::reduced(std::move(ls));
}

RatMat mat2(Rat a, Rat b, Rat c, Rat d) {
  RatMat m(2, 2);
  m << a, b, c, d;
  return m;
}

Representation irreducible_f2(Index n) {
  Presentation f2;
  f2.generators = {"a", "b"};
  if (n == 2)
    return Representation(
        f2, {mat2(Rat(1), Rat(1), Rat(0), Rat(1)), mat2(Rat(1), Rat(0), Rat(1), Rat(1))});
  // A 3-dimensional pair: a shift-like invertible matrix and a unipotent one.
  RatMat a = RatMat::Zero(3, 3), b = rat_identity(3);
  a(0, 2) = 1;
  a(1, 0) = 1;
  a(2, 1) = 1;
  b(0, 1) = 1;
  b(1, 2) = 1;
  return Representation(f2, {a, b});
}

}  // namespace

TEST_CASE("fox derivative axioms") {
  Word x = Word::generator(0), y = Word::generator(1);

  CHECK(fox_derivative(x, 0) == GroupRingElement::one());
  CHECK(fox_derivative(y, 0).is_zero());
  CHECK(fox_derivative(x.inverse(), 0) ==
        GroupRingElement::of(x.inverse(), Rat(-1)));
  CHECK(fox_derivative(x * y, 1) == GroupRingElement::of(x));

  // d(x^2)/dx = 1 + x, d(x^-2)/dx = -x^-1 - x^-2
  GroupRingElement d2 = fox_derivative(Word::generator(0, 2), 0);
  GroupRingElement expect2 = GroupRingElement::one();
  expect2.add(x, Rat(1));
  CHECK(d2 == expect2);

  GroupRingElement dm2 = fox_derivative(Word::generator(0, -2), 0);
  GroupRingElement em2;
  em2.add(Word::generator(0, -1), Rat(-1));
  em2.add(Word::generator(0, -2), Rat(-1));
  CHECK(dm2 == em2);
}

TEST_CASE("fox derivative satisfies the product rule") {
  Rng rng(71);
  for (int t = 0; t < 500; ++t) {
    Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    int g = static_cast<int>(rng.below(3));
    GroupRingElement lhs = fox_derivative(u * v, g);
    GroupRingElement rhs = fox_derivative(u, g) + fox_derivative(v, g).left_mul(u);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("h1_dimension: worked examples") {
  Presentation z2 = parse_presentation("gens: a, b\nrels: [a,b]");
  H1Report r = h1_dimension(z2, ModuleAction::trivial(2));
  CHECK(r.dimH1 == 2);
  CHECK(r.dimZ1 == 2);
  CHECK(r.dimB1 == 0);
  CHECK(r.is_even);

  // Free group of rank 2, conjugation module at an irreducible 2-dim point:
  // (r-1)N^2 + 1 = 5.
  Representation irr = irreducible_f2(2);
  H1Report f = h1_dimension(irr.group(), ModuleAction::conjugation(irr));
  CHECK(f.dimZ1 == 8);
  CHECK(f.dimB1 == 3);
  CHECK(f.dimH1 == 5);

  // Genus-2 surface group, conjugation module at an irreducible 2-dim point:
  // (2g-2)N^2 + 2 = 10.
  Presentation s2 = parse_presentation("gens: a1, b1, a2, b2\nrels: [a1,b1]*[a2,b2]");
  Representation surf(s2, {irr.mat(0), rat_identity(2), irr.mat(1), rat_identity(2)});
  REQUIRE_FALSE(surf.validate().has_value());
  REQUIRE(burnside(surf).absolutely_irreducible);
  H1Report g = h1_dimension(s2, ModuleAction::conjugation(surf));
  CHECK(g.dimH1 == 10);
  CHECK(g.is_even);
}

TEST_CASE("coboundaries are cocycles") {
  // The Fox Jacobian kills every vector of the form (act(x_i) v - v)_i.
  Rng rng(5151);
  RatMat swap = mat2(Rat(0), Rat(1), Rat(1), Rat(0));
  RatMat order3 = mat2(Rat(0), Rat(-1), Rat(1), Rat(-1));  // companion of x^2+x+1
  RatMat uni = mat2(Rat(1), Rat(1), Rat(0), Rat(1));
  RatMat low = mat2(Rat(1), Rat(0), Rat(1), Rat(1));
  RatMat d23 = mat2(Rat(2), Rat(0), Rat(0), Rat(3));
  RatMat d57 = mat2(Rat(5), Rat(0), Rat(0), Rat(7));
  std::vector<Representation> corpus;
  corpus.emplace_back(parse_presentation("gens: a, b\nrels: [a,b]"),
                      std::vector<RatMat>{d23, d57});
  corpus.emplace_back(parse_presentation("gens: t\nrels: t^3"),
                      std::vector<RatMat>{order3});
  corpus.emplace_back(parse_presentation("gens: a1, b1, a2, b2\nrels: [a1,b1]*[a2,b2]"),
                      std::vector<RatMat>{uni, rat_identity(2), low, rat_identity(2)});
  corpus.emplace_back(parse_presentation("gens: a, b\nrels: a^2, b^3, (a*b)^2"),
                      std::vector<RatMat>{swap, order3});
  for (const Representation& rep : corpus) {
    const Presentation& p = rep.group();
    REQUIRE_FALSE(rep.validate().has_value());
    ModuleAction act = ModuleAction::conjugation(rep);

    const Index n = p.ngens(), m = act.dim;
    RatMat jac = RatMat::Zero(static_cast<Index>(p.relators.size()) * m, n * m);
    for (Index ri = 0; ri < static_cast<Index>(p.relators.size()); ++ri)
      for (Index gi = 0; gi < n; ++gi)
        jac.block(ri * m, gi * m, m, m) =
            act.eval(fox_derivative(p.relators[static_cast<size_t>(ri)],
                                    static_cast<int>(gi)));
    for (int t = 0; t < 5; ++t) {
      RatVec v(m);
      for (Index i = 0; i < m; ++i) v(i) = Rat(rng.range(-3, 3));
      RatVec cob(n * m);
      for (Index gi = 0; gi < n; ++gi)
        cob.segment(gi * m, m) = act.mats[static_cast<size_t>(gi)] * v - v;
      if (jac.rows() > 0) CHECK((jac * cob).isZero());
    }
  }
}

TEST_CASE("H1 of a finite cyclic group vanishes over Q") {
  // t^3 with the rational order-3 module: d(t^3)/dt = 1 + t + t^2 acts as
  // I + M + M^2 = 0, so Z1 is everything, and B1 fills it.
  Presentation p = parse_presentation("gens: t\nrels: t^3");
  RatMat order3 = mat2(Rat(0), Rat(-1), Rat(1), Rat(-1));
  H1Report r = h1_dimension(p, ModuleAction::from_matrices({order3}));
  CHECK(r.dimZ1 == 2);
  CHECK(r.dimB1 == 2);
  CHECK(r.dimH1 == 0);
}

TEST_CASE("h1_dimension rejects assignments that break the relators") {
  Presentation p = parse_presentation("gens: t\nrels: t^3");
  RatMat two = mat2(Rat(2), Rat(0), Rat(0), Rat(1));
  CHECK_THROWS_WITH_AS(h1_dimension(p, ModuleAction::from_matrices({two})),
                       doctest::Contains("invalid action"), Error);
}

TEST_CASE("h1_dimension is invariant under relator shuffles and conjugation") {
  Presentation p = parse_presentation("gens: a, b\nrels: a^2, b^3, (a*b)^2");
  H1Report base = h1_dimension(p, ModuleAction::trivial(2));

  Presentation shuffled = p;
  std::swap(shuffled.relators[0], shuffled.relators[2]);
  CHECK(h1_dimension(shuffled, ModuleAction::trivial(2)).dimH1 == base.dimH1);

  // Replace a relator by a conjugate.
  Presentation conj = p;
  Word c = parse_word("a*b", p);
  conj.relators[1] = c * conj.relators[1] * c.inverse();
  CHECK(h1_dimension(conj, ModuleAction::trivial(2)).dimH1 == base.dimH1);
}

TEST_CASE("local_charvar_dim") {
  // Rank-1 case: the conjugation module is trivial and H1 = b1.
  Presentation z2 = parse_presentation("gens: a, b\nrels: [a,b]");
  RatMat two(1, 1), three(1, 1);
  two(0, 0) = 2;
  three(0, 0) = 3;
  H1Report r = local_charvar_dim(Representation(z2, {two, three}));
  CHECK(r.dimH1 == 2);
  CHECK(r.is_even);

  // Free group of rank 3 at an irreducible 2-dim point: (r-1)N^2 + 1 = 9.
  Presentation f3;
  f3.generators = {"a", "b", "c"};
  Representation irr2 = irreducible_f2(2);
  Representation f3rep(f3, {irr2.mat(0), irr2.mat(1), rat_identity(2)});
  H1Report f = local_charvar_dim(f3rep);
  CHECK(f.dimH1 == 9);
  CHECK_FALSE(f.is_even);  // free groups are not projective-variety groups

  // Reducible points are refused.
  Representation diag(z2, {RatMat(Rat(2) * rat_identity(2)),
                           RatMat(Rat(3) * rat_identity(2))});
  CHECK_THROWS_WITH_AS(local_charvar_dim(diag), doctest::Contains("irreducible"),
                       Error);
}

TEST_CASE("h1_dimension on a 3-dimensional irreducible point") {
  Representation irr = irreducible_f2(3);
  REQUIRE(burnside(irr).absolutely_irreducible);
  H1Report r = local_charvar_dim(irr);
  CHECK(r.dimH1 == (2 - 1) * 9 + 1);
}
