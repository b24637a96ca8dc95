#include <doctest.h>

#include "nevk/errors.hpp"
#include "nevk/piecewise.hpp"
#include "nevk/rational.hpp"
#include "test_util.hpp"

using namespace nevk;

TEST_CASE("valuation basics") {
  CHECK(valuation(Rat(12), Int(2)) == Valuation(Rat(2)));
  CHECK(valuation(Rat(0), Int(5)).isInfinite());
  CHECK(valuation(Rat(3, 10), Int(5)) == Valuation(Rat(-1)));
  CHECK(valuation(Rat(5), Int(2)) == Valuation(Rat(0)));
  CHECK_THROWS_AS(valuation(Rat(1), Int(6)), ConfigError);
}

TEST_CASE("valuation ordering with infinity maximal") {
  Valuation inf = Valuation::infinity();
  Valuation two{Rat(2)};
  CHECK(two < inf);
  CHECK_FALSE(inf < two);
  CHECK(inf == Valuation::infinity());
  CHECK(min(inf, two) == two);
}

TEST_CASE("ultrametric law and multiplicativity (property)") {
  std::mt19937 rng(20260823);
  for (const long pl : {2L, 3L, 5L}) {
    Int p(pl);
    for (int iter = 0; iter < 1000; ++iter) {
      Rat a = testutil::randomRat(rng);
      Rat b = testutil::randomRat(rng);
      Valuation va = valuation(a, p), vb = valuation(b, p);
      Valuation vsum = valuation(a + b, p);
      CHECK(min(va, vb) <= vsum);
      if (!(va == vb)) CHECK(vsum == min(va, vb));
      CHECK(valuation(a * b, p) == va + vb);
    }
  }
}

TEST_CASE("plEval on simple functions") {
  PiecewiseLinear relu =
      plMax(PiecewiseLinear::affine(Rat(1), Rat(0)),
            PiecewiseLinear::constant(Rat(0)));
  CHECK(relu(Rat(3)) == Rat(3));
  CHECK(relu(Rat(-2)) == Rat(0));
  CHECK(relu(Rat(0)) == Rat(0));

  PiecewiseLinear seven = PiecewiseLinear::constant(Rat(7));
  CHECK(seven(Rat(100)) == Rat(7));

  // slope 0 then slope 2, breakpoint at 1, continuous
  PiecewiseLinear f(Rat(0), {Rat(1)},
                    {Line{Rat(0), Rat(0)}, Line{Rat(2), Rat(-2)}});
  CHECK(f(Rat(5, 2)) == Rat(3));
  CHECK_THROWS_AS(f(Rat(-1)), DomainError);
}

TEST_CASE("plMax examples") {
  PiecewiseLinear id = PiecewiseLinear::affine(Rat(1), Rat(0));
  PiecewiseLinear zero = PiecewiseLinear::constant(Rat(0));
  PiecewiseLinear m = plMax(id, zero);
  REQUIRE(m.breakpoints().size() == 1);
  CHECK(m.breakpoints()[0] == Rat(0));
  CHECK(m.pieces()[0].slope == Rat(0));
  CHECK(m.pieces()[1].slope == Rat(1));

  CHECK(plMax(m, m) == m);  // idempotence

  // max(2s-2, 0) on [0, inf): 0 on [0,1], 2s-2 after
  PiecewiseLinear g = plMax(PiecewiseLinear::affine(Rat(2), Rat(-2)),
                            zero.restrictLower(Rat(0)));
  CHECK(g(Rat(0)) == Rat(0));
  CHECK(g(Rat(1)) == Rat(0));
  CHECK(g(Rat(2)) == Rat(2));
  REQUIRE(g.breakpoints().size() == 1);
  CHECK(g.breakpoints()[0] == Rat(1));
}

TEST_CASE("plCombine examples") {
  PiecewiseLinear id = PiecewiseLinear::affine(Rat(1), Rat(0));
  PiecewiseLinear one = PiecewiseLinear::constant(Rat(1));
  PiecewiseLinear relu = plMax(id, PiecewiseLinear::constant(Rat(0)));

  CHECK(plCombine(relu, relu, Rat(1), Rat(-1)) ==
        PiecewiseLinear::constant(Rat(0)));
  CHECK(plCombine(id, one, Rat(3), Rat(2)) ==
        PiecewiseLinear::affine(Rat(3), Rat(2)));

  // max(0,s) - s = max(-s, 0)
  PiecewiseLinear d = plCombine(relu, id, Rat(1), Rat(-1));
  CHECK(d(Rat(5)) == Rat(0));
  CHECK(d(Rat(-3)) == Rat(3));
}

TEST_CASE("eventual slope and boundedness") {
  PiecewiseLinear relu = plMax(PiecewiseLinear::affine(Rat(1), Rat(0)),
                               PiecewiseLinear::constant(Rat(0)));
  CHECK(relu.eventualSlope() == Rat(1));
  CHECK(PiecewiseLinear::constant(Rat(9)).eventualSlope() == Rat(0));

  auto b0 = PiecewiseLinear::constant(Rat(0)).boundedAbove();
  CHECK(b0.bounded);
  CHECK(b0.supremum == Rat(0));

  auto b1 = PiecewiseLinear::affine(Rat(-1), Rat(0))
                .restrictLower(Rat(0))
                .boundedAbove();
  CHECK(b1.bounded);
  CHECK(b1.supremum == Rat(0));

  CHECK_FALSE(relu.boundedAbove().bounded);
  // full line, decreasing to the left: +inf at -inf
  CHECK_FALSE(PiecewiseLinear::affine(Rat(-1), Rat(0)).boundedAbove().bounded);
}

TEST_CASE("continuity invariant is enforced") {
  CHECK_THROWS_AS(PiecewiseLinear(Rat(0), {Rat(1)},
                                  {Line{Rat(0), Rat(0)}, Line{Rat(2), Rat(5)}}),
                  InvariantViolation);
}

TEST_CASE("plMax/plCombine agree with pointwise scalar ops (property)") {
  std::mt19937 rng(424242);
  auto randomPL = [&rng]() {
    // random upper envelope of a few lines, a convex but generic sample
    std::vector<Line> lines;
    std::uniform_int_distribution<int> n(1, 5);
    int k = n(rng);
    for (int i = 0; i < k; ++i)
      lines.push_back(
          Line{testutil::randomRat(rng, 10), testutil::randomRat(rng, 10)});
    return PiecewiseLinear::upperEnvelope(std::move(lines));
  };
  for (int iter = 0; iter < 50; ++iter) {
    PiecewiseLinear f = randomPL(), g = randomPL();
    Rat alpha = testutil::randomRat(rng, 5), beta = testutil::randomRat(rng, 5);
    PiecewiseLinear mx = plMax(f, g);
    PiecewiseLinear cb = plCombine(f, g, alpha, beta);
    for (int k = 0; k < 20; ++k) {
      Rat s = testutil::randomRat(rng, 30);
      CHECK(mx(s) == std::max(f(s), g(s)));
      CHECK(cb(s) == alpha * f(s) + beta * g(s));
    }
    // continuity at every breakpoint, evaluated from both pieces
    for (std::size_t i = 0; i < mx.breakpoints().size(); ++i) {
      const Rat& b = mx.breakpoints()[i];
      CHECK(mx.pieces()[i].at(b) == mx.pieces()[i + 1].at(b));
    }
  }
}

TEST_CASE("reflect") {
  PiecewiseLinear relu = plMax(PiecewiseLinear::affine(Rat(1), Rat(0)),
                               PiecewiseLinear::constant(Rat(0)));
  PiecewiseLinear r = relu.reflect();
  CHECK(r(Rat(-4)) == Rat(4));
  CHECK(r(Rat(3)) == Rat(0));
  CHECK_THROWS_AS(relu.restrictLower(Rat(0)).reflect(), DomainError);
}

TEST_CASE("rational string round trip") {
  CHECK(ratFromString("3/4") == Rat(3, 4));
  CHECK(ratFromString("-7") == Rat(-7));
  CHECK(ratToString(ratOf(22, 4)) == "11/2");
  CHECK_THROWS_AS(ratFromString("1/0"), ParseError);
  CHECK_THROWS_AS(ratFromString("a"), ParseError);
  CHECK_THROWS_AS(ratFromString("1.5"), ParseError);
}
