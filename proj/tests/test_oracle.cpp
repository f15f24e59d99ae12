#include "oracle.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "dompoly/dominance.hpp"
#include "dompoly/polynomial.hpp"

using namespace dompoly;
using namespace dompoly::oracle;

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPoly(std::move(out));
}

}  // namespace

TEST_CASE("squarefree decomposition splits by multiplicity") {
  // (X-1)^2 (X+3)
  IntPoly f = mul(mul(IntPoly{1, -1}, IntPoly{1, -1}), IntPoly{1, 3});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == IntPoly({1, 3}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == IntPoly({1, -1}));
  CHECK(parts[1].second == 2);

  // (X-2)^3, with content and a negative lead thrown in
  IntPoly cube = mul(mul(IntPoly{1, -2}, IntPoly{1, -2}), IntPoly{1, -2});
  IntPoly scaled = negate(IntPoly(std::vector<Int>{
      cube.coeffs()[0] * 6, cube.coeffs()[1] * 6, cube.coeffs()[2] * 6,
      cube.coeffs()[3] * 6}));
  auto cparts = squarefree_decomposition(scaled);
  REQUIRE(cparts.size() == 1);
  CHECK(cparts[0].first == IntPoly({1, -2}));
  CHECK(cparts[0].second == 3);

  // squarefree input comes back whole
  auto sq = squarefree_decomposition(IntPoly{1, 0, -2});
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].first == IntPoly({1, 0, -2}));
  CHECK(sq[0].second == 1);

  CHECK_THROWS_AS(squarefree_decomposition(IntPoly{5}),
                  std::invalid_argument);
}

TEST_CASE("root boxes isolate the roots of X^2 - 2") {
  auto boxes = root_boxes(IntPoly{1, 0, -2}, make_rat(1, 1000));
  REQUIRE(boxes.size() == 2);
  int pos = boxes[0].re_lo > 0 ? 0 : 1;
  int neg = 1 - pos;
  // sqrt(2) = 1.41421356...
  CHECK(boxes[pos].is_real);
  CHECK(boxes[pos].multiplicity == 1);
  CHECK(boxes[pos].re_lo > make_rat(1414, 1000));
  CHECK(boxes[pos].re_hi < make_rat(1415, 1000));
  CHECK(boxes[pos].mod_lo > make_rat(1414, 1000));
  CHECK(boxes[pos].mod_hi < make_rat(1415, 1000));
  CHECK(boxes[neg].is_real);
  CHECK(boxes[neg].re_hi < make_rat(-1414, 1000));
  CHECK(boxes[neg].re_lo > make_rat(-1415, 1000));
  CHECK(boxes[neg].mod_lo > make_rat(1414, 1000));
  CHECK(boxes[neg].mod_hi < make_rat(1415, 1000));
}

TEST_CASE("root boxes carry multiplicities and exact rational points") {
  // (X-1)^2 (X+3): rational roots land on exact point boxes
  IntPoly f = mul(mul(IntPoly{1, -1}, IntPoly{1, -1}), IntPoly{1, 3});
  auto boxes = root_boxes(f, make_rat(1, 100));
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) {
    CHECK(b.is_real);
    if (b.re_lo > 0) {
      CHECK(b.multiplicity == 2);
      CHECK(b.re_lo <= 1);
      CHECK(b.re_hi >= 1);
      CHECK(b.mod_hi >= 1);
    } else {
      CHECK(b.multiplicity == 1);
      CHECK(b.re_lo <= -3);
      CHECK(b.re_hi >= -3);
      CHECK(b.mod_lo <= 3);
      CHECK(b.mod_hi >= 3);
    }
  }
}

TEST_CASE("root boxes separate a conjugate pair from a real root") {
  // (X-1)(X^2 - 2X + 2): roots 1 and 1 +/- i, all with real part 1
  IntPoly f = mul(IntPoly{1, -1}, IntPoly{1, -2, 2});
  auto boxes = root_boxes(f, make_rat(1, 1000));
  REQUIRE(boxes.size() == 3);
  int reals = 0, complexes = 0;
  for (const auto& b : boxes) {
    if (b.is_real) {
      ++reals;
      CHECK(b.re_lo <= 1);
      CHECK(b.re_hi >= 1);
    } else {
      ++complexes;
      // |1 +/- i| = sqrt(2)
      CHECK(b.mod_lo > make_rat(1414, 1000));
      CHECK(b.mod_hi < make_rat(1415, 1000));
    }
  }
  CHECK(reals == 1);
  CHECK(complexes == 2);
}

TEST_CASE("oracle dominance on hand fixtures") {
  CHECK(oracle_dominant(IntPoly{1, -1, -1}));        // golden ratio
  CHECK(oracle_dominant(IntPoly{1, 0, 0, -1, -1}));  // X^4 - X - 1
  CHECK(oracle_dominant(IntPoly{1, 0, -1, -1}));     // X^3 - X - 1
  CHECK(oracle_dominant(IntPoly{1, 0, -5, 1}));      // extreme root negative
  CHECK(oracle_dominant(IntPoly{1, 3}));             // linear
  CHECK(oracle_dominant(IntPoly{1, -2, 1, -2}));     // (X-2)(X^2+1)

  CHECK_FALSE(oracle_dominant(IntPoly{1, 0, -2}));     // +/- sqrt(2)
  CHECK_FALSE(oracle_dominant(IntPoly{1, 0, 2}));      // conjugate pair
  CHECK_FALSE(oracle_dominant(IntPoly{1, 0, 0, -2}));  // X^3 - 2
  CHECK_FALSE(oracle_dominant(IntPoly{1, 0, 0, 0, -4}));  // X^4 - 4
  CHECK_FALSE(oracle_dominant(IntPoly{1, 1, 1}));      // unit conjugates
  CHECK_FALSE(oracle_dominant(IntPoly{1, -2, 1}));     // (X-1)^2
  CHECK_FALSE(oracle_dominant(IntPoly{7}));            // constant
  CHECK_FALSE(oracle_dominant(IntPoly{1, 0, 0}));      // X^2
  CHECK(oracle_dominant(IntPoly{1, -2, 0}));           // X(X-2)
}

TEST_CASE("oracle dominance resolves an exact cross-factor modulus tie") {
  // (X^2 - 2)(X^2 + 2X + 2): roots +/- sqrt(2) and -1 +/- i, ALL of modulus
  // sqrt(2), yet no exponent pattern gives the tie away.
  IntPoly f = mul(IntPoly{1, 0, -2}, IntPoly{1, 2, 2});
  REQUIRE(f == IntPoly({1, 2, 0, -4, -4}));
  REQUIRE(exponent_gcd(f) == 1);
  CHECK_FALSE(oracle_dominant(f));

  // Same flavour inside one irreducible-ish factor: X^4 + 1 has four roots on
  // one circle.
  CHECK_FALSE(oracle_dominant(IntPoly{1, 0, 0, 0, 1}));

  // Two real roots tied in modulus only: (X-2)(X+2)(X-1)
  IntPoly tie = mul(mul(IntPoly{1, -2}, IntPoly{1, 2}), IntPoly{1, -1});
  CHECK_FALSE(oracle_dominant(tie));
}

TEST_CASE("oracle dominance handles repeated dominant roots") {
  // (X-3)^2 (X+1): the largest root is real but double
  IntPoly f = mul(mul(IntPoly{1, -3}, IntPoly{1, -3}), IntPoly{1, 1});
  CHECK_FALSE(oracle_dominant(f));
  // (X-3)(X+1)^2: the largest root is simple; inner multiplicity is fine
  IntPoly g = mul(mul(IntPoly{1, -3}, IntPoly{1, 1}), IntPoly{1, 1});
  CHECK(oracle_dominant(g));
}

TEST_CASE("roots outside the unit circle, with multiplicity") {
  // (2X-1)(3X-1)(X-4): only 4 lies outside
  IntPoly f = mul(mul(IntPoly{2, -1}, IntPoly{3, -1}), IntPoly{1, -4});
  CHECK(roots_outside_unit_circle(f) == 1);

  // (X-2)^2 (3X-1): the double root counts twice
  IntPoly g = mul(mul(IntPoly{1, -2}, IntPoly{1, -2}), IntPoly{3, -1});
  CHECK(roots_outside_unit_circle(g) == 2);

  // X^2 + 4: conjugate pair at modulus 2
  CHECK(roots_outside_unit_circle(IntPoly{1, 0, 4}) == 2);

  // everything strictly inside
  CHECK(roots_outside_unit_circle(IntPoly{4, 0, -1}) == 0);

  // a root exactly on the circle is a contract violation
  CHECK_THROWS_AS(roots_outside_unit_circle(IntPoly{1, 0, -1}), OracleFailure);
}

TEST_CASE("distinct real root counts in an interval") {
  CHECK(distinct_real_roots_in(IntPoly{1, 0, -5, 1}, Rat(-6), Rat(6)) == 3);
  CHECK(distinct_real_roots_in(IntPoly{1, 0, -5, 1}, Rat(0), Rat(1)) == 1);
  IntPoly f = mul(mul(IntPoly{1, -1}, IntPoly{1, -1}), IntPoly{1, 3});
  CHECK(distinct_real_roots_in(f, Rat(0), Rat(2)) == 1);    // double root once
  CHECK(distinct_real_roots_in(f, Rat(-4), Rat(2)) == 2);
  CHECK(distinct_real_roots_in(IntPoly{1, 0, 1}, Rat(-9), Rat(9)) == 0);
  CHECK_THROWS_AS(distinct_real_roots_in(IntPoly{1, -1}, Rat(1), Rat(2)),
                  OracleFailure);  // endpoint is the root
}

TEST_CASE("oracle agrees with the decision engine on random inputs") {
  std::mt19937_64 rng(777001);
  std::uniform_int_distribution<int> deg_pick(2, 4);
  std::uniform_int_distribution<long> coeff_pick(-9, 9);
  int checked = 0;
  while (checked < 200) {
    int n = deg_pick(rng);
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = Int(coeff_pick(rng));
    if (sgn(c[0]) == 0) continue;
    IntPoly f{std::vector<Int>(c)};
    CAPTURE(render_poly(f));
    bool engine = decide_dominant(f).dominant;
    bool truth = oracle_dominant(f);
    CHECK(engine == truth);
    ++checked;
  }
}
