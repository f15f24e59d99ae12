#include "doctest.h"

#include <algorithm>
#include <vector>

#include "dompoly/factor.hpp"
#include "dompoly/polynomial.hpp"

using namespace dompoly;

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a[i] * b[j];
  return IntPoly{std::move(c)};
}

bool divides(const IntPoly& g, const IntPoly& f) {
  return divide_exact(f, g).has_value();
}

}  // namespace

TEST_CASE("rational roots of small polynomials") {
  auto roots = [](const IntPoly& f) { return rational_roots(f); };

  CHECK(roots(IntPoly{1, 0, -2}).empty());                      // X^2 - 2
  CHECK(roots(IntPoly{1, 0, 2}).empty());                       // X^2 + 2
  CHECK(roots(IntPoly{2, -5, 2}) ==
        std::vector<Rat>{make_rat(1, 2), Rat(2)});              // 2X^2-5X+2
  CHECK(roots(IntPoly{1, 0, -1, 0}) ==
        std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});             // X^3 - X
  CHECK(roots(IntPoly{1, 0, 0}) == std::vector<Rat>{Rat(0)});   // X^2
  CHECK(roots(IntPoly{6, 5, 1}) ==
        std::vector<Rat>{make_rat(-1, 2), make_rat(-1, 3)});    // 6X^2+5X+1
  CHECK(roots(IntPoly{1, -3}) == std::vector<Rat>{Rat(3)});
  CHECK_THROWS_AS(rational_roots(IntPoly{7}), std::invalid_argument);
}

TEST_CASE("roots are reported once regardless of multiplicity") {
  // (X - 1)^2 (2X + 1)
  IntPoly f = mul(mul(IntPoly{1, -1}, IntPoly{1, -1}), IntPoly{2, 1});
  CHECK(rational_roots(f) == std::vector<Rat>{make_rat(-1, 2), Rat(1)});
}

TEST_CASE("irreducibility of degree at most three") {
  CHECK_FALSE(is_irreducible(IntPoly{5}));
  CHECK_FALSE(is_irreducible(IntPoly{-1}));
  CHECK(is_irreducible(IntPoly{1, 4}));
  CHECK(is_irreducible(IntPoly{2, 4}));  // content is immaterial
  CHECK(is_irreducible(IntPoly{1, 0, -2}));
  CHECK(is_irreducible(IntPoly{1, 0, 1}));
  CHECK(is_irreducible(IntPoly{1, 1, 1}));
  CHECK_FALSE(is_irreducible(IntPoly{1, -4, 4}));   // (X-2)^2
  CHECK_FALSE(is_irreducible(IntPoly{2, -5, 2}));   // (2X-1)(X-2)
  CHECK_FALSE(is_irreducible(IntPoly{1, 0, 0}));    // X^2
  CHECK(is_irreducible(IntPoly{1, 0, -5, 1}));      // no rational root
  CHECK_FALSE(is_irreducible(IntPoly{1, 0, 0, -8}));  // root 2
  CHECK_FALSE(is_irreducible(IntPoly{1, 0, 0, 0}));   // X^3
}

TEST_CASE("irreducibility of quartics needs the quadratic-factor search") {
  CHECK(is_irreducible(IntPoly{1, 0, 0, 0, 1}));       // X^4 + 1
  CHECK_FALSE(is_irreducible(IntPoly{1, 0, 0, 0, 4})); // (X^2-2X+2)(X^2+2X+2)
  CHECK_FALSE(is_irreducible(IntPoly{1, 0, 1, 0, 1})); // (X^2+X+1)(X^2-X+1)
  CHECK(is_irreducible(IntPoly{1, 0, 0, 0, -2}));      // X^4 - 2
  CHECK(is_irreducible(IntPoly{1, 0, 0, 0, 0, -2}));   // X^5 - 2
}

TEST_CASE("sextics exercise the cubic-factor search") {
  // X^6 - 5X^3 + 6 = (X^3 - 2)(X^3 - 3): no rational roots, no
  // quadratic factor, so only the degree-three search can see it.
  IntPoly f{1, 0, 0, -5, 0, 0, 6};
  CHECK_FALSE(is_irreducible(f));
  auto g = find_nontrivial_factor(f);
  REQUIRE(g.has_value());
  CHECK(g->degree() >= 1);
  CHECK(g->degree() < 6);
  CHECK(divides(*g, f));

  CHECK(is_irreducible(IntPoly{1, 0, 0, 1, 0, 0, 1}));  // X^6 + X^3 + 1
}

TEST_CASE("degree eight reaches the interpolation fallback") {
  // (X^4 + 1)^2: squarefree tricks aside, the smallest factor the
  // search can find has degree four.
  IntPoly f = mul(IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 0, 0, 0, 1});
  CHECK_FALSE(is_irreducible(f));
  auto g = find_nontrivial_factor(f);
  REQUIRE(g.has_value());
  CHECK(divides(*g, f));
  CHECK(g->degree() == 4);
}

TEST_CASE("found factors divide exactly and are proper") {
  std::vector<IntPoly> cases = {
      IntPoly{1, -4, 4},
      IntPoly{2, -5, 2},
      IntPoly{1, 0, 0, -8},
      IntPoly{1, 0, 0, 0, 4},
      IntPoly{1, 0, 1, 0, 1},
      IntPoly{3, 0, -3},           // content 3, factor (X-1)(X+1)
      IntPoly{1, 2, 3, 2, 1, 0},   // zero root
  };
  for (const IntPoly& f : cases) {
    CAPTURE(render_poly(f));
    auto g = find_nontrivial_factor(f);
    REQUIRE(g.has_value());
    CHECK(g->degree() >= 1);
    CHECK(g->degree() < f.degree());
    CHECK(divides(*g, f));
    CHECK(sgn(g->lead()) > 0);
    CHECK(g->content() == 1);
  }
}

TEST_CASE("irreducible times anything is reducible") {
  std::vector<IntPoly> irreducibles = {
      IntPoly{1, 0, -2},
      IntPoly{1, 1, 1},
      IntPoly{1, 0, -5, 1},
      IntPoly{1, 0, 0, 0, 1},
  };
  for (const IntPoly& p : irreducibles) {
    CAPTURE(render_poly(p));
    CHECK(is_irreducible(p));
    for (const IntPoly& q : irreducibles) {
      IntPoly fq = mul(p, q);
      CAPTURE(render_poly(fq));
      CHECK_FALSE(is_irreducible(fq));
      auto g = find_nontrivial_factor(fq);
      REQUIRE(g.has_value());
      CHECK(divides(*g, fq));
    }
  }
}

TEST_CASE("linear factors over the rationals are found from roots") {
  // 12X^3 - 4X^2 - 3X + 1 = (2X-1)(2X+1)(3X-1)
  IntPoly f{12, -4, -3, 1};
  CHECK(rational_roots(f) ==
        std::vector<Rat>{make_rat(-1, 2), make_rat(1, 3), make_rat(1, 2)});
  CHECK_FALSE(is_irreducible(f));
  auto g = find_nontrivial_factor(f);
  REQUIRE(g.has_value());
  CHECK(g->degree() == 1);
  CHECK(divides(*g, f));
}
