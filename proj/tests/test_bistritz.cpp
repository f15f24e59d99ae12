#include <random>

#include "doctest.h"
#include "dompoly/bistritz.hpp"

using namespace dompoly;
using Kind = StabilityReport::Kind;

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a[i] * b[j];
  return IntPoly(std::move(out));
}

RatPoly lift(const IntPoly& p) { return RatPoly(p); }

}  // namespace

TEST_CASE("all roots at the origin") {
  TSequence seq = build_t_sequence(lift(IntPoly({1, 0, 0})));
  REQUIRE(seq.report.kind == Kind::Stable);
  CHECK(seq.report.roots_outside == 0);
  CHECK(seq.levels[2] == RatPoly(IntPoly({1, 0, 1})));
  CHECK(seq.levels[1] == RatPoly(IntPoly({1, 1})));
  CHECK(seq.levels[0] == RatPoly(IntPoly({2})));
  CHECK(seq.at_one == std::vector<Rat>{Rat(2), Rat(2), Rat(2)});

  StabilityReport rep = analyze_stability(IntPoly({1, 0, 0}));
  CHECK(rep.kind == Kind::Stable);
  CHECK(rep.roots_outside == 0);
}

TEST_CASE("both roots outside") {
  TSequence seq = build_t_sequence(lift(IntPoly({1, 0, -4})));
  REQUIRE(seq.report.kind == Kind::Unstable);
  CHECK(seq.report.roots_outside == 2);
  CHECK(seq.levels[2] == RatPoly(IntPoly({-3, 0, -3})));
  CHECK(seq.levels[1] == RatPoly(IntPoly({5, 5})));
  CHECK(seq.levels[0] == RatPoly(IntPoly({-6})));
  CHECK(seq.at_one == std::vector<Rat>{Rat(-6), Rat(10), Rat(-6)});

  StabilityReport rep = analyze_stability(IntPoly({1, 0, -4}));
  CHECK(rep.kind == Kind::Unstable);
  CHECK(rep.roots_outside == 2);
  CHECK(rep.normal);
}

TEST_CASE("reciprocal root pair interrupts the recursion") {
  // (2X - 1)(X - 2): roots 1/2 and 2.
  StabilityReport rep = analyze_stability(IntPoly({2, -5, 2}));
  CHECK(rep.kind == Kind::FirstTypeSingular);
  CHECK(!rep.roots_outside.has_value());
  CHECK(!rep.normal);
  CHECK(!is_stable(IntPoly({2, -5, 2})));

  TSequence seq = build_t_sequence(lift(IntPoly({2, -5, 2})));
  CHECK(seq.report.kind == Kind::FirstTypeSingular);
  CHECK(seq.lowest_level == 1);
  CHECK(seq.levels[1].is_zero());
}

TEST_CASE("complex pair inside the circle") {
  TSequence seq = build_t_sequence(lift(IntPoly({4, 2, 1})));
  CHECK(seq.report.kind == Kind::Stable);
  CHECK(seq.at_one == std::vector<Rat>{Rat(14), Rat(6), Rat(6)});
  CHECK(is_stable(IntPoly({4, 2, 1})));
}

TEST_CASE("second-type repair") {
  // X^3 + 2X^2 + X + 1: one real root beyond the circle, complex pair inside.
  IntPoly f({1, 2, 1, 1});
  TSequence seq = build_t_sequence(lift(f));
  REQUIRE(seq.report.kind == Kind::Unstable);
  CHECK(seq.report.roots_outside == 1);
  CHECK(seq.report.patches == 1);
  CHECK(!seq.report.normal);
  // Patched levels.
  CHECK(seq.levels[3] == RatPoly(IntPoly({3, 2, 2, 3})));
  CHECK(seq.levels[2] == RatPoly(IntPoly({1, 3, 1})));
  CHECK(seq.levels[1] == RatPoly(IntPoly({10, 10})));
  CHECK(seq.levels[0] == RatPoly(IntPoly({-1})));
  CHECK(seq.at_one ==
        std::vector<Rat>{Rat(10), Rat(5), Rat(20), Rat(-1)});

  StabilityReport rep = analyze_stability(f);
  CHECK(rep.kind == Kind::Unstable);
  CHECK(rep.roots_outside == 1);
  CHECK(rep.patches == 1);
  CHECK(!rep.normal);
}

TEST_CASE("value one as a root fails fast") {
  StabilityReport rep = analyze_stability(IntPoly({1, -3, 2}));
  CHECK(rep.kind == Kind::OnePointFail);
  CHECK(!rep.roots_outside.has_value());
  CHECK(!is_stable(IntPoly({1, -1})));
  CHECK(build_t_sequence(lift(IntPoly({1, -1}))).report.kind ==
        Kind::OnePointFail);
  CHECK_THROWS_AS(t_init(lift(IntPoly({1, -1}))), std::invalid_argument);
}

TEST_CASE("degree one") {
  StabilityReport out = analyze_stability(IntPoly({1, -2}));  // root 2
  CHECK(out.kind == Kind::Unstable);
  CHECK(out.roots_outside == 1);

  StabilityReport in = analyze_stability(IntPoly({3, -1}));  // root 1/3
  CHECK(in.kind == Kind::Stable);
  CHECK(in.roots_outside == 0);

  StabilityReport minus = analyze_stability(IntPoly({1, 1}));  // root -1
  CHECK(minus.kind == Kind::FirstTypeSingular);
}

TEST_CASE("constants are vacuously stable") {
  StabilityReport rep = analyze_stability(IntPoly({5}));
  CHECK(rep.kind == Kind::Stable);
  CHECK(rep.roots_outside == 0);
}

TEST_CASE("roots on the unit circle") {
  // X^2 + 1: conjugate pair on the circle.
  CHECK(analyze_stability(IntPoly({1, 0, 1})).kind ==
        Kind::FirstTypeSingular);
  // X^2 - 1 vanishes at 1 itself.
  CHECK(analyze_stability(IntPoly({1, 0, -1})).kind == Kind::OnePointFail);
}

TEST_CASE("quadratics never need the repair") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        if (a == 0) continue;
        CHECK(analyze_stability(IntPoly({a, b, c})).patches == 0);
      }
}

TEST_CASE("root counts match a constructed factorization") {
  std::mt19937_64 rng(20240811);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int deg = static_cast<int>(draw(1, 5));
    IntPoly f({1});
    int outside = 0;
    bool on_circle = false, root_at_one = false;
    std::vector<std::pair<long, long>> roots;
    for (int i = 0; i < deg; ++i) {
      long q = draw(1, 6), p = draw(-9, 9);
      // q X - p has root p / q.
      f = mul(f, IntPoly({q, -p}));
      roots.emplace_back(p, q);
      long ap = p < 0 ? -p : p;
      if (ap > q) ++outside;
      if (ap == q) on_circle = true;
      if (p == q) root_at_one = true;
    }
    // Reciprocal pairs (p/q and q/p both roots) also interrupt the recursion.
    bool recip = false;
    for (std::size_t i = 0; i < roots.size() && !recip; ++i)
      for (std::size_t j = 0; j < roots.size() && !recip; ++j)
        if (i != j && roots[i].first * roots[j].first ==
                          roots[i].second * roots[j].second)
          recip = true;

    StabilityReport rep = analyze_stability(f);
    if (root_at_one) {
      CHECK(rep.kind == Kind::OnePointFail);
    } else if (on_circle || recip) {
      CHECK(rep.kind == Kind::FirstTypeSingular);
    } else {
      REQUIRE(rep.roots_outside.has_value());
      CHECK(*rep.roots_outside == outside);
      CHECK(rep.kind == (outside == 0 && rep.normal ? Kind::Stable
                                                    : Kind::Unstable));
      ++checked;
    }
  }
  CHECK(checked > 200);  // most trials exercise the counting path
}

TEST_CASE("scaled and exact paths agree") {
  std::mt19937_64 rng(987654321);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 600; ++trial) {
    int deg = static_cast<int>(draw(1, 6));
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    do {
      c[0] = draw(-9, 9);
    } while (sgn(c[0]) == 0);
    for (int i = 1; i <= deg; ++i) c[static_cast<std::size_t>(i)] = draw(-9, 9);
    IntPoly f{std::vector<Int>(c)};

    StabilityReport fast = analyze_stability(f);
    TSequence slow = build_t_sequence(lift(f));
    CHECK(fast.kind == slow.report.kind);
    CHECK(fast.normal == slow.report.normal);
    CHECK(fast.patches == slow.report.patches);
    CHECK(fast.roots_outside == slow.report.roots_outside);
  }
}
