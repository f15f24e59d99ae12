#include "dompoly/dominance.hpp"

#include <stdexcept>

#include "dompoly/bistritz.hpp"
#include "dompoly/bounds.hpp"
#include "dompoly/factor.hpp"

namespace dompoly {

namespace {

// Width below which two roots of distinct moduli, at least one of them real,
// cannot share an annulus.  d1 covers real-vs-nonreal pairs; real pairs of
// opposite sign need real_modulus_gap as well, except in degree 2 where they
// are separated by 1/H >= d1 already.
Rat modulus_gap_floor(const IntPoly& f, bool irreducible) {
  const int n = f.degree();
  const Int h = f.height();
  Rat d1 = (irreducible && n >= 3) ? d1_irreducible_practical(n, h)
                                   : d1_practical(n, h);
  if (n == 2) return d1;
  Rat rr = real_modulus_gap(n, h);
  return rr < d1 ? rr : d1;
}

StabilityReport analyze_scaled(const IntPoly& f, const Rat& s) {
  StabilityReport rep = analyze_stability(scale_argument_cleared(f, s));
  // The search only hands out radii s with f(s) != 0, so the scaled
  // polynomial cannot vanish at 1.
  if (rep.kind == StabilityReport::Kind::OnePointFail)
    throw std::logic_error("dominance: scaled polynomial vanishes at X = 1");
  return rep;
}

void require_search_input(const IntPoly& f, const char* who) {
  if (f.degree() < 2)
    throw std::invalid_argument(std::string(who) + ": degree must be >= 2");
  if (sgn(f.constant()) == 0)
    throw std::invalid_argument(std::string(who) + ": zero constant term");
}

// |a1|^4 > n^4 (n+1) a0^2 H^2 pins the largest root modulus strictly above
// every other: with two roots of maximal modulus R one gets R^2 <= M(f)/|a0|
// and |a1| <= n R |a0|, which contradicts the inequality.
bool second_coefficient_forces_dominant(const IntPoly& f) {
  Int a1 = f[1];
  Int lhs = a1 * a1;
  lhs *= lhs;
  const Int n(f.degree());
  Int rhs = n * n;
  rhs *= rhs;
  rhs *= (n + 1) * f.lead() * f.lead() * f.height() * f.height();
  return lhs > rhs;
}

// Positive lead with an all-strictly-negative tail (or the global sign
// flip).  Such a polynomial has a unique positive root that bounds every
// root modulus; when f is also irreducible no other root can attain it.
bool strict_sign_split(const IntPoly& f) {
  const auto& c = f.coeffs();
  const int lead_sign = sgn(c[0]);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != -lead_sign) return false;
  return true;
}

// a0 X^n - a1 X^{n-1} + a2 X^{n-2} + ... + an with every ai > 0, a0 >= a1,
// an >= a0 and a_{2i} >= a_{2i+1} for the interior pairs.  All real roots of
// such a polynomial lie in (-1, 1) while the constant term forces a root of
// modulus >= 1, so the extreme root is a conjugate pair: never dominant.
bool trapped_real_roots_pattern(const IntPoly& f) {
  const auto& c = f.coeffs();
  const int n = f.degree();
  if (sgn(c[0]) <= 0 || sgn(c[1]) >= 0) return false;
  for (std::size_t i = 2; i < c.size(); ++i)
    if (sgn(c[i]) <= 0) return false;
  if (c[0] < -c[1]) return false;                        // a0 >= a1
  if (c[static_cast<std::size_t>(n)] < c[0]) return false;  // an >= a0
  for (int i = 2; i + 1 <= n; i += 2)
    if (c[static_cast<std::size_t>(i)] < c[static_cast<std::size_t>(i + 1)])
      return false;
  return true;
}

bool trapped_pattern_any_variant(const IntPoly& f) {
  IntPoly fm = negate_argument(f);
  return trapped_real_roots_pattern(f) ||
         trapped_real_roots_pattern(negate(f)) ||
         trapped_real_roots_pattern(fm) ||
         trapped_real_roots_pattern(negate(fm));
}

}  // namespace

bool quick_quadratic(const IntPoly& f) {
  if (f.degree() != 2)
    throw std::invalid_argument("quick_quadratic: degree must be 2");
  if (sgn(f[1]) == 0) return false;  // roots are opposite or conjugate
  Int disc = f[1] * f[1] - 4 * f[0] * f[2];
  return sgn(disc) > 0;
}

FilterVerdict coefficient_filter(const IntPoly& f, bool assume_irreducible) {
  if (f.degree() < 2) return FilterVerdict::Unknown;
  if (second_coefficient_forces_dominant(f)) return FilterVerdict::Dominant;
  if (trapped_pattern_any_variant(f)) return FilterVerdict::NonDominant;
  if (assume_irreducible &&
      (strict_sign_split(f) || strict_sign_split(negate_argument(f))))
    return FilterVerdict::Dominant;
  return FilterVerdict::Unknown;
}

DecideResult test_dominant_simple(const IntPoly& f) {
  require_search_input(f, "test_dominant_simple");
  Rat width = modulus_gap_floor(f, false) / 2;
  auto ann = locate_extreme_real_root(f, width);
  if (!ann) return {false, "simple", std::nullopt};
  StabilityReport rep = analyze_scaled(f, ann->r);
  bool dom = rep.roots_outside && *rep.roots_outside == 1;
  return {dom, "simple", ann};
}

DecideResult test_dominant_efficient(const IntPoly& f) {
  require_search_input(f, "test_dominant_efficient");
  BoundSet b = bounds_for(f);
  auto wide = locate_extreme_real_root(f, b.d2);
  if (!wide) return {false, "efficient", std::nullopt};
  // Any root on or outside |z| = R would be non-real (all real roots sit
  // strictly inside), hence one of a conjugate pair: not dominant.
  if (!analyze_scaled(f, wide->R).is_stable())
    return {false, "efficient", wide};
  Rat width = modulus_gap_floor(f, false) / 2;
  Annulus tight = narrow_annulus(f, *wide, width);
  StabilityReport rep = analyze_scaled(f, tight.r);
  bool dom = rep.roots_outside && *rep.roots_outside == 1;
  return {dom, "efficient", tight};
}

DecideResult test_dominant_irreducible(const IntPoly& f) {
  require_search_input(f, "test_dominant_irreducible");
  // A polynomial in X^m (m >= 2) has its roots in full rotation orbits, so
  // every root modulus is shared; irreducibility keeps them distinct.
  if (exponent_gcd(f) >= 2) return {false, "irreducible", std::nullopt};
  LocateOptions opts;
  opts.no_rational_roots = true;
  BoundSet b = bounds_for(f);
  auto wide = locate_extreme_real_root(f, b.d2, opts);
  if (!wide) return {false, "irreducible", std::nullopt};
  if (!analyze_scaled(f, wide->R).is_stable())
    return {false, "irreducible", wide};
  // Strictly below the gap floor: then a second root in the annulus would
  // share the extreme root's modulus, which step one ruled out.
  opts.strict_width = true;
  Annulus tight = narrow_annulus(f, *wide, modulus_gap_floor(f, true), opts);
  bool dom = analyze_scaled(f, tight.R).is_stable();
  return {dom, "irreducible", tight};
}

DecideResult decide_dominant(const IntPoly& f, const DecideOptions& opts) {
  const int n = f.degree();
  if (n <= 0) return {false, "degree", std::nullopt};
  if (n == 1) return {true, "degree", std::nullopt};
  auto [g, zeros] = strip_zero_roots(f);
  const int m = g.degree();
  // Zero roots never compete for the extreme modulus once any nonzero root
  // exists, so f and g decide alike; f = a X^n alone is a multiple root.
  if (m == 0) return {false, "degree", std::nullopt};
  if (m == 1) return {true, "degree", std::nullopt};
  if (m == 2) return {quick_quadratic(g), "quadratic", std::nullopt};
  if (opts.use_filters) {
    FilterVerdict v = coefficient_filter(g);
    if (v == FilterVerdict::Dominant) return {true, "filter", std::nullopt};
    if (v == FilterVerdict::NonDominant) return {false, "filter", std::nullopt};
  }
  const bool irred = (zeros == 0 && opts.irreducible_hint)
                         ? *opts.irreducible_hint
                         : is_irreducible(g);
  if (irred) {
    if (opts.use_filters &&
        coefficient_filter(g, true) == FilterVerdict::Dominant)
      return {true, "filter", std::nullopt};
    return test_dominant_irreducible(g);
  }
  return test_dominant_efficient(g);
}

}  // namespace dompoly
