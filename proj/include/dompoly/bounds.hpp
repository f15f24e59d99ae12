#pragma once

#include <optional>

#include "dompoly/polynomial.hpp"
#include "dompoly/rational.hpp"

namespace dompoly {

// Certified root-location radii for a degree-n, height-H integer polynomial.
// c1 < |root| < c2 for every root (nonzero constant term required for c1);
// d2 lower-bounds the distance between distinct roots; d1 (and its sharper
// irreducible variant) lower-bounds the modulus gap between a real root and
// any non-real root of different modulus.  For the gap between the moduli of
// two real roots see real_modulus_gap below; the minimum of the two covers
// every pair involving a real root.
struct BoundSet {
  Rat c1;
  Rat c2;
  Rat d1;
  Rat d2;
  std::optional<Rat> d1_irreducible;  // degree >= 3 only
};

// Pre: deg f >= 1 and f(0) != 0.  Returns (c1, c2).
std::pair<Rat, Rat> cauchy_bounds(const IntPoly& f);

Rat d1_practical(int n, const Int& height);               // n >= 2, H >= 1
Rat d1_irreducible_practical(int n, const Int& height);   // n >= 3
Rat d2_practical(int n, const Int& height);               // n >= 2
Rat sep_real_irreducible(int n, const Int& height);       // n >= 2

// Lower bound (2n+1)^(-3n) * H^(2-4n) on | |a| - |b| | for real roots a, b
// of different absolute value.  Needed alongside d1 because two real roots
// of opposite sign can have closer moduli than a real/non-real pair.
Rat real_modulus_gap(int n, const Int& height);            // n >= 2

// Lower bound on | |a| - |b| | when both roots are non-real with different
// absolute values, which first becomes possible at degree 4.
Rat complex_modulus_gap(int n, const Int& height);         // n >= 4

// sqrt(n+1) * H as the exact radicand (n+1)·H^2 plus its certified integer
// ceiling (smallest c with c^2 >= (n+1)·H^2).
struct MahlerUpper {
  Int radicand;
  Int ceiling;
};
MahlerUpper mahler_upper(const IntPoly& f);

BoundSet bounds_for(const IntPoly& f);

}  // namespace dompoly
