#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dompoly/polynomial.hpp"

namespace dompoly {

// Negated-remainder chain p0 = f, p1 = f', p_k = -(p_{k-2} mod p_{k-1}), each
// member rescaled to a primitive integer polynomial (positive factors only,
// so all sign patterns match the exact rational chain).  The chain stops at
// the last nonzero remainder, which is a gcd of (f, f'); non-squarefree
// inputs are fine and root counts are counts of *distinct* roots.
struct SturmChain {
  IntPoly f;
  std::vector<IntPoly> polys;
};

SturmChain build_chain(const IntPoly& f);  // deg f >= 1

// Sign changes in a value sequence, zeros deleted first.
int sign_changes(const std::vector<Rat>& values);
int sign_changes(const std::vector<int>& signs);

// Number of sign changes through the chain at x (zeros skipped).
int chain_sign_changes(const SturmChain& chain, const Rat& x);

// Distinct real roots of f in the open interval (a, b).
// Pre: a < b and f(a)·f(b) != 0.
int count_real_roots_in(const SturmChain& chain, const Rat& a, const Rat& b);

struct LocateOptions {
  // Loop until width < d instead of width <= d.
  bool strict_width = false;
  // Input is known to have no rational roots (irreducible, deg >= 2):
  // midpoint-is-root handling and mirror-root dodges are skipped.
  bool no_rational_roots = false;
};

// Bisection bracketing of the largest real root of f in (a, b): returns
// (r, R) with a <= r < root <= ... < R <= b and R - r <= d (or < d in strict
// mode), or nullopt when f has no root in (a, b).  Probe points x are always
// chosen with f(x)·f(-x) != 0 so brackets are safe on both sides of 0.
std::optional<std::pair<Rat, Rat>> locate_largest_in(
    const IntPoly& f, const Rat& a, const Rat& b, const Rat& d,
    const LocateOptions& opts = {});

// Open annulus r < |z| < R bracketing the largest-modulus real root of f;
// side is the sign of that root.  f(±r)·f(±R) != 0 always holds.
struct Annulus {
  Rat r;
  Rat R;
  int side = +1;
};

// Brackets the largest-modulus real root inside the Cauchy annulus: first the
// positive axis in (C1, C2), then the negative axis strictly beyond the
// positive bracket.  nullopt when f has no (nonzero) real root.
// Pre: deg f >= 1, f(0) != 0, d > 0.
std::optional<Annulus> locate_extreme_real_root(const IntPoly& f, const Rat& d,
                                                const LocateOptions& opts = {});

// Re-brackets the same root inside an existing annulus down to width d.
Annulus narrow_annulus(const IntPoly& f, const Annulus& wide, const Rat& d,
                       const LocateOptions& opts = {});

}  // namespace dompoly
