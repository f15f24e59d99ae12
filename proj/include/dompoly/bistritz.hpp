#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/rational.hpp"

namespace dompoly {

// Unit-circle root classification for a real polynomial A with nonzero
// leading coefficient, via a three-term recursion over self-reciprocal
// polynomials (no root computation).
//
//   Stable             all roots strictly inside the unit circle
//                      (recursion stayed normal and no sign changes)
//   Unstable           recursion completed, roots_outside() many roots lie
//                      strictly outside, the rest strictly inside
//   FirstTypeSingular  some level vanished identically: A has a root on the
//                      unit circle or a reciprocal root pair; no count
//   OnePointFail       A(1) = 0, so 1 itself is a root; not stable, no count
struct StabilityReport {
  enum class Kind { Stable, Unstable, FirstTypeSingular, OnePointFail };

  Kind kind = Kind::Stable;
  std::optional<int> roots_outside;  // valid for Stable / Unstable only
  bool normal = true;                // no singular level of either type
  int patches = 0;                   // second-type repairs applied

  bool is_stable() const { return kind == Kind::Stable; }
};

StabilityReport analyze_stability(const IntPoly& A);

bool is_stable(const IntPoly& A);

// Number of roots strictly outside the unit circle, counted with
// multiplicity; nullopt when the recursion cannot certify a count
// (first-type singularity or A(1) = 0).
std::optional<int> count_roots_outside(const IntPoly& A);

// --- exact reference path ----------------------------------------------------
//
// Same recursion carried out in exact rational arithmetic with no rescaling,
// exposing every intermediate level.  The production path above works on
// rescaled integer vectors; tests cross-check the two against each other.

// Levels T_n .. T_0, each self-reciprocal of nominal degree k (so levels[k]
// has k+1 stored coefficients, possibly with zero ends).  When the recursion
// is interrupted, levels below lowest_level are left empty.
struct TSequence {
  std::vector<RatPoly> levels;
  int lowest_level = 0;
  std::vector<Rat> at_one;  // final values T_n(1), ..., T_{lowest}(1)
  StabilityReport report;
};

// Initial pair (T_n, T_{n-1}).  Requires a nonzero leading coefficient,
// degree >= 1 and A(1) != 0.
std::pair<RatPoly, RatPoly> t_init(const RatPoly& A);

TSequence build_t_sequence(const RatPoly& A);

}  // namespace dompoly
