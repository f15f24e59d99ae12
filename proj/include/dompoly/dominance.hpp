#pragma once

#include <optional>
#include <string>

#include "dompoly/polynomial.hpp"
#include "dompoly/sturm.hpp"

namespace dompoly {

// A polynomial is dominant when it has exactly one root of maximal modulus
// and that root is simple.  For real coefficients such a root is real, which
// is what makes a purely real-arithmetic decision procedure possible.

struct DecideOptions {
  // Try the constant-time coefficient filters before falling back to the
  // annulus search.  They never change the verdict, only the cost.
  bool use_filters = true;
  // Caller-certified result of is_irreducible(f), when already known (the
  // census computes it anyway); skips the internal factorization test.  Only
  // consulted when f has no zero roots, since stripping changes the question.
  std::optional<bool> irreducible_hint;
};

struct DecideResult {
  bool dominant = false;
  // Which part of the pipeline settled the question: "degree", "quadratic",
  // "filter", "simple", "efficient" or "irreducible".
  std::string method;
  // Annulus r < |z| < R that isolated the extreme real root, when a search
  // ran far enough to produce one.
  std::optional<Annulus> annulus;
};

// Degree-2 closed form: dominant iff the discriminant is positive and the
// middle coefficient is nonzero.  Pre: deg f == 2.
bool quick_quadratic(const IntPoly& f);

// Constant-time coefficient tests.  Dominant / NonDominant verdicts are
// certain; Unknown means the filters cannot tell.  Pass assume_irreducible
// only when f is known irreducible over the rationals: it unlocks a sign
// test that is valid only in that case.
enum class FilterVerdict { Unknown, Dominant, NonDominant };
FilterVerdict coefficient_filter(const IntPoly& f, bool assume_irreducible = false);

// Full search in one pass: isolate the extreme real root in an annulus
// narrower than half the modulus-gap floor, then count the roots outside
// the inner circle.  Pre: deg f >= 2, f(0) != 0.
DecideResult test_dominant_simple(const IntPoly& f);

// Two-stage search: a coarse annulus first, an early stability exit at its
// outer radius, and only then the narrow pass.  Pre: deg f >= 2, f(0) != 0.
DecideResult test_dominant_efficient(const IntPoly& f);

// Variant of the two-stage search for irreducible inputs: a sharper gap
// floor applies, midpoint roots cannot occur, and the final verdict is a
// stability test at the outer radius.  Pre: f irreducible over the
// rationals, deg f >= 2.
DecideResult test_dominant_irreducible(const IntPoly& f);

// Dispatch on degree, strip zero roots, run the filters, then pick the
// search matching the input's factorization status.
DecideResult decide_dominant(const IntPoly& f, const DecideOptions& opts = {});

}  // namespace dompoly
