#pragma once

#include <optional>
#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/rational.hpp"

namespace dompoly {

// Distinct rational roots of f (degree >= 1), in no particular order.
// Found through divisor pairs over the constant and leading coefficients.
std::vector<Rat> rational_roots(const IntPoly& f);

// Irreducibility over the rationals (content is immaterial): degree 1 always
// passes, constants never do.  Quadratics go through the discriminant,
// cubics through rational roots, and higher degrees through a bounded search
// for a factor of degree m <= deg/2 sieved by divisibility of values at
// small integers.
bool is_irreducible(const IntPoly& f);

// A nontrivial divisor of the primitive part (1 <= deg g < deg f) when one
// exists over the rationals; nullopt on irreducible (or degree < 2) input.
std::optional<IntPoly> find_nontrivial_factor(const IntPoly& f);

}  // namespace dompoly
