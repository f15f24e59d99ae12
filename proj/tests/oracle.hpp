#pragma once

// Numerical-but-certified root analysis used only by the test suites as an
// independent cross-check of the exact decision pipeline.  Roots are found
// with the Aberth–Ehrlich iteration in arbitrary-precision floats, then every
// claim is certified in exact rational arithmetic: each approximation carries
// a disc proven (via the n·p/p' bound and pairwise disjointness) to contain
// exactly one root.  Precision escalates until the requested question is
// answered; the oracle is never silently wrong, it throws instead.

#include <stdexcept>
#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/rational.hpp"

namespace dompoly::oracle {

struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootBox {
  Rat re_lo, re_hi;    // certified enclosure of the real part
  Rat im_lo, im_hi;    // certified enclosure of the imaginary part
  Rat mod_lo, mod_hi;  // certified enclosure of the modulus
  bool is_real = false;
  int multiplicity = 1;
};

// Squarefree factors with multiplicities: f = content * prod g_k^{m_k}.
// Factors are primitive with positive leading coefficient, pairwise coprime,
// and listed in increasing multiplicity.  Pre: deg f >= 1.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// One box per distinct root, each box and modulus interval at most
// `resolution` wide.  Pre: deg f >= 1.
std::vector<RootBox> root_boxes(const IntPoly& f, const Rat& resolution);

// Ground truth for the dominance predicate: exactly one root of maximal
// modulus and it is simple.  Ties are resolved exactly: once all candidate
// moduli agree within the relevant separation floor they are provably equal.
bool oracle_dominant(const IntPoly& f);

// Number of roots with |z| > 1, counted with multiplicity.  Throws if some
// root sits exactly on the unit circle (callers screen those away).
int roots_outside_unit_circle(const IntPoly& f);

// Number of distinct real roots in the open interval (a, b).  The endpoints
// must not be roots.
int distinct_real_roots_in(const IntPoly& f, const Rat& a, const Rat& b);

}  // namespace dompoly::oracle
