#pragma once

// Reproducible random polynomial generation.
//
// std::mt19937_64 produces a standard-specified output stream, but the
// std::uniform_int_distribution mapping on top of it is implementation
// defined.  Tests freeze expected values against particular seeds, so the
// mapping from raw engine output to ranges is done here by hand (rejection
// sampling) to make sampled sequences identical across toolchains.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dompoly/polynomial.hpp"

namespace dompoly {

class RandGen {
 public:
  explicit RandGen(std::uint64_t seed) : engine_(seed) {}

  // Uniform draw from [0, bound).  Rejection keeps the draw exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RandGen::below: bound is 0");
    const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t raw;
    do {
      raw = engine_();
    } while (raw >= limit);
    return raw % bound;
  }

  // Uniform draw from [lo, hi] inclusive.
  long in_range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("RandGen::in_range: lo > hi");
    const auto span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<long>(static_cast<std::uint64_t>(lo) + below(span));
  }

  // Random polynomial of exactly the given degree with coefficients in
  // [-height, height] and a nonzero leading coefficient.
  IntPoly poly(int degree, long height) {
    if (degree < 0) throw std::invalid_argument("RandGen::poly: degree < 0");
    if (height < 1) throw std::invalid_argument("RandGen::poly: height < 1");
    std::vector<Int> coeffs(static_cast<std::size_t>(degree) + 1);
    long lead = in_range(1, 2 * height);
    if (lead > height) lead = height - lead;  // maps to [-height, -1]
    coeffs[0] = lead;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      coeffs[i] = in_range(-height, height);
    }
    return IntPoly{std::move(coeffs)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dompoly
