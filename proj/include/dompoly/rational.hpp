#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dompoly {

// Exact arithmetic backing for the whole engine.  Int is an arbitrary
// precision integer; Rat is a rational kept in lowest terms with positive
// denominator (GMP canonical form).  mpq_class does not canonicalize on
// construction, so rationals built from raw numerator/denominator pairs must
// go through make_rat.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  return make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

// Smallest integer c with c*c >= z (z >= 0).
inline Int ceil_sqrt(const Int& z) {
  if (sgn(z) < 0) throw std::invalid_argument("ceil_sqrt: negative input");
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), z.get_mpz_t());
  if (sgn(rem) != 0) root += 1;
  return root;
}

inline bool is_perfect_square(const Int& z) {
  return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Rational enclosure [lo, hi] of sqrt(x) with hi - lo <= tol (x >= 0, tol > 0).
inline std::pair<Rat, Rat> sqrt_enclosure(const Rat& x, const Rat& tol) {
  if (sgn(x) < 0) throw std::invalid_argument("sqrt_enclosure: negative input");
  if (sgn(x) == 0) return {Rat(0), Rat(0)};
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^k so the 1-ulp integer-sqrt gap,
  // 1/(q*2^k), drops below tol.
  unsigned long k = 0;
  Rat gap = make_rat(1, x.get_den());
  while (gap > tol) {
    gap /= 2;
    ++k;
  }
  Int scaled = x.get_num() * x.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  Int lo_root;
  mpz_sqrt(lo_root.get_mpz_t(), scaled.get_mpz_t());
  Int den = x.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  return {make_rat(lo_root, den), make_rat(lo_root + 1, den)};
}

// Serialized form used across the CLI and reports: "num" or "num/den".
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// FNV-1a, the digest primitive for census chunk fingerprints.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a_str(const std::string& s,
                               std::uint64_t seed = 1469598103934665603ull) {
  return fnv1a(s.data(), s.size(), seed);
}

}  // namespace dompoly
