#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/rational.hpp"

namespace dompoly {

// Integer polynomial, coefficients in descending power order, nonzero leading
// coefficient.  Degree 0 (a single nonzero constant) is allowed; the zero
// polynomial is not representable.
class IntPoly {
 public:
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& lead() const { return c_.front(); }
  const Int& constant() const { return c_.back(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }

  Int height() const;   // max |a_i|
  Int content() const;  // gcd of |a_i|, always > 0

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<Int> c_;
};

// Rational polynomial, descending order.  Leading zero coefficients are kept
// as stored; degree() skips them, so the nominal length can exceed the
// mathematical degree (used by reciprocal-symmetric sequences).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}
  explicit RatPoly(const IntPoly& p);

  const std::vector<Rat>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  int degree() const;  // -1 for the zero polynomial

  // Drops leading zero coefficients (returns the zero polynomial as {0}).
  RatPoly normalized() const;

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<Rat> c_;
};

// --- evaluation -------------------------------------------------------------

Rat evaluate(const RatPoly& p, const Rat& x);   // Horner, 2·deg operations
Rat evaluate(const IntPoly& p, const Rat& x);
Int evaluate(const IntPoly& p, const Int& x);

// Sign of p(x) without forming the rational value: evaluates the homogenized
// integer form sum a_i * num^(n-i) * den^i.
int sign_at(const IntPoly& p, const Rat& x);

// --- structural operations --------------------------------------------------

RatPoly derivative(const RatPoly& p);
IntPoly derivative(const IntPoly& p);  // requires degree >= 1

// f(sX); s > 0.  Coefficient of X^(n-i) picks up s^(n-i).
RatPoly scale_argument(const IntPoly& f, const Rat& s);
// Same polynomial up to a positive constant, with denominators cleared.
IntPoly scale_argument_cleared(const IntPoly& f, const Rat& s);

// X^n · p(1/X) under the nominal degree: literal coefficient reversal.
RatPoly reciprocal(const RatPoly& p);

IntPoly negate_argument(const IntPoly& f);  // f(-X)
IntPoly negate(const IntPoly& f);           // -f

// f = X^k · g with g(0) != 0; returns (g, k).
std::pair<IntPoly, int> strip_zero_roots(const IntPoly& f);

// gcd of the exponents carrying nonzero coefficients (f nonconstant).
int exponent_gcd(const IntPoly& f);

// Content-free part; if sign_normalize, the leading coefficient is made
// positive.
IntPoly primitive_part(const IntPoly& f, bool sign_normalize = false);

// gcd over Z of two nonzero integer polynomials: primitive, positive lead.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Exact division over Z; nullopt if g does not divide f.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

// --- text format ------------------------------------------------------------

// Comma-separated integers, descending powers: "1,0,-2" is X^2 - 2.
struct PolyParseError : std::runtime_error {
  enum class Kind { EmptyInput, ZeroLeadingCoefficient, BadToken };
  PolyParseError(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

IntPoly parse_poly(const std::string& text);
std::string render_poly(const IntPoly& p);

}  // namespace dompoly
