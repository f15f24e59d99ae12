#include "dompoly/bounds.hpp"

namespace dompoly {

namespace {

void require_deg_height(int n, const Int& h, int min_deg, const char* who) {
  if (n < min_deg) throw std::invalid_argument(std::string(who) + ": degree too small");
  if (sgn(h) <= 0) throw std::invalid_argument(std::string(who) + ": height must be >= 1");
}

}  // namespace

std::pair<Rat, Rat> cauchy_bounds(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("cauchy_bounds: constant polynomial");
  if (sgn(f.constant()) == 0)
    throw std::invalid_argument("cauchy_bounds: zero constant term");
  Int tail_max = 0;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    Int v = abs(f[i]);
    if (v > tail_max) tail_max = v;
  }
  Rat c1 = make_rat(1, f.height() + 1);
  Rat c2 = Rat(1) + make_rat(tail_max, abs(f.lead()));
  return {c1, c2};
}

Rat d1_practical(int n, const Int& height) {
  require_deg_height(n, height, 2, "d1_practical");
  const auto un = static_cast<unsigned long>(n);
  unsigned long e2 = un * (un - 1) * (un - 2) / 2;
  unsigned long en = un * (un - 1) + 1;
  unsigned long eh = 2 * un * (un - 1) + 1;
  Int den = pow_int(Int(2), e2) * pow_int(Int(n + 1), en) * pow_int(height, eh);
  return make_rat(2, den);
}

Rat d1_irreducible_practical(int n, const Int& height) {
  require_deg_height(n, height, 3, "d1_irreducible_practical");
  const auto un = static_cast<unsigned long>(n);
  unsigned long e2 = un * (un - 1) * (un - 2) / 2;
  unsigned long en = (un - 1) * (un - 2) + 1;
  unsigned long eh = 2 * (un - 1) * (un - 2) + 1;
  Int den = pow_int(Int(2), e2) * pow_int(Int(n + 1), en) * pow_int(height, eh);
  return make_rat(2, den);
}

Rat d2_practical(int n, const Int& height) {
  require_deg_height(n, height, 2, "d2_practical");
  const auto un = static_cast<unsigned long>(n);
  Int den = pow_int(Int(n + 1), un + 1) * pow_int(height, un - 1);
  return make_rat(3, den);
}

Rat sep_real_irreducible(int n, const Int& height) {
  require_deg_height(n, height, 2, "sep_real_irreducible");
  const auto un = static_cast<unsigned long>(n);
  Int den = pow_int(Int(2), un * (un - 1)) * pow_int(Int(n + 1), un - 1) *
            pow_int(height, 2 * (un - 1));
  return make_rat(1, den);
}

Rat real_modulus_gap(int n, const Int& height) {
  require_deg_height(n, height, 2, "real_modulus_gap");
  const auto un = static_cast<unsigned long>(n);
  Int den = pow_int(Int(2 * n + 1), 3 * un) * pow_int(height, 4 * un - 2);
  return make_rat(1, den);
}

Rat complex_modulus_gap(int n, const Int& height) {
  require_deg_height(n, height, 4, "complex_modulus_gap");
  const auto un = static_cast<unsigned long>(n);
  // (n+1) exponent n^3/4 - 3n/4 + 3 rounded up to stay a lower bound; the
  // height exponent (n^3 - 2n^2 - n + 4)/2 is already an integer.
  unsigned long en = (un * un * un + 4 * 3 - 3 * un + 3) / 4;
  unsigned long eh = (un * un * un - 2 * un * un - un + 4) / 2;
  Int den = pow_int(Int(n + 1), en) * pow_int(height, eh);
  return make_rat(1, den);
}

MahlerUpper mahlerupper_impl(const Int& n_plus_1, const Int& h) {
  Int radicand = n_plus_1 * h * h;
  return {radicand, ceil_sqrt(radicand)};
}

MahlerUpper mahler_upper(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("mahler_upper: constant polynomial");
  return mahlerupper_impl(Int(f.degree() + 1), f.height());
}

BoundSet bounds_for(const IntPoly& f) {
  const int n = f.degree();
  if (n < 2) throw std::invalid_argument("bounds_for: degree must be >= 2");
  auto [c1, c2] = cauchy_bounds(f);
  Int h = f.height();
  BoundSet b{c1, c2, d1_practical(n, h), d2_practical(n, h), std::nullopt};
  if (n >= 3) b.d1_irreducible = d1_irreducible_practical(n, h);
  return b;
}

}  // namespace dompoly
