#include "dompoly/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace dompoly {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("IntPoly: no coefficients");
  if (sgn(c_.front()) == 0)
    throw std::invalid_argument("IntPoly: zero leading coefficient");
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
    : IntPoly(std::vector<Int>(coeffs.begin(), coeffs.end())) {}

Int IntPoly::height() const {
  Int h = 0;
  for (const Int& a : c_) {
    Int v = abs(a);
    if (v > h) h = v;
  }
  return h;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const Int& a : p.coeffs()) c_.emplace_back(a);
}

bool RatPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rat& q) { return sgn(q) == 0; });
}

int RatPoly::degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(c_.size() - 1 - i);
  return -1;
}

RatPoly RatPoly::normalized() const {
  std::size_t i = 0;
  while (i + 1 < c_.size() && sgn(c_[i]) == 0) ++i;
  return RatPoly(std::vector<Rat>(c_.begin() + static_cast<long>(i), c_.end()));
}

Rat evaluate(const RatPoly& p, const Rat& x) {
  if (p.size() == 0) return Rat(0);
  Rat v = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) v = v * x + p[i];
  return v;
}

Rat evaluate(const IntPoly& p, const Rat& x) {
  Rat v(p[0]);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) v = v * x + Rat(p[i]);
  return v;
}

Int evaluate(const IntPoly& p, const Int& x) {
  Int v = p[0];
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) v = v * x + p[i];
  return v;
}

int sign_at(const IntPoly& p, const Rat& x) {
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (den == 1) return sgn(evaluate(p, num));
  Int v = p[0];
  Int dpow = 1;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    dpow *= den;
    v = v * num + p[i] * dpow;
  }
  return sgn(v);
}

RatPoly derivative(const RatPoly& p) {
  int deg = static_cast<int>(p.size()) - 1;
  if (deg <= 0) return RatPoly(std::vector<Rat>{Rat(0)});
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) out.push_back(p[static_cast<std::size_t>(i)] * (deg - i));
  return RatPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
  int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("derivative: constant polynomial");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) out.push_back(p[static_cast<std::size_t>(i)] * (deg - i));
  return IntPoly(std::move(out));
}

RatPoly scale_argument(const IntPoly& f, const Rat& s) {
  if (sgn(s) <= 0) throw std::invalid_argument("scale_argument: s must be positive");
  const int n = f.degree();
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  Rat spow(1);
  for (int i = n; i >= 0; --i) {  // X^(n-i) term gains s^(n-i)
    out[static_cast<std::size_t>(i)] = Rat(f[static_cast<std::size_t>(i)]) * spow;
    spow *= s;
  }
  return RatPoly(std::move(out));
}

IntPoly scale_argument_cleared(const IntPoly& f, const Rat& s) {
  if (sgn(s) <= 0) throw std::invalid_argument("scale_argument: s must be positive");
  const int n = f.degree();
  const Int& p = s.get_num();
  const Int& q = s.get_den();
  // den^n · f(sX): coefficient of X^(n-i) is a_i · p^(n-i) · q^i.
  std::vector<Int> out(static_cast<std::size_t>(n) + 1);
  Int ppow = 1;
  for (int i = n; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * ppow;
    ppow *= p;
  }
  Int qpow = 1;
  for (int i = 1; i <= n; ++i) {
    qpow *= q;
    out[static_cast<std::size_t>(i)] *= qpow;
  }
  return IntPoly(std::move(out));
}

RatPoly reciprocal(const RatPoly& p) {
  std::vector<Rat> out(p.coeffs().rbegin(), p.coeffs().rend());
  return RatPoly(std::move(out));
}

IntPoly negate_argument(const IntPoly& f) {
  const int n = f.degree();
  std::vector<Int> out = f.coeffs();
  for (int i = 0; i <= n; ++i)
    if ((n - i) % 2 != 0) out[static_cast<std::size_t>(i)] = -out[static_cast<std::size_t>(i)];
  return IntPoly(std::move(out));
}

IntPoly negate(const IntPoly& f) {
  std::vector<Int> out = f.coeffs();
  for (Int& a : out) a = -a;
  return IntPoly(std::move(out));
}

std::pair<IntPoly, int> strip_zero_roots(const IntPoly& f) {
  const std::vector<Int>& c = f.coeffs();
  std::size_t last = c.size();
  while (last > 1 && sgn(c[last - 1]) == 0) --last;
  int k = static_cast<int>(c.size() - last);
  return {IntPoly(std::vector<Int>(c.begin(), c.begin() + static_cast<long>(last))), k};
}

int exponent_gcd(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("exponent_gcd: constant polynomial");
  int g = 0;
  for (int i = 0; i <= n; ++i) {
    if (sgn(f[static_cast<std::size_t>(i)]) != 0) g = std::gcd(g, n - i);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f, bool sign_normalize) {
  Int c = f.content();
  if (sign_normalize && sgn(f.lead()) < 0) c = -c;
  if (c == 1) return f;
  std::vector<Int> out = f.coeffs();
  for (Int& a : out) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

namespace {

// c * (a mod b) for some c > 0: pseudo-remainder built from repeated
// "r <- lc(b)·r − lc(r)·X^(dr−db)·b" steps, sign-corrected so the overall
// multiplier is positive.  Result is descending, possibly empty.
std::vector<Int> pseudo_rem_even(const std::vector<Int>& a,
                                 const std::vector<Int>& b) {
  std::vector<Int> r = a;
  const Int& lb = b.front();
  long scalings = 0;
  while (true) {
    std::size_t z = 0;
    while (z < r.size() && sgn(r[z]) == 0) ++z;
    if (z) r.erase(r.begin(), r.begin() + static_cast<long>(z));
    if (r.size() < b.size()) break;
    Int lr = r.front();
    for (Int& x : r) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= lr * b[i];
    r.erase(r.begin());  // exact cancellation at the top
    ++scalings;
  }
  if (scalings % 2 != 0 && sgn(lb) < 0)
    for (Int& x : r) x = -x;
  return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> u = primitive_part(a).coeffs();
  std::vector<Int> v = primitive_part(b).coeffs();
  if (u.size() < v.size()) std::swap(u, v);
  while (true) {
    std::vector<Int> r = pseudo_rem_even(u, v);
    // trim leading zeros
    std::size_t i = 0;
    while (i < r.size() && sgn(r[i]) == 0) ++i;
    r.erase(r.begin(), r.begin() + static_cast<long>(i));
    if (r.empty()) {
      IntPoly g = primitive_part(IntPoly(std::move(v)));
      return sgn(g.lead()) < 0 ? negate(g) : g;
    }
    u = std::move(v);
    v = primitive_part(IntPoly(std::move(r))).coeffs();
  }
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.degree() > f.degree()) return std::nullopt;
  std::vector<Int> r = f.coeffs();
  const std::vector<Int>& d = g.coeffs();
  const std::size_t qlen = r.size() - d.size() + 1;
  std::vector<Int> q(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    Int& top = r[i];
    if (!mpz_divisible_p(top.get_mpz_t(), d.front().get_mpz_t()))
      return std::nullopt;
    Int qi;
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), d.front().get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= qi * d[j];
    q[i] = std::move(qi);
  }
  for (const Int& x : r)
    if (sgn(x) != 0) return std::nullopt;
  if (sgn(q.front()) == 0) return std::nullopt;
  return IntPoly(std::move(q));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_integer_token(const std::string& t) {
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  using Kind = PolyParseError::Kind;
  if (trim(text).empty())
    throw PolyParseError(Kind::EmptyInput, "empty input");
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string raw = comma == std::string::npos
                          ? text.substr(pos)
                          : text.substr(pos, comma - pos);
    std::string tok = trim(raw);
    if (tok.empty() || !is_integer_token(tok))
      throw PolyParseError(Kind::BadToken,
                           "invalid coefficient token '" + tok + "'");
    coeffs.emplace_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (sgn(coeffs.front()) == 0)
    throw PolyParseError(Kind::ZeroLeadingCoefficient,
                         "zero leading coefficient");
  return IntPoly(std::move(coeffs));
}

std::string render_poly(const IntPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p[i].get_str();
  }
  return out;
}

}  // namespace dompoly
