#include "dompoly/bistritz.hpp"

#include <algorithm>

#include "dompoly/sturm.hpp"  // sign_changes

namespace dompoly {

namespace {

using Kind = StabilityReport::Kind;

template <typename T>
bool all_zero(const std::vector<T>& v) {
  for (const T& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

template <typename T>
T value_at_one(const std::vector<T>& v) {
  T s(0);
  for (const T& x : v) s += x;
  return s;
}

// Quotient of v / (X - 1); requires v(1) == 0 so the division is exact.
template <typename T>
std::vector<T> divide_x_minus_1(const std::vector<T>& v) {
  std::vector<T> q(v.size() - 1);
  q[0] = v[0];
  for (std::size_t i = 1; i + 1 < v.size(); ++i) q[i] = v[i] + q[i - 1];
  if (sgn(T(v.back() + q.back())) != 0)
    throw std::logic_error("stability: division by X-1 left a remainder");
  return q;
}

template <typename T>
std::size_t trailing_zero_count(const std::vector<T>& v) {
  std::size_t q = 0;
  while (q < v.size() && sgn(v[v.size() - 1 - q]) == 0) ++q;
  return q;
}

// The level below the pair: (delta * (X+1) * low - cur) / X, where delta is
// cur(0) / low(0) in spirit; the caller passes the two weights separately so
// the integer path can keep everything unscaled.  cur has nominal degree k
// (k+1 entries), low has k entries; the result has k-1.  Both ends of the
// numerator must cancel exactly: the constant term by the choice of weights,
// the leading term by self-reciprocity.
template <typename T>
std::vector<T> step_down(const std::vector<T>& cur, const std::vector<T>& low,
                         const T& w_low, const T& w_cur) {
  const std::size_t k = low.size();
  std::vector<T> next(k - 1);
  T end = w_low * low[0] - w_cur * cur[0];
  if (sgn(end) != 0)
    throw std::logic_error("stability: leading term failed to cancel");
  end = w_low * low[k - 1] - w_cur * cur[k];
  if (sgn(end) != 0)
    throw std::logic_error("stability: constant term failed to cancel");
  for (std::size_t j = 0; j < k - 1; ++j)
    next[j] = w_low * (low[j + 1] + low[j]) - w_cur * cur[j + 1];
  return next;
}

// Second-type repair at a level pair (cur, low) where low(0) = 0 but low is
// not identically zero:
//   cur <- cur + (X-1) * low * (X^q - X^-q)
//   low <- low * (K + X^q + X^-q),   K = 3
// with q the multiplicity of 0 as a root of low.  Self-reciprocity gives low
// q zero coefficients at each end, so both shifts stay polynomials.  The
// integer path folds its pair scale ratio rho = p/r into the update; the
// exact path passes rho = 1.
template <typename T>
void apply_patch(std::vector<T>& cur, std::vector<T>& low, const T& p,
                 const T& r) {
  const std::size_t k = low.size();
  const std::size_t q = trailing_zero_count(low);
  if (q == 0 || q >= k)
    throw std::logic_error("stability: repair called on a non-singular level");
  for (std::size_t i = 0; i < q; ++i)
    if (sgn(low[i]) != 0)
      throw std::logic_error("stability: level lost self-reciprocity");

  std::vector<T> up(k, T(0)), down(k, T(0));  // X^q * low, X^-q * low
  for (std::size_t j = 0; j + q < k; ++j) up[j] = low[j + q];
  for (std::size_t j = q; j < k; ++j) down[j] = low[j - q];

  std::vector<T> w(k);  // up - down
  for (std::size_t j = 0; j < k; ++j) w[j] = up[j] - down[j];
  for (std::size_t i = 0; i <= k; ++i) {
    T shifted = (i < k ? w[i] : T(0)) - (i > 0 ? w[i - 1] : T(0));
    cur[i] = r * cur[i] + p * shifted;
  }
  for (std::size_t j = 0; j < k; ++j) low[j] = T(3) * low[j] + up[j] + down[j];
}

// Divide out the content, returning it (1 for the zero vector).
Int strip_content(std::vector<Int>& v) {
  Int c(0);
  for (const Int& x : v) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c == 1) return c;
  }
  if (sgn(c) == 0) return Int(1);
  for (Int& x : v) x /= c;
  return c;
}

}  // namespace

StabilityReport analyze_stability(const IntPoly& A) {
  const std::vector<Int>& a = A.coeffs();
  const int n = A.degree();
  StabilityReport rep;

  if (n == 0) {
    rep.kind = Kind::Stable;
    rep.roots_outside = 0;
    return rep;
  }
  if (sgn(value_at_one(a)) == 0) {
    rep.kind = Kind::OnePointFail;
    rep.normal = false;
    return rep;
  }

  std::vector<Int> cur(a.size()), diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    cur[i] = a[i] + a[a.size() - 1 - i];
    diff[i] = a[i] - a[a.size() - 1 - i];
  }
  std::vector<Int> low = divide_x_minus_1(diff);

  Int c_cur = strip_content(cur);
  Int c_low = strip_content(low);
  Rat rho = make_rat(c_low, c_cur);  // scale of cur relative to low

  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(n) + 1);
  signs.push_back(sgn(value_at_one(cur)));
  signs.push_back(sgn(value_at_one(low)));

  for (int k = n; k >= 2;) {
    if (all_zero(low)) {
      rep.kind = Kind::FirstTypeSingular;
      rep.normal = false;
      return rep;
    }
    if (sgn(low.back()) == 0) {
      apply_patch<Int>(cur, low, rho.get_num(), rho.get_den());
      Int ck = strip_content(cur);
      Int ck1 = strip_content(low);
      rho = make_rat(rho.get_num() * ck1, ck);
      rep.normal = false;
      ++rep.patches;
      continue;
    }

    const Int& t0_cur = cur.back();
    const Int& t0_low = low.back();
    Int w_low = (sgn(t0_low) > 0 ? t0_cur : Int(-t0_cur));
    Int w_cur = abs(t0_low);
    std::vector<Int> next = step_down<Int>(cur, low, w_low, w_cur);

    if (!all_zero(next)) {
      Int c = strip_content(next);
      // New pair scale: lambda_{k-1} / lambda_{k-2} = c / (rho * |low(0)|).
      rho = Rat(c) / (rho * w_cur);
    }
    signs.push_back(sgn(value_at_one(next)));
    cur = std::move(low);
    low = std::move(next);
    --k;
  }

  if (all_zero(low)) {  // T_0 = 0 closes the list of normal conditions
    rep.kind = Kind::FirstTypeSingular;
    rep.normal = false;
    return rep;
  }

  int nu = sign_changes(signs);
  rep.roots_outside = nu;
  rep.kind = (rep.normal && nu == 0) ? Kind::Stable : Kind::Unstable;
  return rep;
}

bool is_stable(const IntPoly& A) { return analyze_stability(A).is_stable(); }

std::optional<int> count_roots_outside(const IntPoly& A) {
  return analyze_stability(A).roots_outside;
}

std::pair<RatPoly, RatPoly> t_init(const RatPoly& A) {
  const std::vector<Rat>& a = A.coeffs();
  if (a.empty() || sgn(a.front()) == 0)
    throw std::invalid_argument("t_init: nonzero leading coefficient required");
  if (a.size() < 2)
    throw std::invalid_argument("t_init: degree must be >= 1");
  if (sgn(value_at_one(a)) == 0)
    throw std::invalid_argument("t_init: input vanishes at 1");
  std::vector<Rat> sum(a.size()), diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum[i] = a[i] + a[a.size() - 1 - i];
    diff[i] = a[i] - a[a.size() - 1 - i];
  }
  return {RatPoly(std::move(sum)), RatPoly(divide_x_minus_1(diff))};
}

TSequence build_t_sequence(const RatPoly& A) {
  const std::vector<Rat>& a = A.coeffs();
  if (a.empty() || sgn(a.front()) == 0)
    throw std::invalid_argument(
        "build_t_sequence: nonzero leading coefficient required");
  const int n = static_cast<int>(a.size()) - 1;

  TSequence seq;
  seq.levels.assign(static_cast<std::size_t>(n) + 1, RatPoly());

  if (n >= 1 && sgn(value_at_one(a)) == 0) {
    seq.report.kind = Kind::OnePointFail;
    seq.report.normal = false;
    seq.lowest_level = n + 1;
    return seq;
  }
  if (n == 0) {
    seq.levels[0] = RatPoly(std::vector<Rat>{Rat(2) * a[0]});
    seq.at_one = {Rat(2) * a[0]};
    seq.report.kind = Kind::Stable;
    seq.report.roots_outside = 0;
    seq.lowest_level = 0;
    return seq;
  }

  std::vector<std::vector<Rat>> lv(static_cast<std::size_t>(n) + 1);
  {
    auto [tn, tn1] = t_init(A);
    lv[static_cast<std::size_t>(n)] = tn.coeffs();
    lv[static_cast<std::size_t>(n) - 1] = tn1.coeffs();
  }

  int lowest = n - 1;
  for (int k = n; k >= 2;) {
    std::vector<Rat>& cur = lv[static_cast<std::size_t>(k)];
    std::vector<Rat>& low = lv[static_cast<std::size_t>(k) - 1];
    if (all_zero(low)) {
      seq.report.kind = Kind::FirstTypeSingular;
      seq.report.normal = false;
      break;
    }
    if (sgn(low.back()) == 0) {
      apply_patch<Rat>(cur, low, Rat(1), Rat(1));
      seq.report.normal = false;
      ++seq.report.patches;
      continue;
    }
    Rat delta = cur.back() / low.back();
    lv[static_cast<std::size_t>(k) - 2] =
        step_down<Rat>(cur, low, delta, Rat(1));
    lowest = k - 2;
    --k;
  }

  if (seq.report.kind != Kind::FirstTypeSingular && lowest == 0 &&
      all_zero(lv[0])) {
    seq.report.kind = Kind::FirstTypeSingular;
    seq.report.normal = false;
  }

  seq.lowest_level = lowest;
  for (int k = n; k >= lowest; --k) {
    seq.levels[static_cast<std::size_t>(k)] =
        RatPoly(std::vector<Rat>(lv[static_cast<std::size_t>(k)]));
    seq.at_one.push_back(value_at_one(lv[static_cast<std::size_t>(k)]));
  }

  if (seq.report.kind != Kind::FirstTypeSingular) {
    int nu = sign_changes(seq.at_one);
    seq.report.roots_outside = nu;
    seq.report.kind =
        (seq.report.normal && nu == 0) ? Kind::Stable : Kind::Unstable;
  }
  return seq;
}

}  // namespace dompoly
