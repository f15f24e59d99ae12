#include "dompoly/factor.hpp"

#include <algorithm>

#include "dompoly/bounds.hpp"

namespace dompoly {

namespace {

// All positive divisors of |v|, v != 0, by trial division.
std::vector<Int> divisors_of(const Int& v) {
  Int n = abs(v);
  std::vector<std::pair<Int, int>> fac;
  for (Int p(2); p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    Int pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

// Monic-direction linear factor q X - p from a root p/q in lowest terms.
IntPoly linear_from_root(const Rat& r) {
  return IntPoly(std::vector<Int>{r.get_den(), -r.get_num()});
}

// Largest coefficient a rational factor of f can have, cleared to a
// primitive integer factor of degree m.
Int factor_coeff_bound(const IntPoly& f, int m) {
  MahlerUpper mu = mahler_upper(f);
  return binomial(static_cast<unsigned long>(m),
                  static_cast<unsigned long>(m / 2)) *
         mu.ceiling;
}

bool try_divisor(const IntPoly& f, std::vector<Int> cand,
                 std::optional<IntPoly>& out) {
  while (cand.size() > 1 && sgn(cand.front()) == 0)
    cand.erase(cand.begin());
  if (cand.size() < 2) return false;
  IntPoly g(std::move(cand));
  if (g.degree() >= f.degree()) return false;
  if (auto q = divide_exact(f, g)) {
    (void)q;
    out = primitive_part(g, true);
    return true;
  }
  return false;
}

// Degree-2 candidates b0 X^2 + b1 X + b2 with b0 | lead, b2 | constant and
// b0 + b1 + b2 a divisor of f(1); f has no rational roots here, so f(1) and
// f(0) are nonzero.
std::optional<IntPoly> quadratic_factor(const IntPoly& f) {
  const Int f1 = evaluate(f, Int(1));
  const Int fm1 = evaluate(f, Int(-1));
  const Int bound = factor_coeff_bound(f, 2);
  std::optional<IntPoly> out;
  for (const Int& b0 : divisors_of(f.lead())) {
    if (b0 > bound) continue;
    for (const Int& b2a : divisors_of(f.constant())) {
      if (b2a > bound) continue;
      for (int s2 = 0; s2 < 2; ++s2) {
        Int b2 = s2 ? Int(-b2a) : b2a;
        for (const Int& sa : divisors_of(f1)) {
          for (int ss = 0; ss < 2; ++ss) {
            Int s = ss ? Int(-sa) : sa;
            Int b1 = s - b0 - b2;
            if (abs(b1) > bound) continue;
            Int at_m1 = b0 - b1 + b2;
            if (sgn(at_m1) == 0 || fm1 % at_m1 != 0) continue;
            if (try_divisor(f, {b0, b1, b2}, out)) return out;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Degree-3 candidates pinned by the values s = g(1) | f(1), t = g(-1) | f(-1):
// b1 = (s+t)/2 - b3 and b2 = (s-t)/2 - b0, so s and t must share parity.
std::optional<IntPoly> cubic_factor(const IntPoly& f) {
  const Int f1 = evaluate(f, Int(1));
  const Int fm1 = evaluate(f, Int(-1));
  const Int bound = factor_coeff_bound(f, 3);
  std::optional<IntPoly> out;
  for (const Int& b0 : divisors_of(f.lead())) {
    if (b0 > bound) continue;
    for (const Int& b3a : divisors_of(f.constant())) {
      if (b3a > bound) continue;
      for (int s3 = 0; s3 < 2; ++s3) {
        Int b3 = s3 ? Int(-b3a) : b3a;
        for (const Int& sa : divisors_of(f1)) {
          for (int ss = 0; ss < 2; ++ss) {
            Int s = ss ? Int(-sa) : sa;
            for (const Int& ta : divisors_of(fm1)) {
              for (int ts = 0; ts < 2; ++ts) {
                Int t = ts ? Int(-ta) : ta;
                if ((s - t) % 2 != 0) continue;
                Int b1 = (s + t) / 2 - b3;
                Int b2 = (s - t) / 2 - b0;
                if (abs(b1) > bound || abs(b2) > bound) continue;
                if (try_divisor(f, {b0, b1, b2, b3}, out)) return out;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// General degree-m search by interpolation through divisor values at
// 0, 1, -1, 2, -2, ...; f has no integer roots here, so every value is
// nonzero.  Only reached for inputs of degree >= 8.
std::optional<IntPoly> interpolated_factor(const IntPoly& f, int m) {
  std::vector<Int> xs;
  xs.push_back(Int(0));
  for (int k = 1; static_cast<int>(xs.size()) < m + 1; ++k) {
    xs.push_back(Int(k));
    if (static_cast<int>(xs.size()) < m + 1) xs.push_back(Int(-k));
  }
  std::vector<std::vector<Int>> choices;
  for (const Int& x : xs) {
    std::vector<Int> signed_divs;
    for (const Int& d : divisors_of(evaluate(f, x))) {
      signed_divs.push_back(d);
      signed_divs.push_back(-d);
    }
    choices.push_back(std::move(signed_divs));
  }
  // Fix the sign at the first point: g and -g divide the same polynomials.
  std::vector<Int> first_pos;
  for (const Int& d : choices[0])
    if (sgn(d) > 0) first_pos.push_back(d);
  choices[0] = std::move(first_pos);

  // Lagrange basis polynomial for each point, descending coefficients.
  std::vector<std::vector<Rat>> lagrange(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));  // multiply by (X - xs[j])
      for (std::size_t t = basis.size() - 1; t > 0; --t)
        basis[t] -= Rat(xs[j]) * basis[t - 1];
      denom *= Rat(xs[i] - xs[j]);
    }
    for (Rat& c : basis) c /= denom;
    lagrange[i] = std::move(basis);
  }

  std::vector<std::size_t> idx(xs.size(), 0);
  std::optional<IntPoly> out;
  while (true) {
    std::vector<Rat> acc(static_cast<std::size_t>(m) + 1, Rat(0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Rat w(choices[i][idx[i]]);
      for (std::size_t t = 0; t < acc.size(); ++t)
        acc[t] += w * lagrange[i][t];
    }
    // Integer coefficients only.
    bool integral = true;
    std::vector<Int> cand;
    for (const Rat& c : acc) {
      if (c.get_den() != 1) {
        integral = false;
        break;
      }
      cand.push_back(c.get_num());
    }
    if (integral && try_divisor(f, std::move(cand), out)) return out;

    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return std::nullopt;
}

std::optional<IntPoly> degree_m_factor(const IntPoly& f, int m) {
  if (m == 2) return quadratic_factor(f);
  if (m == 3) return cubic_factor(f);
  return interpolated_factor(f, m);
}

}  // namespace

std::vector<Rat> rational_roots(const IntPoly& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("rational_roots: degree must be >= 1");
  std::vector<Rat> roots;
  auto [g, k] = strip_zero_roots(f);
  if (k > 0) roots.push_back(Rat(0));
  if (g.degree() < 1) return roots;
  std::vector<Int> ps = divisors_of(g.constant());
  std::vector<Int> qs = divisors_of(g.lead());
  for (const Int& p : ps)
    for (const Int& q : qs) {
      if (gcd(p, q) != 1) continue;
      Rat r = make_rat(p, q);
      if (sign_at(g, r) == 0) roots.push_back(r);
      Rat nr = make_rat(-p, q);
      if (sign_at(g, nr) == 0) roots.push_back(nr);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<IntPoly> find_nontrivial_factor(const IntPoly& f0) {
  if (f0.degree() < 2) return std::nullopt;
  IntPoly f = primitive_part(f0, true);
  const int n = f.degree();

  if (n == 2) {
    const Int disc = f[1] * f[1] - 4 * f[0] * f[2];
    if (!is_perfect_square(disc)) return std::nullopt;
    Int root = ceil_sqrt(disc);  // exact since disc is a square
    Rat r = make_rat(-f[1] + root, 2 * f[0]);
    return primitive_part(linear_from_root(r), true);
  }

  std::vector<Rat> roots = rational_roots(f);
  if (!roots.empty())
    return primitive_part(linear_from_root(roots.front()), true);
  if (n == 3) return std::nullopt;

  for (int m = 2; m <= n / 2; ++m)
    if (auto g = degree_m_factor(f, m)) return g;
  return std::nullopt;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  return !find_nontrivial_factor(f).has_value();
}

}  // namespace dompoly
