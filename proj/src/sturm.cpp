#include "dompoly/sturm.hpp"

#include <algorithm>

#include "dompoly/bounds.hpp"

namespace dompoly {

namespace {

// c * (a mod b) with c > 0 (same construction as the gcd routine).
std::vector<Int> pos_scaled_rem(const std::vector<Int>& a,
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
    r.erase(r.begin());
    ++scalings;
  }
  if (scalings % 2 != 0 && sgn(lb) < 0)
    for (Int& x : r) x = -x;
  return r;
}

}  // namespace

SturmChain build_chain(const IntPoly& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("build_chain: degree must be >= 1");
  SturmChain chain{f, {}};
  chain.polys.push_back(f);
  chain.polys.push_back(primitive_part(derivative(f)));
  while (true) {
    const IntPoly& p2 = chain.polys[chain.polys.size() - 2];
    const IntPoly& p1 = chain.polys[chain.polys.size() - 1];
    std::vector<Int> rem = pos_scaled_rem(p2.coeffs(), p1.coeffs());
    if (rem.empty()) break;
    for (Int& x : rem) x = -x;
    chain.polys.push_back(primitive_part(IntPoly(std::move(rem))));
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int sign_changes(const std::vector<Rat>& values) {
  std::vector<int> s;
  s.reserve(values.size());
  for (const Rat& v : values) s.push_back(sgn(v));
  return sign_changes(s);
}

namespace {

struct SigmaResult {
  int changes;
  int f_sign;  // sign of the chain head at the probe
};

// Sign changes through the chain at num/den (den > 0), via the homogenized
// integer form of each member.  Powers of den are shared across members:
// the coefficient i places below the leading one always carries den^i.
SigmaResult sigma_at(const SturmChain& chain, const Rat& x) {
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  static thread_local std::vector<Int> dpow;
  const std::size_t maxlen = chain.polys.front().coeffs().size();
  if (dpow.size() < maxlen) dpow.resize(maxlen);
  const bool trivial_den = (den == 1);
  if (!trivial_den) {
    dpow[0] = 1;
    for (std::size_t i = 1; i < maxlen; ++i) dpow[i] = dpow[i - 1] * den;
  }

  static thread_local Int v;
  int changes = 0, prev = 0, head = 0;
  bool first = true;
  for (const IntPoly& p : chain.polys) {
    const std::vector<Int>& c = p.coeffs();
    v = c[0];
    if (trivial_den) {
      for (std::size_t i = 1; i < c.size(); ++i) {
        v *= num;
        v += c[i];
      }
    } else {
      for (std::size_t i = 1; i < c.size(); ++i) {
        v *= num;
        v += c[i] * dpow[i];
      }
    }
    int s = sgn(v);
    if (first) {
      head = s;
      first = false;
    }
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return {changes, head};
}

}  // namespace

int chain_sign_changes(const SturmChain& chain, const Rat& x) {
  return sigma_at(chain, x).changes;
}

int count_real_roots_in(const SturmChain& chain, const Rat& a, const Rat& b) {
  if (!(a < b)) throw std::invalid_argument("count_real_roots_in: need a < b");
  SigmaResult sa = sigma_at(chain, a);
  SigmaResult sb = sigma_at(chain, b);
  if (sa.f_sign == 0 || sb.f_sign == 0)
    throw std::invalid_argument("count_real_roots_in: endpoint is a root");
  return sa.changes - sb.changes;
}

namespace {

// One bracketing engine serves both axes: side = +1 looks at roots of f in
// (a, b), side = -1 at roots of f(-X) there, probing the single chain at
// mirrored points.  sigma() is oriented so that sigma(a) - sigma(b) is the
// root count on either side.
class AxisView {
 public:
  AxisView(const SturmChain& chain, int side) : chain_(chain), side_(side) {}

  SigmaResult sigma(const Rat& x) const {
    SigmaResult s = sigma_at(chain_, side_ > 0 ? x : Rat(-x));
    s.changes *= side_;
    return s;
  }
  int f_sign(const Rat& x) const {
    return sign_at(chain_.f, side_ > 0 ? x : Rat(-x));
  }
  int mirror_sign(const Rat& x) const {
    return sign_at(chain_.f, side_ > 0 ? Rat(-x) : x);
  }
  long degree() const { return chain_.f.degree(); }

 private:
  const SturmChain& chain_;
  int side_;
};

bool width_done(const Rat& w, const Rat& d, bool strict) {
  return strict ? (w < d) : (w <= d);
}

// Bisect (a, b) keeping the rightmost root.  When the midpoint lands on a
// root, pull the left endpoint to just below it instead of splitting; when
// the mirror image of a probe is a root, nudge the probe leftwards within
// the middle half.  Every accepted point x thus has f(x) * f(-x) != 0, so
// the brackets this produces never sit on a root of either sign.
std::optional<std::pair<Rat, Rat>> locate_in_view(const AxisView& view, Rat a,
                                                  Rat b, const Rat& d,
                                                  const LocateOptions& opts) {
  SigmaResult sa = view.sigma(a);
  SigmaResult sb = view.sigma(b);
  if (sa.changes - sb.changes <= 0) return std::nullopt;
  const long dodge_cap = 2 * view.degree() + 16;

  long guard = 0;
  while (!width_done(b - a, d, opts.strict_width)) {
    if (++guard > 100000)
      throw std::logic_error("locate: bisection failed to converge");
    const Rat mid = (a + b) / 2;
    Rat c = mid;
    if (!opts.no_rational_roots) {
      Rat off = (b - a) / 8;
      bool repositioned = false;
      for (long j = 0;; ++j) {
        if (j > dodge_cap)
          throw std::logic_error("locate: probe dodging failed");
        if (view.f_sign(c) == 0) {
          // The probe is a root, so the rightmost root is >= c: drop the
          // left endpoint to just below c and restart the iteration.
          Rat gap = c - a;
          Rat step = (d < gap ? d : gap) / 2;
          Rat na = c - step;
          for (long t = 0; view.f_sign(na) == 0 || view.mirror_sign(na) == 0;
               ++t) {
            if (t > dodge_cap)
              throw std::logic_error("locate: endpoint dodging failed");
            step /= 2;
            na = c - step;
          }
          a = na;
          sa = view.sigma(a);
          repositioned = true;
          break;
        }
        if (view.mirror_sign(c) != 0) break;  // clean probe
        c = mid - off;                        // stays in the middle half
        off /= 2;
      }
      if (repositioned) continue;
    }
    SigmaResult sc = view.sigma(c);
    if (sc.changes - sb.changes > 0) {
      a = c;
      sa = sc;
    } else {
      b = c;
      sb = sc;
    }
  }
  return std::make_pair(a, b);
}

// Two-sided search over the modulus window (lo, hi): bracket the rightmost
// positive root first, then look for a negative root of larger modulus above
// the bracket.  Endpoints must satisfy f(x) * f(-x) != 0.
std::optional<Annulus> extreme_in_window(const SturmChain& chain, const Rat& lo,
                                         const Rat& hi, const Rat& d,
                                         const LocateOptions& opts) {
  AxisView pos(chain, +1), neg(chain, -1);
  auto p = locate_in_view(pos, lo, hi, d, opts);
  if (p) {
    const auto& [r1, R1] = *p;
    if (R1 < hi) {
      if (auto q = locate_in_view(neg, R1, hi, d, opts))
        return Annulus{q->first, q->second, -1};
    }
    return Annulus{r1, R1, +1};
  }
  if (auto q = locate_in_view(neg, lo, hi, d, opts))
    return Annulus{q->first, q->second, -1};
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Rat, Rat>> locate_largest_in(const IntPoly& f,
                                                     const Rat& a, const Rat& b,
                                                     const Rat& d,
                                                     const LocateOptions& opts) {
  if (!(a < b)) throw std::invalid_argument("locate_largest_in: need a < b");
  if (sgn(d) <= 0) throw std::invalid_argument("locate_largest_in: need d > 0");
  if (sign_at(f, a) == 0 || sign_at(f, b) == 0)
    throw std::invalid_argument("locate_largest_in: endpoint is a root");
  SturmChain chain = build_chain(f);
  return locate_in_view(AxisView(chain, +1), a, b, d, opts);
}

std::optional<Annulus> locate_extreme_real_root(const IntPoly& f, const Rat& d,
                                                const LocateOptions& opts) {
  if (f.degree() < 1)
    throw std::invalid_argument("locate_extreme_real_root: degree must be >= 1");
  if (sgn(f.constant()) == 0)
    throw std::invalid_argument("locate_extreme_real_root: zero constant term");
  if (sgn(d) <= 0)
    throw std::invalid_argument("locate_extreme_real_root: need d > 0");
  SturmChain chain = build_chain(f);

  auto [c1, c2] = cauchy_bounds(f);
  // The radius bounds are strict, so these loops are only a safeguard.
  const long cap = 2 * f.degree() + 16;
  for (long t = 0; sign_at(f, c1) == 0 || sign_at(f, Rat(-c1)) == 0; ++t) {
    if (t > cap) throw std::logic_error("locate: inner endpoint dodging failed");
    c1 /= 2;
  }
  for (long t = 0; sign_at(f, c2) == 0 || sign_at(f, Rat(-c2)) == 0; ++t) {
    if (t > cap) throw std::logic_error("locate: outer endpoint dodging failed");
    c2 += 1;
  }
  return extreme_in_window(chain, c1, c2, d, opts);
}

Annulus narrow_annulus(const IntPoly& f, const Annulus& wide, const Rat& d,
                       const LocateOptions& opts) {
  SturmChain chain = build_chain(f);
  // Redo the two-sided search inside the wide window rather than bisecting
  // only the recorded side: once the width passes below the modulus-gap
  // bound, a larger-modulus root on the other axis can no longer share the
  // bracket, so the winning side here is the true extreme.
  auto got = extreme_in_window(chain, wide.r, wide.R, d, opts);
  if (!got)
    throw std::logic_error("narrow_annulus: bracketed root disappeared");
  return *got;
}

}  // namespace dompoly
