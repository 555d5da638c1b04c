#pragma once
// Exact univariate polynomial arithmetic over the rationals: Euclidean
// division, GCDs via primitive remainder sequences, Sturm chains, real-root
// isolation and bisection refinement, and the quotient ring Q[x]/(m) used to
// verify solution families symbolically.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "types.hpp"

namespace einmetric {

// Coefficient of x^k lives at index k; the zero polynomial is the empty
// vector and has degree -1.
using UPoly = std::vector<Rat>;

inline void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool uis_zero(const UPoly& p) { return p.empty(); }

inline UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  utrim(r);
  return r;
}

inline UPoly uneg(UPoly a) {
  for (Rat& c : a) c = -c;
  return a;
}

inline UPoly usub(const UPoly& a, const UPoly& b) { return uadd(a, uneg(b)); }

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

inline UPoly uscale(UPoly a, const Rat& c) {
  if (c == 0) return {};
  for (Rat& x : a) x *= c;
  return a;
}

inline Rat ueval(const UPoly& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline UPoly uderiv(const UPoly& p) {
  UPoly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
  utrim(r);
  return r;
}

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  require(!b.empty(), "division by the zero polynomial");
  UPoly q;
  if (udeg(a) >= udeg(b)) q.assign(udeg(a) - udeg(b) + 1, Rat(0));
  while (udeg(a) >= udeg(b)) {
    int k = udeg(a) - udeg(b);
    Rat c = a.back() / b.back();
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    a.pop_back();
    utrim(a);
  }
  return {std::move(q), std::move(a)};
}

// Divide by the positive rational content, preserving the sign of every
// coefficient.  Keeps remainder-sequence entries small without disturbing
// Sturm sign variations.
inline UPoly uprimitive(const UPoly& p) {
  if (p.empty()) return p;
  Int num(0), den(1);
  for (const Rat& c : p) {
    Rat a = c >= 0 ? c : -c;
    num = gcd(num, a.get_num());
    den = lcm(den, a.get_den());
  }
  Rat inv = Rat(den) / Rat(num);
  UPoly r = p;
  for (Rat& c : r) {
    c *= inv;
    c.canonicalize();
  }
  return r;
}

// Primitive integer image: clear denominators, divide by content, normalize
// the leading coefficient positive.  Exact comparisons of eliminants reduce
// to equality of these vectors.
inline std::vector<Int> uprimitive_integer(const UPoly& p) {
  UPoly q = uprimitive(p);
  if (!q.empty() && q.back() < 0)
    for (Rat& c : q) c = -c;
  std::vector<Int> r;
  for (const Rat& c : q) {
    require(c.get_den() == 1, "primitive normalization left a denominator");
    r.push_back(c.get_num());
  }
  return r;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  a = uprimitive(a);
  b = uprimitive(b);
  while (!b.empty()) {
    UPoly r = uprimitive(udivmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) a = uneg(a);
  return a;
}

// Largest square-free divisor, p / gcd(p, p').
inline UPoly usquarefree(const UPoly& p) {
  if (udeg(p) <= 1) return uprimitive(p);
  UPoly g = ugcd(p, uderiv(p));
  if (udeg(g) == 0) return uprimitive(p);
  return uprimitive(udivmod(p, g).first);
}

// Sturm chain of a square-free polynomial.
inline std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> c;
  c.push_back(uprimitive(p));
  c.push_back(uprimitive(uderiv(p)));
  while (!c.back().empty() && udeg(c.back()) > 0) {
    UPoly r = uprimitive(udivmod(c[c.size() - 2], c.back()).second);
    c.push_back(uneg(r));
  }
  if (c.back().empty()) c.pop_back();
  return c;
}

inline int sturm_variations(const std::vector<UPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const UPoly& p : chain) {
    Rat v = ueval(p, x);
    int s = v > 0 ? 1 : v < 0 ? -1 : 0;
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Every real root lies strictly inside (-B, B).
inline Rat cauchy_bound(const UPoly& p) {
  require(!p.empty(), "root bound of the zero polynomial");
  Rat m(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rat a = p[i] >= 0 ? p[i] : -p[i];
    if (a > m) m = a;
  }
  Rat lead = p.back() >= 0 ? p.back() : -p.back();
  return Rat(1) + m / lead;
}

// Disjoint intervals, each containing exactly one real root of p.  A
// degenerate interval [r, r] marks an exact rational root.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& p) {
  std::vector<std::pair<Rat, Rat>> out;
  UPoly sf = usquarefree(p);
  if (udeg(sf) < 1) return out;
  auto chain = sturm_chain(sf);
  Rat B = cauchy_bound(sf);

  struct Seg {
    Rat a, b;
    int n;
  };
  std::vector<Seg> work;
  work.push_back({-B, B, sturm_count(chain, -B, B)});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    if (ueval(sf, mid) == 0) {
      out.emplace_back(mid, mid);
      // Shrink a guard interval around the exact root so the two recursive
      // halves exclude it.
      Rat w = (s.b - s.a) / 4;
      while (sturm_count(chain, mid - w, mid + w) != 1 ||
             ueval(sf, mid - w) == 0 || ueval(sf, mid + w) == 0)
        w /= 2;
      work.push_back({s.a, mid - w, sturm_count(chain, s.a, mid - w)});
      work.push_back({mid + w, s.b, sturm_count(chain, mid + w, s.b)});
    } else {
      work.push_back({s.a, mid, sturm_count(chain, s.a, mid)});
      work.push_back({mid, s.b, sturm_count(chain, mid, s.b)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

// Smallest-denominator rational in [lo, hi], walking the continued fraction
// of the interval.
inline Rat simplest_rational(Rat lo, Rat hi) {
  if (hi < lo) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return -simplest_rational(-hi, -lo);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rat(f) == lo) return lo;
  if (hi >= Rat(f) + 1) return Rat(f) + 1;
  return Rat(f) + Rat(1) / simplest_rational(Rat(1) / (hi - Rat(f)),
                                             Rat(1) / (lo - Rat(f)));
}

// Bisect an isolating interval of the square-free polynomial down to the
// requested width.  A rational root simple enough to be the simplest
// rational of the final interval is returned exactly.
inline Rat refine_root(const UPoly& sf, Rat lo, Rat hi, const Rat& width) {
  if (lo == hi) return lo;
  Rat flo = ueval(sf, lo);
  if (flo == 0) return lo;
  Rat fhi = ueval(sf, hi);
  if (fhi == 0) return hi;
  require((flo < 0) != (fhi < 0), "interval does not bracket a root");
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    Rat fm = ueval(sf, mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  Rat snap = simplest_rational(lo, hi);
  if (ueval(sf, snap) == 0) return snap;
  return (lo + hi) / 2;
}

// All distinct real roots, refined to within `width`.
inline std::vector<Rat> real_roots(const UPoly& p, const Rat& width) {
  std::vector<Rat> out;
  UPoly sf = usquarefree(p);
  for (const auto& [lo, hi] : isolate_real_roots(p))
    out.push_back(refine_root(sf, lo, hi, width));
  return out;
}

// Convert a Poly that uses at most one ring variable into dense form; `var`
// is that variable's index.
inline UPoly to_univariate(const Poly& p, int var) {
  UPoly r;
  for (const auto& [m, c] : p.terms) {
    for (int i = 0; i < p.nvars(); ++i)
      require(i == var || m[i] == 0, "polynomial is not univariate in " + p.vars[var]);
    require(m[var] >= 0, "Laurent term in univariate conversion");
    if (m[var] >= static_cast<int>(r.size())) r.resize(m[var] + 1, Rat(0));
    r[m[var]] += c;
  }
  utrim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Quotient ring Q[x]/(m)
// ---------------------------------------------------------------------------

// Elements are reduced representatives (degree < deg m).  The modulus need
// not be irreducible; `inverse` fails loudly on zero divisors.
class ModRing {
 public:
  explicit ModRing(UPoly modulus) : m_(std::move(modulus)) {
    utrim(m_);
    require(udeg(m_) >= 1, "modulus must have positive degree");
    Rat lead = m_.back();
    for (Rat& c : m_) c /= lead;
  }

  const UPoly& modulus() const { return m_; }

  UPoly reduce(const UPoly& p) const { return udivmod(p, m_).second; }
  UPoly zero() const { return {}; }
  UPoly one() const { return reduce({Rat(1)}); }
  UPoly constant(const Rat& c) const { return reduce({c}); }
  UPoly gen() const { return reduce({Rat(0), Rat(1)}); }

  UPoly add(const UPoly& a, const UPoly& b) const { return uadd(a, b); }
  UPoly sub(const UPoly& a, const UPoly& b) const { return usub(a, b); }
  UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(umul(a, b)); }

  UPoly pow(UPoly a, int e) const {
    require(e >= 0, "negative power in quotient ring");
    UPoly r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Extended Euclid; requires gcd(a, m) to be a unit.
  UPoly inverse(const UPoly& a) const {
    UPoly r0 = m_, r1 = reduce(a);
    UPoly s0 = {}, s1 = {Rat(1)};
    require(!uis_zero(r1), "inverse of zero in quotient ring");
    while (udeg(r1) > 0) {
      auto [q, r2] = udivmod(r0, r1);
      UPoly s2 = usub(s0, umul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    require(!uis_zero(r1), "element is a zero divisor in quotient ring");
    return reduce(uscale(s1, Rat(1) / r1[0]));
  }

 private:
  UPoly m_;  // monic
};

// Evaluate a multivariate polynomial at a point whose coordinates are
// quotient-ring elements.
inline UPoly eval_in_ring(const Poly& p, const std::vector<UPoly>& at, const ModRing& R) {
  require(static_cast<int>(at.size()) == p.nvars(), "evaluation point size mismatch");
  UPoly acc = R.zero();
  for (const auto& [m, c] : p.terms) {
    UPoly t = R.constant(c);
    for (int i = 0; i < p.nvars(); ++i) {
      require(m[i] >= 0, "Laurent term in quotient-ring evaluation");
      if (m[i] != 0) t = R.mul(t, R.pow(at[i], m[i]));
    }
    acc = R.add(acc, t);
  }
  return acc;
}

}  // namespace einmetric
