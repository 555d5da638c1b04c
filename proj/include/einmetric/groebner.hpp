#pragma once
// Exact lex elimination for the Einstein systems.
//
// The pipeline is the classical one: Buchberger's algorithm (sugar selection,
// Gebauer-Moeller pair pruning, primitive-integer normalization) computes a
// degrevlex Groebner basis of the saturated ideal, and an exact FGLM change
// of order converts it to the reduced lex basis when the ideal is
// zero-dimensional; pure lex requests on other ideals run Buchberger in lex
// directly.  Saturation adjoins z * (product of all variables) - 1 with z
// greatest, so the lex basis members free of z generate the saturation and
// the member univariate in the least variable is the eliminant.  All
// arithmetic is exact over Q; a wall-clock budget turns an over-long run
// into an explicit infeasibility error instead of a silent stall.

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "types.hpp"

namespace einmetric {

// Raised when the exact path exceeds its budget; callers fall back to the
// numeric route.
struct infeasible_error : error {
  using error::error;
};

struct MonomialOrder {
  enum class Kind { lex, degrevlex };
  Kind kind = Kind::lex;
  std::vector<std::string> precedence;  // greatest variable first
};

struct GroebnerBasis {
  MonomialOrder order;      // order actually used (saturation variable dropped)
  std::vector<Poly> polys;  // reduced basis, monic, vars = order.precedence
  bool saturated = false;
};

namespace detail {

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// true when a comes strictly after b (a < b) in the given order; variable
// index 0 is the greatest variable.
inline bool mono_less(const Mono& a, const Mono& b, MonomialOrder::Kind kind) {
  if (kind == MonomialOrder::Kind::lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

inline Mono mono_div(const Mono& a, const Mono& b) {  // requires b | a
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

// Terms sorted by decreasing order; coefficients kept integer-primitive.
struct GBPoly {
  std::vector<std::pair<Mono, Rat>> t;
  int sugar = 0;

  bool zero() const { return t.empty(); }
  const Mono& lm() const { return t.front().first; }
  const Rat& lc() const { return t.front().second; }
};

inline void sort_terms(GBPoly& p, MonomialOrder::Kind kind) {
  std::sort(p.t.begin(), p.t.end(), [&](const auto& a, const auto& b) {
    return mono_less(b.first, a.first, kind);
  });
}

// Scale so coefficients are coprime integers with positive leading one.
inline void make_primitive(GBPoly& p) {
  if (p.zero()) return;
  Int den(1), num(0);
  for (const auto& [m, c] : p.t) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat scale(den, num);
  scale.canonicalize();
  if (p.lc() < 0) scale = -scale;
  for (auto& [m, c] : p.t) c *= scale;
}

// f -= (coef * mono) * g, merging sorted term lists.
inline void axpy(GBPoly& f, const Rat& coef, const Mono& mono, const GBPoly& g,
                 MonomialOrder::Kind kind) {
  std::vector<std::pair<Mono, Rat>> out;
  out.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      out.push_back(std::move(f.t[i++]));
      continue;
    }
    Mono gm = mono_mul(g.t[j].first, mono);
    if (i == f.t.size()) {
      out.emplace_back(std::move(gm), -coef * g.t[j].second);
      ++j;
      continue;
    }
    if (f.t[i].first == gm) {
      Rat c = f.t[i].second - coef * g.t[j].second;
      if (c != 0) out.emplace_back(std::move(gm), std::move(c));
      ++i, ++j;
    } else if (mono_less(gm, f.t[i].first, kind)) {
      out.push_back(std::move(f.t[i++]));
    } else {
      out.emplace_back(std::move(gm), -coef * g.t[j].second);
      ++j;
    }
  }
  f.t = std::move(out);
}

// Full normal form of f against the basis (head and tail reduction).
inline GBPoly normal_form(GBPoly f, const std::vector<GBPoly>& basis,
                          MonomialOrder::Kind kind) {
  GBPoly rem;
  rem.sugar = f.sugar;
  while (!f.zero()) {
    bool reduced = false;
    for (const GBPoly& g : basis) {
      if (!mono_divides(g.lm(), f.lm())) continue;
      Rat coef = f.lc() / g.lc();
      Mono mono = mono_div(f.lm(), g.lm());
      f.sugar = std::max(f.sugar, g.sugar + mono_degree(mono));
      axpy(f, coef, mono, g, kind);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.t.push_back(std::move(f.t.front()));
      f.t.erase(f.t.begin());
    }
  }
  rem.sugar = std::max(rem.sugar, f.sugar);
  return rem;
}

struct SPair {
  int i, j;
  Mono lcm;
  int sugar;
};

// Deterministic selection: lowest sugar, then smallest lcm in the order.
inline bool pair_after(const SPair& a, const SPair& b, MonomialOrder::Kind kind) {
  if (a.sugar != b.sugar) return a.sugar > b.sugar;
  if (a.lcm != b.lcm) return mono_less(b.lcm, a.lcm, kind);
  return std::pair(a.i, a.j) > std::pair(b.i, b.j);
}

class Buchberger {
 public:
  Buchberger(MonomialOrder::Kind kind, double budget_seconds)
      : kind_(kind),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds))) {}

  void run(std::vector<GBPoly> gens) {
    for (GBPoly& g : gens) {
      sort_terms(g, kind_);
      g.sugar = g.zero() ? 0 : mono_degree(g.lm()) + spread(g);
      if (!g.zero()) {
        make_primitive(g);
        add(std::move(g));
      }
    }
    while (!pairs_.empty()) {
      check_budget();
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const SPair& a, const SPair& b) {
                                     return pair_after(b, a, kind_);
                                   });
      SPair p = *best;
      pairs_.erase(best);
      GBPoly s = spoly(basis_[p.i], basis_[p.j], p);
      GBPoly r = normal_form(std::move(s), basis_, kind_);
      if (r.zero()) continue;
      make_primitive(r);
      add(std::move(r));
    }
    interreduce();
  }

  const std::vector<GBPoly>& basis() const { return basis_; }

 private:
  int spread(const GBPoly& g) const {
    int d = 0;
    for (const auto& [m, c] : g.t) d = std::max(d, mono_degree(m));
    return d - mono_degree(g.lm());
  }

  GBPoly spoly(const GBPoly& f, const GBPoly& g, const SPair& p) const {
    GBPoly s = f;
    Mono mf = mono_div(p.lcm, f.lm());
    for (auto& [m, c] : s.t) m = mono_mul(m, mf);
    Rat scale = Rat(1) / f.lc();
    for (auto& [m, c] : s.t) c *= scale;
    s.sugar = p.sugar;
    axpy(s, Rat(1) / g.lc(), mono_div(p.lcm, g.lm()), g, kind_);
    return s;
  }

  void check_budget() const {
    if (std::chrono::steady_clock::now() > deadline_)
      throw infeasible_error("exact path infeasible: basis budget exceeded");
  }

  // Gebauer-Moeller update with the new element at index t.
  void add(GBPoly h) {
    const int t = static_cast<int>(basis_.size());
    const Mono& lmh = h.lm();
    std::vector<SPair> fresh;
    for (int i = 0; i < t; ++i) {
      Mono l = mono_lcm(basis_[i].lm(), lmh);
      int sugar = std::max(basis_[i].sugar + mono_degree(mono_div(l, basis_[i].lm())),
                           h.sugar + mono_degree(mono_div(l, lmh)));
      fresh.push_back(SPair{i, t, std::move(l), sugar});
    }
    // Chain criterion on the old pairs.
    std::erase_if(pairs_, [&](const SPair& p) {
      return mono_divides(lmh, p.lcm) &&
             mono_lcm(basis_[p.i].lm(), lmh) != p.lcm &&
             mono_lcm(basis_[p.j].lm(), lmh) != p.lcm;
    });
    // Keep only lcm-minimal new pairs, one representative per lcm.
    std::vector<SPair> kept;
    for (const SPair& p : fresh) {
      bool drop = false;
      for (const SPair& q : fresh) {
        if (&p == &q || !mono_divides(q.lcm, p.lcm)) continue;
        if (q.lcm != p.lcm || q.i < p.i) {
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(p);
    }
    // Product criterion.
    std::erase_if(kept, [&](const SPair& p) {
      return p.lcm == mono_mul(basis_[p.i].lm(), lmh);
    });
    for (SPair& p : kept) pairs_.push_back(std::move(p));
    basis_.push_back(std::move(h));
  }

  void interreduce() {
    // Keep one element per minimal leading monomial, then one full tail
    // reduction per survivor; with the staircase fixed, tails land on
    // standard monomials, so a single pass yields the reduced basis.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i || !mono_divides(basis_[j].lm(), basis_[i].lm())) continue;
        if (basis_[j].lm() != basis_[i].lm() || j < i) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<GBPoly> minimal;
    for (std::size_t i : keep) minimal.push_back(std::move(basis_[i]));
    std::sort(minimal.begin(), minimal.end(), [&](const GBPoly& a, const GBPoly& b) {
      return mono_less(a.lm(), b.lm(), kind_);
    });
    basis_.clear();
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      check_budget();
      std::vector<GBPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      GBPoly r = normal_form(minimal[i], others, kind_);
      make_primitive(r);
      basis_.push_back(std::move(r));
    }
  }

  MonomialOrder::Kind kind_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<GBPoly> basis_;
  std::vector<SPair> pairs_;
};

// Exact change of order to lex via FGLM; requires a zero-dimensional ideal.
class Fglm {
 public:
  Fglm(const std::vector<GBPoly>& drl, int nvars, double budget_seconds)
      : drl_(drl),
        nvars_(nvars),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds))) {
    enumerate_standard();
  }

  // Reduced lex basis as (monomial, tail over lex-standard monomials) pairs.
  std::vector<GBPoly> run() {
    auto lex_less = [&](const Mono& a, const Mono& b) {
      return mono_less(a, b, MonomialOrder::Kind::lex);
    };
    std::map<Mono, std::vector<Rat>, decltype(lex_less)> frontier(lex_less);
    frontier.emplace(Mono(nvars_, 0), nf_vector(Mono(nvars_, 0)));
    std::set<Mono> done;  // a monomial can be pushed from several parents

    std::vector<Mono> accepted;          // lex-standard monomials found so far
    std::vector<std::vector<Rat>> rows;  // echelon rows over the drl quotient
    std::vector<std::vector<Rat>> combos;
    std::vector<int> pivots;
    std::vector<GBPoly> out;

    while (!frontier.empty()) {
      check_budget();
      Mono m = frontier.begin()->first;
      std::vector<Rat> w = std::move(frontier.begin()->second);
      frontier.erase(frontier.begin());
      if (!done.insert(m).second) continue;
      bool under_staircase = false;
      for (const GBPoly& g : out)
        if (mono_divides(g.lm(), m)) under_staircase = true;
      if (under_staircase) continue;

      std::vector<Rat> combo(accepted.size(), Rat(0));
      std::vector<Rat> v = w;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rat& c = v[pivots[r]];
        if (c == 0) continue;
        Rat f = c / rows[r][pivots[r]];
        for (int k = 0; k < dim_; ++k) v[k] -= f * rows[r][k];
        for (std::size_t k = 0; k < combos[r].size(); ++k)
          combo[k] += f * combos[r][k];
      }
      int pivot = -1;
      for (int k = 0; k < dim_; ++k)
        if (v[k] != 0) {
          pivot = k;
          break;
        }
      if (pivot < 0) {
        // Dependent: m - sum combo_k * accepted_k is a lex basis member.
        GBPoly g;
        g.t.emplace_back(m, Rat(1));
        for (std::size_t k = 0; k < accepted.size(); ++k)
          if (combo[k] != 0) g.t.emplace_back(accepted[k], -combo[k]);
        sort_terms(g, MonomialOrder::Kind::lex);
        out.push_back(std::move(g));
        continue;
      }
      rows.push_back(std::move(v));
      pivots.push_back(pivot);
      combo.push_back(Rat(0));  // placeholder for m itself
      for (std::size_t k = 0; k + 1 < combo.size(); ++k) combo[k] = -combo[k];
      combo.back() = Rat(1);
      // rows[r] = nf(m) - reductions; track m's coordinates over accepted+m.
      combos.push_back(std::move(combo));
      accepted.push_back(m);
      for (std::size_t r = 0; r + 1 < combos.size(); ++r) combos[r].push_back(Rat(0));
      for (int v2 = nvars_ - 1; v2 >= 0; --v2) {
        Mono next = m;
        next[v2] += 1;
        if (!frontier.count(next) && !done.count(next)) {
          check_budget();
          frontier.emplace(next, cached_nf(next));
        }
      }
    }
    require(static_cast<int>(accepted.size()) == dim_,
            "change of order lost quotient dimensions");
    std::sort(out.begin(), out.end(), [&](const GBPoly& a, const GBPoly& b) {
      return mono_less(a.lm(), b.lm(), MonomialOrder::Kind::lex);
    });
    return out;
  }

 private:
  void check_budget() const {
    if (std::chrono::steady_clock::now() > deadline_)
      throw infeasible_error("exact path infeasible: change-of-order budget exceeded");
  }

  void enumerate_standard() {
    auto drl_less = [&](const Mono& a, const Mono& b) {
      return mono_less(a, b, MonomialOrder::Kind::degrevlex);
    };
    std::set<Mono, decltype(drl_less)> todo(drl_less), seen(drl_less);
    Mono one(nvars_, 0);
    todo.insert(one);
    while (!todo.empty()) {
      check_budget();
      Mono m = *todo.begin();
      todo.erase(todo.begin());
      bool standard = true;
      for (const GBPoly& g : drl_)
        if (mono_divides(g.lm(), m)) standard = false;
      if (!standard) continue;
      seen.insert(m);
      require(static_cast<int>(seen.size()) <= 100000,
              "ideal is not zero-dimensional");
      for (int v = 0; v < nvars_; ++v) {
        Mono next = m;
        next[v] += 1;
        if (!seen.count(next)) todo.insert(next);
      }
    }
    standard_.assign(seen.begin(), seen.end());
    dim_ = static_cast<int>(standard_.size());
    for (int k = 0; k < dim_; ++k) index_[standard_[k]] = k;
  }

  std::vector<Rat> to_vector(const GBPoly& p) const {
    std::vector<Rat> v(dim_, Rat(0));
    for (const auto& [m, c] : p.t) {
      auto it = index_.find(m);
      require(it != index_.end(), "normal form left the quotient basis");
      v[it->second] = c;
    }
    return v;
  }

  std::vector<Rat> nf_vector(const Mono& m) {
    GBPoly p;
    p.t.emplace_back(m, Rat(1));
    sort_terms(p, MonomialOrder::Kind::degrevlex);
    return to_vector(normal_form(std::move(p), drl_, MonomialOrder::Kind::degrevlex));
  }

  std::vector<Rat> cached_nf(const Mono& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    std::vector<Rat> r = nf_vector(m);
    cache_.emplace(m, r);
    return r;
  }

  const std::vector<GBPoly>& drl_;
  int nvars_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Mono> standard_;
  std::map<Mono, int> index_;
  std::map<Mono, std::vector<Rat>> cache_;
  int dim_ = 0;
};

inline GBPoly to_gbpoly(const Poly& p, const std::vector<int>& slot,
                        int nvars, MonomialOrder::Kind kind) {
  GBPoly g;
  for (const auto& [m, c] : p.terms) {
    Mono t(nvars, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      require(m[i] >= 0, "basis computation expects polynomial generators");
      t[slot[i]] = m[i];
    }
    g.t.emplace_back(std::move(t), c);
  }
  sort_terms(g, kind);
  return g;
}

inline Poly from_gbpoly(const GBPoly& g, const std::vector<std::string>& vars,
                        int offset) {
  Poly p = Poly::zero(vars);
  for (const auto& [m, c] : g.t) {
    Mono t(m.begin() + offset, m.end());
    p.add_term(t, c);
  }
  return p;
}

}  // namespace detail

// Reduced Groebner basis of the generators (optionally of the saturation by
// the product of all variables) in the requested order.  Lex requests for
// zero-dimensional ideals run degrevlex Buchberger plus an exact FGLM change
// of order; everything else runs Buchberger in the requested order directly.
inline GroebnerBasis buchberger(const std::vector<Poly>& gens,
                                const MonomialOrder& order, bool saturate,
                                double budget_seconds = 600) {
  require(!gens.empty(), "no generators");
  require(!saturate || order.kind == MonomialOrder::Kind::lex,
          "saturation is an elimination device; request a lex basis");
  const auto started = std::chrono::steady_clock::now();
  auto remaining = [&] {
    double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                 started)
                       .count();
    double left = budget_seconds - spent;
    if (left <= 0) throw infeasible_error("exact path infeasible: budget exceeded");
    return left;
  };

  const std::vector<std::string>& gen_vars = gens.front().vars;
  require(order.precedence.size() == gen_vars.size(),
          "order must list every generator variable");
  // Ring variables, greatest first; saturation variable (if any) in front.
  std::vector<std::string> ring = order.precedence;
  int offset = saturate ? 1 : 0;
  if (saturate) ring.insert(ring.begin(), "+saturation");
  const int nvars = static_cast<int>(ring.size());
  std::vector<int> slot(gen_vars.size());
  for (std::size_t i = 0; i < gen_vars.size(); ++i) {
    auto it = std::find(order.precedence.begin(), order.precedence.end(), gen_vars[i]);
    require(it != order.precedence.end(), "order must list every generator variable");
    slot[i] = offset + static_cast<int>(it - order.precedence.begin());
  }

  const bool convert = order.kind == MonomialOrder::Kind::lex;
  const auto work_kind =
      convert ? MonomialOrder::Kind::degrevlex : order.kind;
  std::vector<detail::GBPoly> inputs;
  for (const Poly& p : gens) {
    require(p.vars == gen_vars, "generators live in different rings");
    if (!p.is_zero()) inputs.push_back(detail::to_gbpoly(p, slot, nvars, work_kind));
  }
  if (saturate) {
    detail::GBPoly sat;
    Mono all(nvars, 1);
    sat.t.emplace_back(std::move(all), Rat(1));
    sat.t.emplace_back(Mono(nvars, 0), Rat(-1));
    detail::sort_terms(sat, work_kind);
    inputs.push_back(std::move(sat));
  }

  detail::Buchberger engine(work_kind, remaining());
  engine.run(std::move(inputs));
  std::vector<detail::GBPoly> basis = engine.basis();

  if (convert) {
    bool zero_dimensional = true;
    for (int v = 0; v < nvars; ++v) {
      bool pure_power = false;
      for (const auto& g : basis) {
        bool only_v = g.lm()[v] > 0;
        for (int w = 0; w < nvars && only_v; ++w)
          if (w != v && g.lm()[w] > 0) only_v = false;
        if (only_v) pure_power = true;
      }
      if (!pure_power) zero_dimensional = false;
    }
    if (zero_dimensional) {
      detail::Fglm fglm(basis, nvars, remaining());
      basis = fglm.run();
    } else {
      detail::Buchberger direct(MonomialOrder::Kind::lex, remaining());
      std::vector<detail::GBPoly> relexed;
      for (const auto& g : basis) {
        detail::GBPoly h = g;
        detail::sort_terms(h, MonomialOrder::Kind::lex);
        relexed.push_back(std::move(h));
      }
      direct.run(std::move(relexed));
      basis = direct.basis();
    }
  }

  GroebnerBasis gb;
  gb.order = order;
  gb.saturated = saturate;
  for (const auto& g : basis) {
    if (saturate && g.lm()[0] > 0) continue;  // saturation-variable member
    Poly p = detail::from_gbpoly(g, order.precedence, offset);
    p *= Rat(1) / g.lc();  // monic
    gb.polys.push_back(std::move(p));
  }
  return gb;
}

// The basis member univariate in the least variable of the order.
inline Poly eliminant_member(const GroebnerBasis& gb) {
  const int last = static_cast<int>(gb.order.precedence.size()) - 1;
  for (const Poly& p : gb.polys) {
    bool univariate = true;
    for (const auto& [m, c] : p.terms)
      for (int v = 0; v < last; ++v)
        if (m[v] != 0) univariate = false;
    if (univariate && !p.is_zero()) return p;
  }
  throw error("no univariate member in the basis");
}

}  // namespace einmetric
