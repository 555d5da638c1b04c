#pragma once
// Ricci components of left-invariant diagonal metrics, from the triple table.
//
// For a metric y = (y_0, ..., y_{n-1}) scaling the restriction of B to each
// module, the Ricci component on module k is
//
//   r_k = 1/(2 y_k) + 1/(4 d_k) sum_{j,i} A_{kji} y_k/(y_j y_i)
//                   - 1/(2 d_k) sum_{j,i} A_{jki} y_j/(y_k y_i),
//
// with both sums over ordered pairs of included modules.  Restricting the
// module set to the base summands yields the Ricci components of the base
// homogeneous space with the same table.

#include <string>
#include <vector>

#include "flag.hpp"
#include "polynomial.hpp"
#include "triples.hpp"
#include "types.hpp"

namespace einmetric {

template <class S>
S ricci_component(const TripleTable& T, const std::vector<S>& y, int k,
                  const std::vector<int>& modules) {
  const S one(1);
  S r = one / (S(2) * y[k]);
  S quarter_term(0), half_term(0);
  for (int j : modules)
    for (int i : modules) {
      const Rat& a_kji = T.at(k, j, i);
      if (a_kji != 0) quarter_term += to_scalar<S>(a_kji) * y[k] / (y[j] * y[i]);
      const Rat& a_jki = T.at(j, k, i);
      if (a_jki != 0) half_term += to_scalar<S>(a_jki) * y[j] / (y[k] * y[i]);
    }
  r += quarter_term / (S(4) * to_scalar<S>(Rat(T.dims[k])));
  r -= half_term / (S(2) * to_scalar<S>(Rat(T.dims[k])));
  return r;
}

template <class S>
std::vector<S> ricci_components(const TripleTable& T, const std::vector<S>& y) {
  require(static_cast<int>(y.size()) == T.n_modules, "metric size mismatch");
  std::vector<int> all(T.n_modules);
  for (int m = 0; m < T.n_modules; ++m) all[m] = m;
  std::vector<S> r;
  r.reserve(all.size());
  for (int k : all) r.push_back(ricci_component(T, y, k, all));
  return r;
}

// Ricci components of the base space: modules restricted to the summands
// p_1..p_q.  `y` still carries one entry per module of the full table; only
// base entries are read, and the result lists r for the base modules in order.
template <class S>
std::vector<S> base_ricci_components(const TripleTable& T, const Decomposition& D,
                                     const std::vector<S>& y) {
  std::vector<int> base;
  for (int t = 1; t <= D.q(); ++t) base.push_back(D.base_module(t));
  std::vector<S> r;
  r.reserve(base.size());
  for (int k : base) r.push_back(ricci_component(T, y, k, base));
  return r;
}

// ---- Symbolic form --------------------------------------------------------

// Names u0, u1, ... for k_0 and the ideals, x1..xq for the base summands.
inline std::vector<std::string> metric_variable_names(const Decomposition& D) {
  std::vector<std::string> names;
  for (int m = 0; m <= D.n_ideals(); ++m) names.push_back("u" + std::to_string(m));
  for (int t = 1; t <= D.q(); ++t) names.push_back("x" + std::to_string(t));
  return names;
}

// Ricci component r_k as a Laurent polynomial in the metric variables.
// `pinned` lists module ids whose coordinate is fixed to 1 (normalization);
// their variables must not appear, so they are simply dropped from the ring.
inline Poly ricci_poly(const TripleTable& T, int k, const std::vector<std::string>& ring,
                       const std::vector<int>& var_of_module) {
  Poly r = Poly::zero(ring);
  int n = T.n_modules;
  auto mono = [&](std::initializer_list<std::pair<int, int>> powers) {
    Mono m(r.nvars(), 0);
    for (auto [mod, e] : powers)
      if (var_of_module[mod] >= 0) m[var_of_module[mod]] += e;
    return m;
  };
  r.add_term(mono({{k, -1}}), rat(1, 2));
  Rat quarter = rat(1, 4) / Rat(T.dims[k]);
  Rat half = rat(1, 2) / Rat(T.dims[k]);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const Rat& a_kji = T.at(k, j, i);
      if (a_kji != 0) r.add_term(mono({{k, 1}, {j, -1}, {i, -1}}), quarter * a_kji);
      const Rat& a_jki = T.at(j, k, i);
      if (a_jki != 0) r.add_term(mono({{j, 1}, {k, -1}, {i, -1}}), -half * a_jki);
    }
  return r;
}

struct EinsteinSystem {
  std::vector<std::string> vars;   // ring variables, normalized one excluded
  std::vector<Poly> equations;     // canonical cleared forms of r_t - r_{t+1}
  std::vector<int> var_of_module;  // module id -> ring index, -1 if pinned
  int pinned_module = -1;
};

// The homogeneous Einstein system {r_t - r_{t+1} = 0}, cleared to canonical
// integer polynomials.  `pinned` names the metric variable set to 1; the
// seven rank-three cases pin x3 when k has one simple ideal and x1 otherwise.
inline EinsteinSystem einstein_system(const TripleTable& T, const Decomposition& D,
                                      const std::string& pinned) {
  std::vector<std::string> names = metric_variable_names(D);
  EinsteinSystem sys;
  sys.var_of_module.assign(T.n_modules, -1);
  for (int m = 0; m < T.n_modules; ++m) {
    if (names[m] == pinned) {
      sys.pinned_module = m;
      continue;
    }
    sys.var_of_module[m] = static_cast<int>(sys.vars.size());
    sys.vars.push_back(names[m]);
  }
  require(sys.pinned_module >= 0, "pinned variable not found: " + pinned);
  std::vector<Poly> r;
  for (int k = 0; k < T.n_modules; ++k)
    r.push_back(ricci_poly(T, k, sys.vars, sys.var_of_module));
  for (int t = 0; t + 1 < T.n_modules; ++t)
    sys.equations.push_back((r[t] - r[t + 1]).canonical());
  return sys;
}

inline std::string default_pinned_variable(const Decomposition& D) {
  return D.n_ideals() == 1 ? "x3" : "x1";
}

}  // namespace einmetric
