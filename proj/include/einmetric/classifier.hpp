#pragma once
// Natural-reductivity verdicts for positive Einstein metrics, homothety-
// normalized scale invariants, and counting of metrics distinct up to
// isometry.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ricci.hpp"
#include "types.hpp"

namespace einmetric {

// A metric is naturally reductive with respect to a subalgebra h strictly
// between k and g exactly when it restricts to a bi-invariant metric on h
// and to a single multiple of the bi-invariant form on the complement.  For
// the rank-three cases h can only be k+p2 (with (h, p1+p3) a symmetric
// pair), k+p3, or all of g, which ties together fixed groups of
// coordinates.
enum class ReductivityCondition {
  biinvariant,     // all coordinates equal
  symmetric_pair,  // h = k + p2
  subalgebra,      // h = k + p3
  equal_x,         // equal scales across p1, p2, p3
  none
};

inline const char* to_string(ReductivityCondition c) {
  switch (c) {
    case ReductivityCondition::biinvariant: return "biinvariant";
    case ReductivityCondition::symmetric_pair: return "symmetric_pair";
    case ReductivityCondition::subalgebra: return "subalgebra";
    case ReductivityCondition::equal_x: return "equal_x";
    case ReductivityCondition::none: return "none";
  }
  return "none";
}

struct ReductivityVerdict {
  bool naturally_reductive = false;
  ReductivityCondition matched = ReductivityCondition::none;
  double tolerance = 0;
};

// Coordinates listed in one chain must be pairwise equal.
using EqualityChain = std::vector<std::string>;

struct ReductivityConditions {
  std::vector<EqualityChain> symmetric_pair;
  std::vector<EqualityChain> subalgebra;
  std::vector<EqualityChain> equal_x;
};

// Derive the equality chains from the bracket structure: bi-invariance on
// h = k + p_t ties the scale of p_t to every ideal that [p_t, p_t] projects
// onto (those with A_{i,t,t} != 0), while the complement carries one scale.
inline ReductivityConditions reductivity_conditions(const TripleTable& T,
                                                    const Decomposition& D) {
  const std::vector<std::string> names = metric_variable_names(D);
  const int p = D.n_ideals();
  const int x1 = p + 1, x2 = p + 2, x3 = p + 3;
  auto tied = [&](int pt) {
    EqualityChain c;
    for (int i = 0; i <= p; ++i)
      if (T.at(i, pt, pt) != 0) c.push_back(names[i]);
    c.push_back(names[pt]);
    return c;
  };
  ReductivityConditions rc;
  rc.symmetric_pair = {tied(x2), {names[x1], names[x3]}};
  rc.subalgebra = {tied(x3), {names[x1], names[x2]}};
  rc.equal_x = {{names[x1], names[x2], names[x3]}};
  return rc;
}

inline bool chain_holds(const std::map<std::string, double>& y,
                        const EqualityChain& chain, double tol) {
  for (size_t i = 1; i < chain.size(); ++i) {
    double a = y.at(chain[0]), b = y.at(chain[i]);
    if (std::fabs(a - b) > tol * std::max(std::fabs(a), std::fabs(b)))
      return false;
  }
  return true;
}

inline ReductivityVerdict check_naturally_reductive(
    const TripleTable& T, const Decomposition& D,
    const std::map<std::string, double>& y, double tol = 1e-7) {
  const std::vector<std::string> names = metric_variable_names(D);
  for (const auto& name : names)
    require(y.at(name) > 0, "classification expects a positive metric");

  ReductivityVerdict v;
  v.tolerance = tol;
  auto all = [&](const std::vector<EqualityChain>& cond) {
    for (const auto& chain : cond)
      if (!chain_holds(y, chain, tol)) return false;
    return true;
  };
  const ReductivityConditions rc = reductivity_conditions(T, D);
  if (chain_holds(y, names, tol)) {
    v.matched = ReductivityCondition::biinvariant;
  } else if (all(rc.symmetric_pair)) {
    v.matched = ReductivityCondition::symmetric_pair;
  } else if (all(rc.subalgebra)) {
    v.matched = ReductivityCondition::subalgebra;
  } else if (all(rc.equal_x)) {
    v.matched = ReductivityCondition::equal_x;
  }
  v.naturally_reductive = v.matched != ReductivityCondition::none;
  return v;
}

// The common value of the Ricci components at an Einstein metric.  Fails if
// the components do not agree to the stated relative spread.
inline double einstein_constant(const TripleTable& T, const Decomposition& D,
                                const std::map<std::string, double>& y,
                                double spread = 1e-5) {
  const std::vector<std::string> names = metric_variable_names(D);
  std::vector<double> yv;
  for (const auto& name : names) yv.push_back(y.at(name));
  const std::vector<double> r = ricci_components<double>(T, yv);
  double lo = r[0], hi = r[0];
  for (double v : r) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  require(hi - lo <= spread * std::max(std::fabs(lo), std::fabs(hi)),
          "Ricci components do not share a common value");
  double sum = 0;
  for (double v : r) sum += v;
  return sum / static_cast<double>(r.size());
}

// Pairs of ideals whose transposition preserves every structure constant;
// metrics differing by such a swap are isometric.
inline std::vector<std::pair<int, int>> interchangeable_ideals(
    const TripleTable& T, const Decomposition& D) {
  std::vector<std::pair<int, int>> out;
  const int p = D.n_ideals();
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) {
      if (T.dims[i] != T.dims[j]) continue;
      auto swap_idx = [&](int m) { return m == i ? j : m == j ? i : m; };
      bool automorphism = true;
      for (const auto& [key, val] : T.entries)
        if (T.at(swap_idx(key[0]), swap_idx(key[1]), swap_idx(key[2])) != val)
          automorphism = false;
      if (automorphism) out.emplace_back(i, j);
    }
  }
  return out;
}

// Homothety-invariant fingerprint of a metric: the vector lambda*y in
// coordinate order (the Ricci value scales as 1/c under y -> c*y), with
// interchangeable-ideal pairs sorted so isometric swaps coincide.
struct ScaleInvariant {
  std::vector<double> canonical;
};

inline ScaleInvariant scale_invariant(const TripleTable& T,
                                      const Decomposition& D,
                                      const std::map<std::string, double>& y,
                                      double lambda) {
  require(lambda > 0, "scale invariant needs a positive Einstein constant");
  const std::vector<std::string> names = metric_variable_names(D);
  ScaleInvariant inv;
  for (const auto& name : names) inv.canonical.push_back(lambda * y.at(name));
  for (const auto& [i, j] : interchangeable_ideals(T, D))
    if (inv.canonical[i] > inv.canonical[j])
      std::swap(inv.canonical[i], inv.canonical[j]);
  return inv;
}

inline double invariant_distance(const ScaleInvariant& a, const ScaleInvariant& b) {
  require(a.canonical.size() == b.canonical.size(), "invariant size mismatch");
  double d = 0;
  for (size_t i = 0; i < a.canonical.size(); ++i)
    d = std::max(d, std::fabs(a.canonical[i] - b.canonical[i]));
  return d;
}

// Number of invariants pairwise separated by more than `separation`;
// closer pairs count once.
inline int count_distinct(const std::vector<ScaleInvariant>& invs,
                          double separation = 1e-4) {
  std::vector<ScaleInvariant> kept;
  for (const auto& inv : invs) {
    bool fresh = true;
    for (const auto& k : kept)
      if (invariant_distance(inv, k) <= separation) fresh = false;
    if (fresh) kept.push_back(inv);
  }
  return static_cast<int>(kept.size());
}

}  // namespace einmetric
