#pragma once
// Painted Dynkin diagrams and the induced reductive decompositions.
//
// Painting one simple root a_{i0} black defines a fibration K -> G -> G/K.
// Deleting the painted node from the diagram leaves the semisimple part of K
// (one ideal per connected component, plus a one-dimensional center), and the
// positive roots split by their a_{i0}-coefficient t = 1..q into the isotropy
// summands p_t of the base, where q is the Dynkin mark of a_{i0}.
//
// Group types: I/II/III = number of components after deletion; subscript a/b
// records whether the painted node is adjacent to the negative of the maximal
// root in the extended diagram, i.e. whether (max_root, a_{i0}) != 0.

#include <algorithm>
#include <string>
#include <vector>

#include "root_system.hpp"

namespace einmetric {

struct PaintedConfig {
  CartanType type;
  int node;  // 1-based simple-root label

  std::string name() const { return type.name() + "(" + std::to_string(node) + ")"; }
};

struct GroupType {
  int components = 0;  // 1, 2 or 3
  bool attached = false;
  int q = 0;

  std::string label() const {
    static const char* roman[] = {"", "I", "II", "III"};
    return std::string(roman[components]) + "_" + (attached ? "a" : "b") + "(" +
           std::to_string(q) + ")";
  }
  bool operator==(const GroupType&) const = default;
};

struct Ideal {
  std::vector<int> nodes;      // 0-based simple-root indices of the subdiagram
  std::vector<int> pos_roots;  // indices into rs.positive supported on `nodes`
  std::string name;            // "su3", "e6", ...
  int dim() const { return 2 * static_cast<int>(pos_roots.size()) + static_cast<int>(nodes.size()); }
};

struct Decomposition {
  RootSystem rs;
  PaintedConfig config;
  int painted = 0;  // 0-based
  GroupType gtype;
  std::vector<Ideal> ideals;                      // k_1 first (attached to -max_root)
  std::vector<std::vector<int>> summand_roots;    // q lists: R_t^+ for t = 1..q

  // Modules in order m_0 = k_0 (center), k_1..k_p, p_1..p_q.
  int n_modules() const {
    return 1 + static_cast<int>(ideals.size()) + static_cast<int>(summand_roots.size());
  }
  std::vector<int> module_dims() const {
    std::vector<int> d{1};
    for (const Ideal& k : ideals) d.push_back(k.dim());
    for (const auto& r : summand_roots) d.push_back(2 * static_cast<int>(r.size()));
    return d;
  }
  int n_ideals() const { return static_cast<int>(ideals.size()); }
  int q() const { return gtype.q; }
  // Index of base summand p_t (t = 1..q) in the module order.
  int base_module(int t) const { return n_ideals() + t; }
};

namespace detail {

// Connected components of the Dynkin diagram restricted to `alive` nodes.
inline std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                        const std::vector<bool>& alive) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(rs.rank, false);
  for (int s = 0; s < rs.rank; ++s) {
    if (!alive[s] || seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : rs.neighbors(v))
        if (alive[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Name of the simple algebra spanned by a component, identified from its node
// count, root count and (for the two-length case) the number of short roots.
inline std::string component_name(const RootSystem& rs, const Ideal& k) {
  int n = static_cast<int>(k.nodes.size());
  int np = static_cast<int>(k.pos_roots.size());
  bool two_lengths = false;
  Rat first = rs.norm2_of(rs.positive[k.pos_roots.front()]);
  for (int idx : k.pos_roots)
    if (rs.norm2_of(rs.positive[idx]) != first) two_lengths = true;
  if (np == n * (n + 1) / 2 && !two_lengths) return "su" + std::to_string(n + 1);
  if (np == n * (n - 1) && !two_lengths) return "so" + std::to_string(2 * n);
  if (n == 6 && np == 36 && !two_lengths) return "e6";
  if (n == 7 && np == 63 && !two_lengths) return "e7";
  if (np == n * n && two_lengths) {
    // B_n has n(n-1) long positive roots, C_n has n.
    int n_long = 0;
    for (int idx : k.pos_roots)
      if (rs.norm2_of(rs.positive[idx]) == 2) ++n_long;
    return n_long == n ? "sp" + std::to_string(n) : "so" + std::to_string(2 * n + 1);
  }
  throw error("unrecognized component shape");
}

}  // namespace detail

inline GroupType classify_type(const RootSystem& rs, int node1) {
  require(node1 >= 1 && node1 <= rs.rank, "painted node out of range");
  int i0 = node1 - 1;
  std::vector<bool> alive(rs.rank, true);
  alive[i0] = false;
  GroupType t;
  t.components = static_cast<int>(detail::diagram_components(rs, alive).size());
  require(t.components >= 1 && t.components <= 3, "unexpected component count");
  t.attached = rs.inner(rs.max_root, [&] {
                 Coeffs c(rs.rank, 0);
                 c[i0] = 1;
                 return c;
               }()) != 0;
  t.q = rs.max_root[i0];
  return t;
}

inline Decomposition paint(const RootSystem& rs, int node1) {
  require(node1 >= 1 && node1 <= rs.rank, "painted node out of range");
  Decomposition d;
  d.rs = rs;
  d.config = PaintedConfig{rs.type, node1};
  d.painted = node1 - 1;
  d.gtype = classify_type(rs, node1);

  std::vector<bool> alive(rs.rank, true);
  alive[d.painted] = false;
  auto comps = detail::diagram_components(rs, alive);

  // An ideal's roots are the positive roots supported inside its node set.
  auto roots_in = [&](const std::vector<int>& nodes) {
    std::vector<bool> in(rs.rank, false);
    for (int v : nodes) in[v] = true;
    std::vector<int> out;
    for (int i = 0; i < rs.n_positive(); ++i) {
      bool ok = true;
      for (int j = 0; j < rs.rank && ok; ++j)
        if (rs.positive[i][j] != 0 && !in[j]) ok = false;
      if (ok) out.push_back(i);
    }
    return out;
  };
  auto attached_to_lowest = [&](const std::vector<int>& nodes) {
    for (int v : nodes) {
      Coeffs c(rs.rank, 0);
      c[v] = 1;
      if (rs.inner(rs.max_root, c) != 0) return true;
    }
    return false;
  };

  // k_1 is the component adjacent to -max_root; the rest keep node order.
  std::stable_sort(comps.begin(), comps.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     int aa = attached_to_lowest(a), ab = attached_to_lowest(b);
                     if (aa != ab) return aa > ab;
                     return a < b;
                   });
  for (const auto& comp : comps) {
    Ideal k;
    k.nodes = comp;
    k.pos_roots = roots_in(comp);
    k.name = detail::component_name(rs, k);
    d.ideals.push_back(std::move(k));
  }

  d.summand_roots.assign(d.gtype.q, {});
  for (int i = 0; i < rs.n_positive(); ++i) {
    int t = rs.positive[i][d.painted];
    if (t > 0) d.summand_roots[t - 1].push_back(i);
  }

  // Consistency: the summands and ideals partition the positive roots, and
  // the module dimensions fill up dim g together with the 1-dim center.
  std::size_t covered = 0;
  for (const auto& r : d.summand_roots) covered += r.size();
  for (const Ideal& k : d.ideals) covered += k.pos_roots.size();
  require(covered == static_cast<std::size_t>(rs.n_positive()), "module partition leak");
  int total = 1;
  for (const Ideal& k : d.ideals) total += k.dim();
  for (const auto& r : d.summand_roots) total += 2 * static_cast<int>(r.size());
  require(total == rs.dimension(), "module dimensions do not fill dim g");
  return d;
}

inline std::vector<PaintedConfig> list_height3_cases() {
  return {
      {CartanType::parse("G2"), 2}, {CartanType::parse("E8"), 8},
      {CartanType::parse("F4"), 2}, {CartanType::parse("E7"), 3},
      {CartanType::parse("E7"), 5}, {CartanType::parse("E8"), 2},
      {CartanType::parse("E6"), 3},
  };
}

}  // namespace einmetric
