#pragma once
// The symmetric triple table A_ijk of a reductive decomposition.
//
// A_ijk = sum_{a,b,c} B([e_a, e_b], e_c)^2 over B-orthonormal bases of the
// modules m_i, m_j, m_k.  With an orthogonal (unnormalized) basis w_a of
// norms g_a this becomes a sum of Om^2 / (g_a g_b g_c) with
// Om = B([w_a, w_b], w_c), which is totally antisymmetric in (a, b, c) by
// ad-invariance of B.  Contributions therefore come from basis triples with
// pairwise distinct members: we accumulate each sorted triple a < b < c once
// and multiply by the number of ordered slot assignments (1, 2 or 6
// depending on how many of i, j, k coincide).

#include <array>
#include <map>
#include <vector>

#include "module_basis.hpp"

namespace einmetric {

struct TripleTable {
  int n_modules = 0;
  std::vector<int> dims;
  std::map<std::array<int, 3>, Rat> entries;  // keyed by sorted (i,j,k), zero entries absent

  static std::array<int, 3> sorted_key(int i, int j, int k) {
    std::array<int, 3> a{i, j, k};
    std::sort(a.begin(), a.end());
    return a;
  }

  const Rat& at(int i, int j, int k) const {
    static const Rat zero(0);
    auto it = entries.find(sorted_key(i, j, k));
    return it == entries.end() ? zero : it->second;
  }

  void set(int i, int j, int k, Rat v) {
    if (v == 0) return;
    entries[sorted_key(i, j, k)] = std::move(v);
  }

  // Ordered double sum sum_{j,i} A_{kji}; equals d_k for the full algebra.
  Rat row_sum(int k) const {
    Rat s = 0;
    for (int j = 0; j < n_modules; ++j)
      for (int i = 0; i < n_modules; ++i) s += at(k, j, i);
    return s;
  }

  bool operator==(const TripleTable& o) const {
    return n_modules == o.n_modules && dims == o.dims && entries == o.entries;
  }
};

// Brute-force adjoint-basis computation of the triple table.
inline TripleTable oracle_triples(const CompactAlgebra& L, const Decomposition& D) {
  ModuleBasis M = module_basis(L, D);
  TripleTable T;
  T.n_modules = M.n_modules;
  T.dims = M.dims;

  const int n = M.size();
  // Which basis vectors can pair nonzero against a given coordinate: root
  // coordinates are owned by exactly one (X/Y) basis vector; any Cartan
  // coordinate can hit any of the rank-many Cartan-supported vectors.
  std::vector<int> owner(L.dim, -1);
  std::vector<int> cartan_vecs;
  for (int v = 0; v < n; ++v) {
    if (L.is_cartan(M.vec[v].front().first)) cartan_vecs.push_back(v);
    else owner[M.vec[v].front().first] = v;
  }

  // Sorted-triple accumulation: S[key] = sum Om^2/(g_a g_b g_c) over a<b<c.
  std::map<std::array<int, 3>, Rat> S;
  std::vector<int> cand;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      SparseVec br = L.bracket(M.vec[a], M.vec[b]);
      if (br.empty()) continue;
      cand.clear();
      bool has_cartan = false;
      for (const auto& [coord, x] : br) {
        if (L.is_cartan(coord)) has_cartan = true;
        else if (owner[coord] > b) cand.push_back(owner[coord]);
      }
      if (has_cartan)
        for (int v : cartan_vecs)
          if (v > b) cand.push_back(v);
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (int c : cand) {
        Rat om = L.b_form(br, M.vec[c]);
        if (om == 0) continue;
        auto key = TripleTable::sorted_key(M.module[a], M.module[b], M.module[c]);
        S[key] += om * om / (M.norm[a] * M.norm[b] * M.norm[c]);
      }
    }
  }
  for (auto& [key, s] : S) {
    int mult = 6;
    if (key[0] == key[1] && key[1] == key[2]) mult = 6;
    else if (key[0] == key[1] || key[1] == key[2]) mult = 2;
    else mult = 1;
    T.set(key[0], key[1], key[2], Rat(mult) * s);
  }
  return T;
}

}  // namespace einmetric
