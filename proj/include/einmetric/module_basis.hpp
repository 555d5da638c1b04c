#pragma once
// B-orthogonal basis adapted to a painted-diagram decomposition.
//
// Vectors are grouped by module in the order m_0 = k_0 (center),
// k_1, ..., k_p, p_1, ..., p_q.  Root vectors X_a, Y_a are already
// B-orthogonal; the Cartan needs a one-dimensional center vector (the
// annihilator of the K-roots) and, per ideal, a Gram-Schmidt run over the
// coroot span of its nodes.  Orthogonality across ideals and against the
// center is automatic because the k_i are commuting ideals of k (checked in
// the tests, not assumed silently).

#include <vector>

#include "flag.hpp"
#include "lie_algebra.hpp"

namespace einmetric {

struct ModuleBasis {
  std::vector<SparseVec> vec;  // over the compact basis
  std::vector<Rat> norm;       // B(v, v), positive
  std::vector<int> module;     // module id per vector
  std::vector<int> dims;       // module dimensions
  int n_modules = 0;

  int size() const { return static_cast<int>(vec.size()); }
};

inline ModuleBasis module_basis(const CompactAlgebra& L, const Decomposition& D) {
  const RootSystem& rs = L.rs;
  ModuleBasis M;
  M.n_modules = D.n_modules();
  M.dims = D.module_dims();

  auto push = [&](SparseVec v, int mod) {
    Rat n = L.b_form(v, v);
    require(n > 0, "basis vector with non-positive norm");
    M.norm.push_back(n);
    M.vec.push_back(std::move(v));
    M.module.push_back(mod);
  };

  // Center: solve sum_k t_k <a_j, a_k^vee> = 0 for all K-nodes j.
  {
    std::vector<int> knodes;
    for (const Ideal& k : D.ideals) knodes.insert(knodes.end(), k.nodes.begin(), k.nodes.end());
    int rows = static_cast<int>(knodes.size());
    require(rows == rs.rank - 1, "center must be one-dimensional");
    // Gaussian elimination on the (rows x rank) system cartan[j][k] t_k = 0.
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(rs.rank));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < rs.rank; ++c) m[r][c] = Rat(rs.cartan[knodes[r]][c]);
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < rs.rank && r < rows; ++c) {
      int p = -1;
      for (int rr = r; rr < rows; ++rr)
        if (m[rr][c] != 0) { p = rr; break; }
      if (p < 0) continue;
      std::swap(m[p], m[r]);
      for (int rr = 0; rr < rows; ++rr) {
        if (rr == r || m[rr][c] == 0) continue;
        Rat f = m[rr][c] / m[r][c];
        for (int cc = 0; cc < rs.rank; ++cc) m[rr][cc] -= f * m[r][cc];
      }
      pivot_col[r++] = c;
    }
    require(r == rows, "degenerate K-node system");
    // Free column = the one that is no pivot; back-substitute t_free = 1.
    std::vector<bool> is_pivot(rs.rank, false);
    for (int rr = 0; rr < rows; ++rr) is_pivot[pivot_col[rr]] = true;
    int free_col = -1;
    for (int c = 0; c < rs.rank; ++c)
      if (!is_pivot[c]) free_col = c;
    std::vector<Rat> t(rs.rank, Rat(0));
    t[free_col] = 1;
    for (int rr = 0; rr < rows; ++rr)
      t[pivot_col[rr]] = -m[rr][free_col] / m[rr][pivot_col[rr]];
    // Clear denominators for readability.
    Int den(1);
    for (const Rat& x : t) den = lcm(den, x.get_den());
    SparseVec v;
    for (int c = 0; c < rs.rank; ++c) {
      Rat x = t[c] * Rat(den);
      if (x != 0) v.emplace_back(L.t_index(c), x);
    }
    push(std::move(v), 0);
  }

  // Ideals: Cartan part (Gram-Schmidt over the coroot span), then root pairs.
  for (int i = 0; i < D.n_ideals(); ++i) {
    const Ideal& k = D.ideals[i];
    std::vector<SparseVec> gs;
    for (int node : k.nodes) {
      SparseVec v{{L.t_index(node), Rat(1)}};
      for (const SparseVec& u : gs) {
        Rat c = L.b_form(v, u) / L.b_form(u, u);
        sparse_add(v, u, -c);
      }
      gs.push_back(v);
      push(std::move(v), 1 + i);
    }
    for (int idx : k.pos_roots) {
      push({{L.x_index(idx), Rat(1)}}, 1 + i);
      push({{L.y_index(idx), Rat(1)}}, 1 + i);
    }
  }

  // Base summands p_t.
  for (int t = 1; t <= D.q(); ++t) {
    int mod = D.base_module(t);
    for (int idx : D.summand_roots[t - 1]) {
      push({{L.x_index(idx), Rat(1)}}, mod);
      push({{L.y_index(idx), Rat(1)}}, mod);
    }
  }

  require(M.size() == L.dim, "module basis does not span");
  // Dimension bookkeeping per module.
  std::vector<int> cnt(M.n_modules, 0);
  for (int m : M.module) ++cnt[m];
  require(cnt == M.dims, "module dimensions disagree with the basis");
  return M;
}

}  // namespace einmetric
