#pragma once
// Chevalley structure constants and the compact real form.
//
// Constants N_{a,b} for positive pairs are fixed by the extraspecial-pair
// convention: order positive roots by (height, lex); for each non-simple
// positive g, the pair (a0, b0) with a0 + b0 = g and a0 minimal gets
// N_{a0,b0} = p + 1 (p the string-down length), and every other pair
// summing to g follows from the standard relations
//   N(x,y) = -N(y,x),   N(-x,-y) = -N(x,y),
//   x+y+z = 0        =>  N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y),
//   w+x+y+z = 0      =>  N(w,x)N(y,z)/(w+x,w+x) + N(x,y)N(w,z)/(x+y,x+y)
//                         + N(y,w)N(x,z)/(y+w,y+w) = 0,
// all of which are verified a posteriori by |N| = p+1, integrality, and the
// Jacobi identity in the test suite.
//
// The compact form lives on the basis
//   T_j = i h_j (simple coroots),  X_a = E_a - E_{-a},  Y_a = i(E_a + E_{-a})
// with integer brackets
//   [T_i, X_a] =  <a, a_i^vee> Y_a,   [T_i, Y_a] = -<a, a_i^vee> X_a,
//   [X_a, Y_a] = 2 sum_j c_j T_j      (a^vee = sum_j c_j a_j^vee),
//   [X_a, X_b] =  N_{a,b} X_{a+b} - N_{a,-b} X_{a-b},
//   [X_a, Y_b] =  N_{a,b} Y_{a+b} + N_{a,-b} Y_{a-b},
//   [Y_a, Y_b] = -N_{a,b} X_{a+b} - N_{a,-b} X_{a-b},
// where X_{-c} = -X_c, Y_{-c} = Y_c.  B = -Killing is block diagonal in this
// basis: a dense positive block on the T's and a positive diagonal on X/Y.

#include <cstdint>
#include <cstdlib>
#include <unordered_map>
#include <vector>

#include "root_system.hpp"

namespace einmetric {

// Sparse vector over the compact basis, sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Rat>>;

inline SparseVec& sparse_add(SparseVec& acc, const SparseVec& v, const Rat& scale) {
  if (scale == 0) return acc;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      out.emplace_back(v[j].first, v[j].second * scale);
      ++j;
    } else {
      Rat c = acc[i].second + v[j].second * scale;
      if (c != 0) out.emplace_back(acc[i].first, c);
      ++i, ++j;
    }
  }
  acc = std::move(out);
  return acc;
}

class CompactAlgebra {
 public:
  RootSystem rs;
  int dim = 0;

  int t_index(int j) const { return j; }
  int x_index(int k) const { return rs.rank + 2 * k; }
  int y_index(int k) const { return rs.rank + 2 * k + 1; }
  bool is_cartan(int idx) const { return idx < rs.rank; }
  // For a root index pair (k, 0/1): 0 = X, 1 = Y.
  int root_of(int idx) const { return (idx - rs.rank) / 2; }
  bool is_y(int idx) const { return (idx - rs.rank) % 2 != 0; }

  // N_{a,b} for positive roots (0 when a+b is not a root).
  long n_pos(int a, int b) const {
    auto it = npos_.find(key(a, b));
    return it == npos_.end() ? 0 : it->second;
  }
  // N_{a,-b} for distinct positive roots (0 when a-b is not a root).
  long n_mixed(int a, int b) const {
    auto it = nmix_.find(key(a, b));
    return it == nmix_.end() ? 0 : it->second;
  }

  // [w_a, w_b] over the compact basis.
  SparseVec bracket_basis(int a, int b) const {
    if (a == b) return {};
    if (is_cartan(a) && is_cartan(b)) return {};
    if (is_cartan(b)) {  // [x, T] = -[T, x]
      SparseVec v = bracket_basis(b, a);
      for (auto& t : v) t.second = -t.second;
      return v;
    }
    if (is_cartan(a)) {
      int k = root_of(b);
      long c = pair_cache_[k][a];
      if (c == 0) return {};
      if (!is_y(b)) return {{y_index(k), Rat(c)}};
      return {{x_index(k), Rat(-c)}};
    }
    int ka = root_of(a), kb = root_of(b);
    bool ya = is_y(a), yb = is_y(b);
    if (ka == kb) {
      if (ya == yb) return {};
      // [X_a, Y_a] = 2 sum_j c_j T_j; [Y_a, X_a] the negative.
      SparseVec v;
      for (int j = 0; j < rs.rank; ++j) {
        long c = cvee_[ka][j];
        if (c != 0) v.emplace_back(t_index(j), Rat(ya ? -2 * c : 2 * c));
      }
      return v;
    }
    long P = n_pos(ka, kb), Q = n_mixed(ka, kb);
    int sum = P ? sum_idx_.at(key(ka, kb)) : -1;
    // a - b: positive difference index and sign.
    int dif = -1;
    bool dif_neg = false;
    if (Q) {
      auto [di, dn] = diff_idx_.at(key(ka, kb));
      dif = di;
      dif_neg = dn;
    }
    SparseVec v;
    auto add = [&v](int idx, long c) {
      if (c != 0) v.emplace_back(idx, Rat(c));
    };
    if (!ya && !yb) {  // [X,X] = P X_{a+b} - Q X_{a-b}
      if (P) add(x_index(sum), P);
      if (Q) add(x_index(dif), dif_neg ? Q : -Q);
    } else if (ya && yb) {  // [Y,Y] = -P X_{a+b} - Q X_{a-b}
      if (P) add(x_index(sum), -P);
      if (Q) add(x_index(dif), dif_neg ? Q : -Q);
    } else if (!ya && yb) {  // [X_a, Y_b] = P Y_{a+b} + Q Y_{a-b}
      if (P) add(y_index(sum), P);
      if (Q) add(y_index(dif), Q);  // Y_{-c} = Y_c
    } else {  // [Y_a, X_b] = -[X_b, Y_a] = -(N_{b,a} Y_{b+a} + N_{b,-a} Y_{b-a})
      if (P) add(y_index(sum), P);  // -N_{b,a} = N_{a,b} = P
      long Qb = n_mixed(kb, ka);
      if (Qb) add(y_index(dif), -Qb);
    }
    std::sort(v.begin(), v.end());
    return v;
  }

  SparseVec bracket(const SparseVec& u, const SparseVec& v) const {
    SparseVec acc;
    for (const auto& [i, ci] : u)
      for (const auto& [j, cj] : v) {
        SparseVec b = bracket_basis(i, j);
        sparse_add(acc, b, ci * cj);
      }
    return acc;
  }

  // Exact -Killing trace form between basis elements.
  Rat killing_b(int a, int b) const {
    Rat s = 0;
    for (int d = 0; d < dim; ++d) {
      SparseVec v1 = bracket_basis(b, d);
      for (const auto& [i1, c1] : v1) {
        SparseVec v2 = bracket_basis(a, i1);
        for (const auto& [i2, c2] : v2)
          if (i2 == d) s += c1 * c2;
      }
    }
    return -s;
  }

  // Block data of B: Cartan block and root-space diagonal.
  const std::vector<std::vector<Rat>>& b_cartan() const { return b_cartan_; }
  const Rat& g_root(int k) const { return g_root_[k]; }

  // B(u, v) using the block structure.
  Rat b_form(const SparseVec& u, const SparseVec& v) const {
    Rat s = 0;
    std::size_t i = 0, j = 0;
    // Cartan x Cartan is dense; collect those coordinates separately.
    for (; i < u.size() && is_cartan(u[i].first); ++i)
      for (std::size_t j2 = 0; j2 < v.size() && is_cartan(v[j2].first); ++j2)
        s += u[i].second * v[j2].second * b_cartan_[u[i].first][v[j2].first];
    for (j = 0; j < v.size() && is_cartan(v[j].first); ++j) {}
    // Root part: diagonal.
    while (i < u.size() && j < v.size()) {
      if (u[i].first < v[j].first) ++i;
      else if (v[j].first < u[i].first) ++j;
      else {
        s += u[i].second * v[j].second * g_root_[root_of(u[i].first)];
        ++i, ++j;
      }
    }
    return s;
  }

  friend CompactAlgebra build_compact_algebra(const RootSystem& rs);

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::unordered_map<std::uint64_t, long> npos_;
  std::unordered_map<std::uint64_t, long> nmix_;
  std::unordered_map<std::uint64_t, int> sum_idx_;
  std::unordered_map<std::uint64_t, std::pair<int, bool>> diff_idx_;
  std::vector<std::vector<long>> cvee_;
  std::vector<std::vector<long>> pair_cache_;
  std::vector<std::vector<Rat>> b_cartan_;
  std::vector<Rat> g_root_;
};

inline CompactAlgebra build_compact_algebra(const RootSystem& rs) {
  CompactAlgebra L;
  L.rs = rs;
  L.dim = rs.dimension();
  const int np = rs.n_positive();

  // Pairing cache and coroot coefficients.
  L.pair_cache_.assign(np, std::vector<long>(rs.rank, 0));
  L.cvee_.assign(np, std::vector<long>(rs.rank, 0));
  for (int k = 0; k < np; ++k) {
    const Coeffs& a = rs.positive[k];
    Rat an = rs.norm2_of(a);
    for (int j = 0; j < rs.rank; ++j) {
      L.pair_cache_[k][j] = rs.pairing(a, j);
      Rat c = Rat(a[j]) * rs.norm2[j] / an;
      require(is_integer(c), "non-integer coroot coefficient");
      L.cvee_[k][j] = to_int(c).get_si();
    }
  }

  // Positive-positive constants, height by height.
  auto diff_of = [&](int a, int b) {
    Coeffs d(rs.rank);
    for (int i = 0; i < rs.rank; ++i) d[i] = rs.positive[a][i] - rs.positive[b][i];
    return d;
  };
  // N_{a,-b} as a rational (callers assert integrality).
  auto n_pm = [&](int a, int b) -> Rat {
    Coeffs d = diff_of(a, b);
    if (auto c = rs.pos_index(d)) {
      // N(x,-y) = -(c,c)/(x,x) N(y,c) with c = x - y > 0
      long n = L.n_pos(b, *c);
      if (n == 0) return 0;
      return -rs.norm2_of(d) / rs.norm2_of(rs.positive[a]) * Rat(n);
    }
    for (int& x : d) x = -x;
    if (auto c = rs.pos_index(d)) {
      // N(x,-y) = N(y,-x) = -(c,c)/(y,y) N(x,c) with c = y - x > 0
      long n = L.n_pos(a, *c);
      if (n == 0) return 0;
      return -rs.norm2_of(d) / rs.norm2_of(rs.positive[b]) * Rat(n);
    }
    return 0;
  };

  for (int g = 0; g < np; ++g) {
    if (height_of(rs.positive[g]) < 2) continue;
    // Pairs (a, b), a < b (root order), alpha_a + alpha_b = gamma.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < np; ++a) {
      if (height_of(rs.positive[a]) * 2 > height_of(rs.positive[g])) break;
      Coeffs rest(rs.rank);
      for (int i = 0; i < rs.rank; ++i) rest[i] = rs.positive[g][i] - rs.positive[a][i];
      auto b = rs.pos_index(rest);
      if (b && *b > a) pairs.emplace_back(a, *b);
    }
    require(!pairs.empty(), "non-simple root with no positive split");
    auto [a0, b0] = pairs.front();
    int p0 = rs.string_down(rs.positive[b0], rs.positive[a0]);
    L.npos_[CompactAlgebra::key(a0, b0)] = p0 + 1;
    L.npos_[CompactAlgebra::key(b0, a0)] = -(p0 + 1);

    Rat gnorm = rs.norm2_of(rs.positive[g]);
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      auto [a, b] = pairs[t];
      // Four-term relation on (a0, b0, -a, -b).
      Rat term2 = 0, term3 = 0;
      Rat f1 = n_pm(b0, a), f2 = n_pm(a0, b);
      if (f1 != 0 && f2 != 0) term2 = f1 * f2 / rs.norm2_of(diff_of(b0, a));
      Rat f3 = n_pm(a, a0), f4 = n_pm(b0, b);
      if (f3 != 0 && f4 != 0) term3 = -f3 * f4 / rs.norm2_of(diff_of(a0, a));
      Rat n = gnorm * (term2 + term3) / Rat(p0 + 1);
      require(is_integer(n), "non-integer Chevalley constant");
      long nv = to_int(n).get_si();
      int p = rs.string_down(rs.positive[b], rs.positive[a]);
      require(std::abs(nv) == p + 1, "Chevalley constant violates |N| = p+1");
      L.npos_[CompactAlgebra::key(a, b)] = nv;
      L.npos_[CompactAlgebra::key(b, a)] = -nv;
    }
  }

  // Sum/difference index tables and mixed constants for the bracket table.
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      if (a == b) continue;
      Coeffs s(rs.rank), d(rs.rank);
      for (int i = 0; i < rs.rank; ++i) {
        s[i] = rs.positive[a][i] + rs.positive[b][i];
        d[i] = rs.positive[a][i] - rs.positive[b][i];
      }
      if (auto si = rs.pos_index(s)) L.sum_idx_[CompactAlgebra::key(a, b)] = *si;
      Rat q = n_pm(a, b);
      if (q != 0) {
        require(is_integer(q), "non-integer mixed constant");
        L.nmix_[CompactAlgebra::key(a, b)] = to_int(q).get_si();
        if (auto di = rs.pos_index(d)) {
          L.diff_idx_[CompactAlgebra::key(a, b)] = {*di, false};
        } else {
          for (int& x : d) x = -x;
          L.diff_idx_[CompactAlgebra::key(a, b)] = {*rs.pos_index(d), true};
        }
      }
    }

  // Cartan block of B: -tr(ad T_i ad T_j) = 2 sum_{b>0} <b,i^vee><b,j^vee>.
  L.b_cartan_.assign(rs.rank, std::vector<Rat>(rs.rank, Rat(0)));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      long s = 0;
      for (int k = 0; k < np; ++k) s += L.pair_cache_[k][i] * L.pair_cache_[k][j];
      L.b_cartan_[i][j] = Rat(2 * s);
    }

  // Root-space diagonal of B via the exact adjoint trace.
  L.g_root_.assign(np, Rat(0));
  for (int k = 0; k < np; ++k) L.g_root_[k] = L.killing_b(L.x_index(k), L.x_index(k));

  return L;
}

}  // namespace einmetric
