#pragma once
// Exact Ricci entries of a left-invariant diagonal metric straight from the
// connection: Koszul formula for the Levi-Civita coefficients in the
// module-adapted basis, curvature tensor assembled from them, Ricci as its
// trace.  This route never touches the triple table, so it can cross-check
// the componentwise formula and probe off-diagonal blocks.

#include <array>
#include <map>
#include <vector>

#include "lie_algebra.hpp"
#include "module_basis.hpp"
#include "types.hpp"

namespace einmetric {

class KoszulRicci {
 public:
  KoszulRicci(const CompactAlgebra& L, const ModuleBasis& M, std::vector<Rat> y)
      : L_(L), M_(M), y_(std::move(y)) {
    require(static_cast<int>(y_.size()) == M_.n_modules, "metric size mismatch");
    const int n = M_.size();
    // Candidate partners of each coordinate, as in the triple accumulation:
    // root coordinates live in one basis vector, Cartan coordinates in the
    // rank-many Cartan-supported ones.
    owner_.assign(L_.dim, -1);
    for (int v = 0; v < n; ++v) {
      if (L_.is_cartan(M_.vec[v].front().first)) cartan_vecs_.push_back(v);
      else owner_[M_.vec[v].front().first] = v;
    }
    gamma_.resize(n);
    for (int a = 0; a < n; ++a) gamma_[a].resize(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        // 2 <nabla_a b, c> = y_c Om(a,b,c) - y_a Om(b,c,a) + y_b Om(c,a,b)
        //                  = (y_c - y_a + y_b) Om(a,b,c)
        // by total antisymmetry (Om(b,c,a) = Om(a,b,c) = Om(c,a,b)).
        SparseVec br = L_.bracket(M_.vec[a], M_.vec[b]);
        if (br.empty()) continue;
        const Rat& ya = y_[M_.module[a]];
        const Rat& yb = y_[M_.module[b]];
        SparseVec g;
        for (int c : candidates(br)) {
          Rat om = L_.b_form(br, M_.vec[c]);
          if (om == 0) continue;
          const Rat& yc = y_[M_.module[c]];
          Rat coeff = (yc - ya + yb) * om / (2 * yc * M_.norm[c]);
          if (coeff != 0) g.emplace_back(c, coeff);
        }
        gamma_[a][b] = std::move(g);
      }
  }

  // Ric(w_p, w_q) of the metric, exactly.
  Rat ric(int p, int q) const {
    const int n = M_.size();
    Rat s = 0;
    for (int al = 0; al < n; ++al) {
      // R(w_al, w_p) w_q = nab_al nab_p w_q - nab_p nab_al w_q - nab_[al,p] w_q
      SparseVec v = apply_gamma(al, gamma_[p][q]);
      sparse_add(v, apply_gamma(p, gamma_[al][q]), Rat(-1));
      SparseVec br = L_.bracket(M_.vec[al], M_.vec[p]);
      for (int d : candidates(br)) {
        Rat om = L_.b_form(br, M_.vec[d]);
        if (om == 0) continue;
        sparse_add(v, gamma_[d][q], -om / M_.norm[d]);
      }
      // <R(w_al, w_p) w_q, w_al> / <w_al, w_al> is the w_al-coefficient.
      for (const auto& [idx, c] : v)
        if (idx == al) s += c;
    }
    return s;
  }

 private:
  std::vector<int> candidates(const SparseVec& v) const {
    std::vector<int> cand;
    bool has_cartan = false;
    for (const auto& [coord, x] : v) {
      if (L_.is_cartan(coord)) has_cartan = true;
      else if (owner_[coord] >= 0) cand.push_back(owner_[coord]);
    }
    if (has_cartan) cand.insert(cand.end(), cartan_vecs_.begin(), cartan_vecs_.end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
  }

  // nabla_a applied to a vector given in module-basis coordinates.
  SparseVec apply_gamma(int a, const SparseVec& v) const {
    SparseVec acc;
    for (const auto& [b, cb] : v) sparse_add(acc, gamma_[a][b], cb);
    return acc;
  }

  const CompactAlgebra& L_;
  const ModuleBasis& M_;
  std::vector<Rat> y_;
  std::vector<int> owner_;
  std::vector<int> cartan_vecs_;
  std::vector<std::vector<SparseVec>> gamma_;  // gamma_[a][b] = nabla_{w_a} w_b
};

}  // namespace einmetric
