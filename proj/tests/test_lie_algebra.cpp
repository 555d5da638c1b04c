#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>

#include "einmetric/flag.hpp"
#include "einmetric/lie_algebra.hpp"
#include "einmetric/module_basis.hpp"

using namespace einmetric;

namespace {

const CompactAlgebra& algebra(const char* name) {
  static std::map<std::string, CompactAlgebra> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, build_compact_algebra(build_root_system(CartanType::parse(name)))).first;
  return it->second;
}

SparseVec unit(int i) { return {{i, Rat(1)}}; }

SparseVec jacobi_defect(const CompactAlgebra& L, int a, int b, int c) {
  SparseVec s = L.bracket(L.bracket_basis(a, b), unit(c));
  sparse_add(s, L.bracket(L.bracket_basis(b, c), unit(a)), Rat(1));
  sparse_add(s, L.bracket(L.bracket_basis(c, a), unit(b)), Rat(1));
  return s;
}

// Independent recomputation of the root-string length p for (a, b):
// the largest p with b - p*a still a root.
int string_p(const RootSystem& rs, const Coeffs& a, const Coeffs& b) {
  int p = 0;
  Coeffs c = b;
  for (;;) {
    for (int j = 0; j < rs.rank; ++j) c[j] -= a[j];
    bool zero = true;
    for (int j = 0; j < rs.rank; ++j)
      if (c[j] != 0) zero = false;
    if (zero || !rs.is_root(c)) break;
    ++p;
  }
  return p;
}

}  // namespace

TEST_CASE("bracket satisfies the Jacobi identity exhaustively on small algebras") {
  for (const char* name : {"G2", "F4"}) {
    const CompactAlgebra& L = algebra(name);
    INFO(name);
    for (int a = 0; a < L.dim; ++a)
      for (int b = a + 1; b < L.dim; ++b)
        for (int c = b + 1; c < L.dim; ++c) {
          SparseVec s = jacobi_defect(L, a, b, c);
          if (!s.empty()) {
            INFO("triple " << a << "," << b << "," << c);
            REQUIRE(s.empty());
          }
        }
  }
}

TEST_CASE("bracket satisfies the Jacobi identity on sampled triples of the large algebras") {
  for (const char* name : {"E6", "E7", "E8"}) {
    const CompactAlgebra& L = algebra(name);
    INFO(name);
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> pick(0, L.dim - 1);
    for (int trial = 0; trial < 4000; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      SparseVec s = jacobi_defect(L, a, b, c);
      if (!s.empty()) {
        INFO("triple " << a << "," << b << "," << c);
        REQUIRE(s.empty());
      }
    }
  }
}

TEST_CASE("root-space bracket coefficients have the string-length magnitude") {
  for (const char* name : {"G2", "F4", "E6"}) {
    const CompactAlgebra& L = algebra(name);
    const RootSystem& rs = L.rs;
    INFO(name);
    for (int a = 0; a < rs.n_positive(); ++a)
      for (int b = 0; b < rs.n_positive(); ++b) {
        if (a == b) continue;
        Coeffs sum = rs.positive[a];
        for (int j = 0; j < rs.rank; ++j) sum[j] += rs.positive[b][j];
        long n = L.n_pos(a, b);
        if (!rs.is_root(sum)) {
          CHECK(n == 0);
          continue;
        }
        int p = string_p(rs, rs.positive[a], rs.positive[b]);
        INFO("pair " << a << "," << b);
        CHECK(std::abs(n) == p + 1);
      }
  }
}

TEST_CASE("trace form matches the closed-form block data") {
  for (const char* name : {"G2", "F4"}) {
    const CompactAlgebra& L = algebra(name);
    INFO(name);
    for (int i = 0; i < L.rs.rank; ++i)
      for (int j = 0; j < L.rs.rank; ++j)
        CHECK(L.killing_b(L.t_index(i), L.t_index(j)) == L.b_cartan()[i][j]);
    for (int k = 0; k < L.rs.n_positive(); ++k) {
      CHECK(L.killing_b(L.x_index(k), L.x_index(k)) == L.g_root(k));
      CHECK(L.killing_b(L.y_index(k), L.y_index(k)) == L.g_root(k));
      CHECK(L.killing_b(L.x_index(k), L.y_index(k)) == 0);
      CHECK(L.killing_b(L.t_index(0), L.x_index(k)) == 0);
    }
    // A few off-diagonal root pairs.
    for (int k = 1; k < std::min(6, L.rs.n_positive()); ++k) {
      CHECK(L.killing_b(L.x_index(0), L.x_index(k)) == 0);
      CHECK(L.killing_b(L.y_index(0), L.y_index(k)) == 0);
    }
  }
}

TEST_CASE("trace form is invariant under the adjoint action") {
  for (const char* name : {"G2", "E6", "E8"}) {
    const CompactAlgebra& L = algebra(name);
    INFO(name);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick(0, L.dim - 1);
    for (int trial = 0; trial < 600; ++trial) {
      int z = pick(rng), u = pick(rng), v = pick(rng);
      Rat lhs = L.b_form(L.bracket_basis(z, u), unit(v));
      Rat rhs = L.b_form(unit(u), L.bracket_basis(z, v));
      INFO("triple " << z << "," << u << "," << v);
      CHECK(lhs + rhs == 0);
    }
  }
}

TEST_CASE("cartan block of the trace form is symmetric positive definite") {
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    const CompactAlgebra& L = algebra(name);
    INFO(name);
    auto m = L.b_cartan();  // copy; reduced in place below
    int n = L.rs.rank;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(m[i][j] == m[j][i]);
    // Positive leading principal minors via fraction-free elimination signs.
    for (int c = 0; c < n; ++c) {
      REQUIRE(m[c][c] > 0);
      for (int r = c + 1; r < n; ++r) {
        Rat f = m[r][c] / m[c][c];
        for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    for (int k = 0; k < L.rs.n_positive(); ++k) CHECK(L.g_root(k) > 0);
  }
}

TEST_CASE("module-adapted basis is orthogonal, normed and complete") {
  for (const auto& cfg : list_height3_cases()) {
    const CompactAlgebra& L = algebra(cfg.type.name().c_str());
    Decomposition D = paint(L.rs, cfg.node);
    ModuleBasis M = module_basis(L, D);
    INFO(cfg.name());
    REQUIRE(M.size() == L.dim);
    REQUIRE(M.dims == D.module_dims());
    for (int a = 0; a < M.size(); ++a) {
      Rat na = L.b_form(M.vec[a], M.vec[a]);
      CHECK(na == M.norm[a]);
      CHECK(na > 0);
    }
    // Orthogonality: distinct Cartan-supported vectors pairwise, and against
    // every root vector; distinct root vectors are orthogonal by construction
    // (disjoint support), which b_form's block structure encodes.
    std::vector<int> cartan_ids;
    for (int a = 0; a < M.size(); ++a)
      if (L.is_cartan(M.vec[a].front().first)) cartan_ids.push_back(a);
    for (int i : cartan_ids)
      for (int a = 0; a < M.size(); ++a) {
        if (a == i) continue;
        INFO("pair " << i << "," << a);
        CHECK(L.b_form(M.vec[i], M.vec[a]) == 0);
      }
  }
}
