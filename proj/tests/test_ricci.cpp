#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>

#include "einmetric/fixtures.hpp"
#include "einmetric/koszul.hpp"
#include "einmetric/module_basis.hpp"
#include "einmetric/ricci.hpp"

using namespace einmetric;

namespace {

struct Setup {
  CompactAlgebra L;
  Decomposition D;
  ModuleBasis M;
  TripleTable T;
};

const Setup& setup(const std::string& key) {
  static std::map<std::string, Setup> cache;
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto& c = fixtures::case_by_key(key);
    CompactAlgebra L = build_compact_algebra(build_root_system(c.type));
    Decomposition D = paint(L.rs, c.node);
    ModuleBasis M = module_basis(L, D);
    TripleTable T = oracle_triples(L, D);
    it = cache.emplace(key, Setup{std::move(L), std::move(D), std::move(M), std::move(T)}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("the bi-invariant metric is Einstein with component one quarter") {
  for (const auto& c : fixtures::seven_cases()) {
    INFO(c.key);
    const Setup& s = setup(c.key);
    std::vector<Rat> ones(s.T.n_modules, Rat(1));
    for (const Rat& r : ricci_components(s.T, ones)) CHECK(r == rat(1, 4));
  }
}

TEST_CASE("ricci components scale inversely under homothety") {
  for (const char* key : {"G2(2)", "E6(3)", "E8(2)"}) {
    INFO(key);
    const Setup& s = setup(key);
    std::vector<Rat> y;
    for (int m = 0; m < s.T.n_modules; ++m) y.push_back(rat(2 * m + 3, m + 2));
    const Rat c = rat(7, 5);
    std::vector<Rat> cy = y;
    for (Rat& v : cy) v *= c;
    auto r = ricci_components(s.T, y);
    auto rc = ricci_components(s.T, cy);
    for (int k = 0; k < s.T.n_modules; ++k) CHECK(rc[k] * c == r[k]);
  }
}

TEST_CASE("subalgebra-adapted metrics equalize ricci components") {
  // Each row: a metric built from generic parameters that is adapted to a
  // subalgebra decomposition, and the groups of components forced equal.
  struct Row {
    const char* key;
    std::vector<Rat> y;
    std::vector<std::vector<int>> equal;
  };
  const Rat w1 = rat(2), w2 = rat(5, 3), w3 = rat(7, 2);
  const Rat z1 = rat(3, 2), z2 = rat(4), z3 = rat(5, 3), z4 = rat(2);
  const std::vector<Row> rows = {
      // (k0, k1, p1, p2, p3): k0 + p2 and k1 span a subalgebra, p1 + p3 its complement.
      {"G2(2)", {w1, w2, w3, w1, w3}, {{0, 3}, {2, 4}}},
      // (k0, k1, p1, p2, p3): k + p3 is a subalgebra of su type; also k + p2.
      {"E8(8)", {z1, z1, z2, z2, z1}, {{0, 1, 4}, {2, 3}}},
      {"E8(8)", {w1, w1, w3, w1, w3}, {{0, 1, 3}, {2, 4}}},
      // (k0, k1, k2, p1, p2, p3): k0 + k2 + p2 plus k1; and k0 + k1 + p3 plus k2.
      {"F4(2)", {w1, w2, w1, w3, w1, w3}, {{0, 2, 4}, {3, 5}}},
      {"E7(5)", {w1, w2, w1, w3, w1, w3}, {{0, 2, 4}, {3, 5}}},
      {"E8(2)", {w1, w2, w1, w3, w1, w3}, {{0, 2, 4}, {3, 5}}},
      {"F4(2)", {z1, z1, z2, z3, z3, z1}, {{0, 1, 5}, {3, 4}}},
      {"E7(5)", {z1, z1, z2, z3, z3, z1}, {{0, 1, 5}, {3, 4}}},
      {"E8(2)", {z1, z1, z2, z3, z3, z1}, {{0, 1, 5}, {3, 4}}},
      // E7(3): all of k plus p2 closes up (su type).
      {"E7(3)", {w1, w1, w1, w3, w1, w3}, {{0, 1, 2, 4}, {3, 5}}},
      {"E7(3)", {z1, z1, z2, z3, z3, z1}, {{0, 1, 5}, {3, 4}}},
      // (k0, k1, k2, k3, p1, p2, p3): k0 + k2 + k3 + p2 plus k1; k0 + k1 + p3 plus k2, k3.
      {"E6(3)", {w1, w2, w1, w1, w3, w1, w3}, {{0, 2, 3, 5}, {4, 6}}},
      {"E6(3)", {z1, z1, z2, z4, z3, z3, z1}, {{0, 1, 6}, {4, 5}}},
  };
  for (const auto& row : rows) {
    INFO(row.key);
    const Setup& s = setup(row.key);
    auto r = ricci_components(s.T, row.y);
    for (const auto& group : row.equal)
      for (std::size_t i = 1; i < group.size(); ++i) {
        INFO("components " << group[0] << " vs " << group[i]);
        CHECK(r[group[0]] == r[group[i]]);
      }
  }
}

TEST_CASE("the distinguished base metric (1,2,3) is einstein on the base") {
  for (const auto& c : fixtures::seven_cases()) {
    INFO(c.key);
    const Setup& s = setup(c.key);
    std::vector<Rat> y(s.T.n_modules, Rat(1));
    for (int t = 1; t <= 3; ++t) y[s.D.base_module(t)] = Rat(t);
    auto rb = base_ricci_components(s.T, s.D, y);
    REQUIRE(rb.size() == 3);
    CHECK(rb[0] == rb[1]);
    CHECK(rb[1] == rb[2]);
  }
}

TEST_CASE("componentwise and curvature-tensor routes agree") {
  // Full Ricci matrix on the smallest case.
  {
    const Setup& s = setup("G2(2)");
    std::vector<Rat> y = {rat(2), rat(5, 3), rat(7, 2), rat(3), rat(4, 3)};
    KoszulRicci K(s.L, s.M, y);
    auto r = ricci_components(s.T, y);
    for (int p = 0; p < s.M.size(); ++p)
      for (int q = p; q < s.M.size(); ++q) {
        Rat expected = p == q ? r[s.M.module[p]] * y[s.M.module[p]] * s.M.norm[p] : Rat(0);
        INFO("entry " << p << "," << q);
        CHECK(K.ric(p, q) == expected);
      }
  }
  // Larger case: diagonal sample entries plus every cross pair between the
  // two isomorphic ideals, which the componentwise route cannot see at all.
  {
    const Setup& s = setup("E6(3)");
    std::vector<Rat> y = {rat(2), rat(5, 3), rat(7, 2), rat(3), rat(4, 3), rat(1, 2), rat(5)};
    KoszulRicci K(s.L, s.M, y);
    auto r = ricci_components(s.T, y);
    std::vector<int> first_of(s.M.n_modules, -1), k2, k3;
    for (int p = 0; p < s.M.size(); ++p) {
      if (first_of[s.M.module[p]] < 0) first_of[s.M.module[p]] = p;
      if (s.M.module[p] == 2) k2.push_back(p);
      if (s.M.module[p] == 3) k3.push_back(p);
    }
    for (int m = 0; m < s.M.n_modules; ++m) {
      int p = first_of[m];
      INFO("module " << m);
      CHECK(K.ric(p, p) == r[m] * y[m] * s.M.norm[p]);
    }
    REQUIRE(k2.size() == 8);
    REQUIRE(k3.size() == 8);
    for (int p : k2)
      for (int q : k3) {
        INFO("cross entry " << p << "," << q);
        CHECK(K.ric(p, q) == 0);
      }
    // A few other off-diagonal blocks for good measure.
    CHECK(K.ric(first_of[1], first_of[2]) == 0);
    CHECK(K.ric(first_of[4], first_of[5]) == 0);
    CHECK(K.ric(first_of[0], first_of[6]) == 0);
  }
}
