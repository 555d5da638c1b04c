#include <catch2/catch_amalgamated.hpp>

#include "einmetric/flag.hpp"

using namespace einmetric;

static GroupType type_of(const char* group, int node) {
  auto rs = build_root_system(CartanType::parse(group));
  return classify_type(rs, node);
}

TEST_CASE("classification of every exceptional painted diagram") {
  struct Row { const char* g; int node; const char* label; };
  const Row rows[] = {
      {"G2", 1, "I_a(2)"},   {"G2", 2, "I_b(3)"},
      {"F4", 1, "I_a(2)"},   {"F4", 2, "II_b(3)"},  {"F4", 3, "II_b(4)"},
      {"F4", 4, "I_b(2)"},
      {"E6", 1, "I_b(1)"},   {"E6", 2, "II_b(2)"},  {"E6", 3, "III_b(3)"},
      {"E6", 4, "II_b(2)"},  {"E6", 5, "I_b(1)"},   {"E6", 6, "I_a(2)"},
      {"E7", 1, "I_b(1)"},   {"E7", 2, "II_b(2)"},  {"E7", 3, "II_b(3)"},
      {"E7", 4, "III_b(4)"}, {"E7", 5, "II_b(3)"},  {"E7", 6, "I_a(2)"},
      {"E7", 7, "I_b(2)"},
      {"E8", 1, "I_a(2)"},   {"E8", 2, "II_b(3)"},  {"E8", 3, "II_b(4)"},
      {"E8", 4, "II_b(5)"},  {"E8", 5, "III_b(6)"}, {"E8", 6, "II_b(4)"},
      {"E8", 7, "I_b(2)"},   {"E8", 8, "I_b(3)"},
  };
  for (const Row& r : rows) {
    INFO(r.g << "(" << r.node << ")");
    CHECK(type_of(r.g, r.node).label() == r.label);
  }
}

TEST_CASE("classification samples in the classical series") {
  // D4 at the center node is the unique III_a case.
  CHECK(type_of("D4", 2).label() == "III_a(2)");
  // so(2l) at node l-2 for l >= 5.
  CHECK(type_of("D5", 3).label() == "III_b(2)");
  CHECK(type_of("D7", 5).label() == "III_b(2)");
  // sp(l): node 1 / interior / node l.
  CHECK(type_of("C5", 1).label() == "I_a(2)");
  CHECK(type_of("C5", 3).label() == "II_b(2)");
  CHECK(type_of("C5", 5).label() == "I_b(1)");
  // so(2l+1): node 1 / node 2 / interior.
  CHECK(type_of("B5", 1).label() == "I_b(1)");
  CHECK(type_of("B5", 2).label() == "II_a(2)");
  CHECK(type_of("B5", 3).label() == "II_b(2)");
  CHECK(type_of("B5", 4).label() == "II_b(2)");
  // su(l): interior nodes.
  CHECK(type_of("A5", 2).label() == "II_b(1)");
  CHECK(type_of("A5", 3).label() == "II_b(1)");
  // so(2l) end nodes.
  CHECK(type_of("D6", 1).label() == "I_b(1)");
  CHECK(type_of("D6", 6).label() == "I_b(1)");
  CHECK(type_of("D6", 2).label() == "II_a(2)");
}

TEST_CASE("the seven painted diagrams with three summands") {
  auto cases = list_height3_cases();
  REQUIRE(cases.size() == 7);
  for (const auto& c : cases) {
    INFO(c.name());
    auto rs = build_root_system(c.type);
    auto t = classify_type(rs, c.node);
    CHECK(t.q == 3);
    CHECK_FALSE(t.attached);  // painted node never touches -max_root here
  }
}

TEST_CASE("decomposition dimensions for the seven three-summand spaces") {
  struct Row {
    const char* g;
    int node;
    std::vector<int> dims;  // k0, k1.., p1..p3
    std::vector<const char*> ideals;
  };
  const Row rows[] = {
      {"G2", 2, {1, 3, 4, 2, 4}, {"su2"}},
      {"E8", 8, {1, 63, 112, 56, 16}, {"su8"}},
      {"F4", 2, {1, 3, 8, 24, 12, 4}, {"su2", "su3"}},
      {"E7", 5, {1, 3, 35, 60, 30, 4}, {"su2", "su6"}},
      {"E8", 2, {1, 3, 78, 108, 54, 4}, {"su2", "e6"}},
      {"E7", 3, {1, 24, 8, 60, 30, 10}, {"su5", "su3"}},
      {"E6", 3, {1, 3, 8, 8, 36, 18, 4}, {"su2", "su3", "su3"}},
  };
  for (const Row& r : rows) {
    INFO(r.g << "(" << r.node << ")");
    auto rs = build_root_system(CartanType::parse(r.g));
    auto d = paint(rs, r.node);
    CHECK(d.module_dims() == r.dims);
    REQUIRE(d.ideals.size() == r.ideals.size());
    for (std::size_t i = 0; i < r.ideals.size(); ++i)
      CHECK(d.ideals[i].name == r.ideals[i]);
  }
}

TEST_CASE("ideal node sets match the subdiagram data") {
  // 0-based node sets; k1 (attached to -max_root) listed first.
  auto check = [](const char* g, int node, std::vector<std::vector<int>> want) {
    auto d = paint(build_root_system(CartanType::parse(g)), node);
    REQUIRE(d.ideals.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(d.ideals[i].nodes == want[i]);
  };
  check("F4", 2, {{0}, {2, 3}});
  check("E7", 5, {{5}, {0, 1, 2, 3, 6}});
  check("E8", 2, {{0}, {2, 3, 4, 5, 6, 7}});
  check("E7", 3, {{3, 4, 5, 6}, {0, 1}});
  check("E6", 3, {{5}, {0, 1}, {3, 4}});
  check("G2", 2, {{0}});
  check("E8", 8, {{0, 1, 2, 3, 4, 5, 6}});
}

TEST_CASE("summand root counts and painted-coefficient partition") {
  for (const auto& c : list_height3_cases()) {
    auto rs = build_root_system(c.type);
    auto d = paint(rs, c.node);
    INFO(c.name());
    // q equals the Dynkin mark.
    CHECK(d.gtype.q == rs.max_root[c.node - 1]);
    // Each summand root really carries coefficient t at the painted node.
    for (int t = 1; t <= d.gtype.q; ++t)
      for (int idx : d.summand_roots[t - 1])
        CHECK(rs.positive[idx][d.painted] == t);
    // Ideal roots carry coefficient 0.
    for (const auto& k : d.ideals)
      for (int idx : k.pos_roots) CHECK(rs.positive[idx][d.painted] == 0);
  }
}

TEST_CASE("every painted node of every exceptional group yields a covering decomposition") {
  for (const char* g : {"G2", "F4", "E6", "E7", "E8"}) {
    auto rs = build_root_system(CartanType::parse(g));
    for (int node = 1; node <= rs.rank; ++node) {
      auto d = paint(rs, node);  // internal require() checks the partition
      int sum = 0;
      for (int x : d.module_dims()) sum += x;
      CHECK(sum == rs.dimension());
    }
  }
}
