#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "einmetric/classifier.hpp"
#include "einmetric/fixtures.hpp"
#include "einmetric/module_basis.hpp"
#include "einmetric/ricci.hpp"

using namespace einmetric;

namespace {

struct Setup {
  CompactAlgebra L;
  Decomposition D;
  TripleTable T;
};

const Setup& setup(const std::string& key) {
  static std::map<std::string, Setup> cache;
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto& c = fixtures::case_by_key(key);
    CompactAlgebra L = build_compact_algebra(build_root_system(c.type));
    Decomposition D = paint(L.rs, c.node);
    TripleTable T = oracle_triples(L, D);
    it = cache.emplace(key, Setup{std::move(L), std::move(D), std::move(T)}).first;
  }
  return it->second;
}

// Evaluate and also return the sum of term magnitudes, for relative residuals.
std::pair<double, double> eval_with_scale(const Poly& p, const std::vector<double>& at) {
  double acc = 0, scale = 0;
  for (const auto& [m, c] : p.terms) {
    double t = to_scalar<double>(c);
    for (int i = 0; i < p.nvars(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= at[i];
    acc += t;
    scale += std::fabs(t);
  }
  return {acc, scale};
}

}  // namespace

TEST_CASE("derived reductivity conditions match the reference lists") {
  using Chains = std::vector<EqualityChain>;
  const std::map<std::string, Chains> symmetric_pair = {
      {"G2(2)", {{"u0", "x2"}, {"x1", "x3"}}},
      {"E8(8)", {{"u0", "u1", "x2"}, {"x1", "x3"}}},
      {"F4(2)", {{"u0", "u2", "x2"}, {"x1", "x3"}}},
      {"E7(5)", {{"u0", "u2", "x2"}, {"x1", "x3"}}},
      {"E8(2)", {{"u0", "u2", "x2"}, {"x1", "x3"}}},
      {"E7(3)", {{"u0", "u1", "u2", "x2"}, {"x1", "x3"}}},
      {"E6(3)", {{"u0", "u2", "u3", "x2"}, {"x1", "x3"}}},
  };
  for (const auto& c : fixtures::seven_cases()) {
    INFO(c.key);
    const Setup& st = setup(c.key);
    const ReductivityConditions rc = reductivity_conditions(st.T, st.D);
    CHECK(rc.symmetric_pair == symmetric_pair.at(c.key));
    CHECK(rc.subalgebra == Chains{{"u0", "u1", "x3"}, {"x1", "x2"}});
    CHECK(rc.equal_x == Chains{{"x1", "x2", "x3"}});
  }
}

TEST_CASE("verdicts match the reference labeling of every solution") {
  for (const auto& sc : fixtures::system_cases()) {
    INFO(sc.key);
    const Setup& st = setup(sc.key);
    int i = 0;
    for (const auto& sol : sc.solutions) {
      INFO("solution #" << i++);
      ReductivityVerdict v = check_naturally_reductive(st.T, st.D, sol.coords);
      CHECK(v.naturally_reductive == sol.naturally_reductive);
    }
  }
}

TEST_CASE("matched conditions name the subalgebra behind each verdict") {
  const Setup& g2 = setup("G2(2)");
  const std::map<std::string, double> eleven_ninths = {
      {"u0", 1}, {"u1", 1}, {"x1", 11.0 / 9}, {"x2", 11.0 / 9}, {"x3", 1}};
  CHECK(check_naturally_reductive(g2.T, g2.D, eleven_ninths).matched ==
        ReductivityCondition::subalgebra);

  const std::map<std::string, double> ones = {
      {"u0", 1}, {"u1", 1}, {"x1", 1}, {"x2", 1}, {"x3", 1}};
  CHECK(check_naturally_reductive(g2.T, g2.D, ones).matched ==
        ReductivityCondition::biinvariant);

  const std::map<std::string, double> fresh = {{"u0", 1.0851961},
                                               {"u1", 0.69929486},
                                               {"x1", 0.93245951},
                                               {"x2", 1.0225069},
                                               {"x3", 1}};
  CHECK(check_naturally_reductive(g2.T, g2.D, fresh).matched ==
        ReductivityCondition::none);

  const Setup& e7 = setup("E7(3)");
  const std::map<std::string, double> two_sevenths = {
      {"u0", 2.0 / 7}, {"u1", 2.0 / 7}, {"u2", 2.0 / 7},
      {"x1", 1},       {"x2", 2.0 / 7}, {"x3", 1}};
  CHECK(check_naturally_reductive(e7.T, e7.D, two_sevenths).matched ==
        ReductivityCondition::symmetric_pair);
}

TEST_CASE("only the two equal su(3) ideals are interchangeable") {
  for (const auto& c : fixtures::seven_cases()) {
    INFO(c.key);
    const Setup& st = setup(c.key);
    auto pairs = interchangeable_ideals(st.T, st.D);
    if (c.key == "E6(3)") {
      REQUIRE(pairs.size() == 1);
      CHECK(pairs[0] == std::pair<int, int>(2, 3));
    } else {
      CHECK(pairs.empty());
    }
  }
}

TEST_CASE("non-metric real solutions solve the systems but fail positivity") {
  for (const auto& sc : fixtures::system_cases()) {
    INFO(sc.key);
    if (sc.nonmetric.empty()) continue;
    const Setup& st = setup(sc.key);
    EinsteinSystem sys = einstein_system(st.T, st.D, sc.pinned);
    for (const auto& nm : sc.nonmetric) {
      std::vector<double> at;
      double least = 1;
      for (const auto& v : sys.vars) {
        at.push_back(nm.at(v));
        least = std::min(least, nm.at(v));
      }
      CHECK(least < 0);
      for (const Poly& eq : sys.equations) {
        auto [val, scale] = eval_with_scale(eq, at);
        CHECK(std::fabs(val) <= 1e-5 * scale);
      }
      CHECK_THROWS(check_naturally_reductive(st.T, st.D, nm));
    }
  }
}

TEST_CASE("the bi-invariant metric has einstein constant one quarter") {
  const Setup& st = setup("F4(2)");
  std::map<std::string, double> ones;
  for (const auto& n : metric_variable_names(st.D)) ones[n] = 1;
  CHECK(std::fabs(einstein_constant(st.T, st.D, ones) - 0.25) < 1e-12);
  ones["x2"] = 2;
  CHECK_THROWS(einstein_constant(st.T, st.D, ones));
}

TEST_CASE("scale invariants are homothety invariant") {
  const auto& sc = fixtures::system_case_by_key("F4(2)");
  const Setup& st = setup("F4(2)");
  const auto& sol = sc.solutions.front();
  REQUIRE(!sol.naturally_reductive);
  std::map<std::string, double> doubled;
  for (const auto& [n, v] : sol.coords) doubled[n] = 2 * v;
  double lam = einstein_constant(st.T, st.D, sol.coords);
  double lam2 = einstein_constant(st.T, st.D, doubled);
  CHECK(std::fabs(lam2 - lam / 2) < 1e-12);
  ScaleInvariant a = scale_invariant(st.T, st.D, sol.coords, lam);
  ScaleInvariant b = scale_invariant(st.T, st.D, doubled, lam2);
  CHECK(invariant_distance(a, b) < 1e-12);
}

TEST_CASE("swapping the interchangeable ideals fixes the invariant") {
  const auto& sc = fixtures::system_case_by_key("E6(3)");
  const Setup& st = setup("E6(3)");
  for (const auto& sol : sc.solutions) {
    std::map<std::string, double> swapped = sol.coords;
    std::swap(swapped.at("u2"), swapped.at("u3"));
    double lam = einstein_constant(st.T, st.D, sol.coords);
    double lam2 = einstein_constant(st.T, st.D, swapped);
    ScaleInvariant a = scale_invariant(st.T, st.D, sol.coords, lam);
    ScaleInvariant b = scale_invariant(st.T, st.D, swapped, lam2);
    CHECK(invariant_distance(a, b) < 1e-10);
  }
}

TEST_CASE("distinct non-reductive metric counts match the reference table") {
  for (const auto& sc : fixtures::system_cases()) {
    INFO(sc.key);
    const Setup& st = setup(sc.key);
    std::vector<ScaleInvariant> invs;
    for (const auto& sol : sc.solutions) {
      if (sol.naturally_reductive) continue;
      double lam = einstein_constant(st.T, st.D, sol.coords);
      invs.push_back(scale_invariant(st.T, st.D, sol.coords, lam));
    }
    CHECK(count_distinct(invs) == sc.distinct_non_naturally_reductive);
    // Either two tabulated solutions are the same metric up to isometry or
    // their invariants are well separated; nothing sits near the threshold.
    for (size_t i = 0; i < invs.size(); ++i)
      for (size_t j = i + 1; j < invs.size(); ++j) {
        double d = invariant_distance(invs[i], invs[j]);
        CHECK((d < 1e-6 || d > 1e-4));
      }
  }
}
