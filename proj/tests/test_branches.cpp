#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "einmetric/branches.hpp"
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

Rat tiny(int digits) {
  Rat w(1);
  for (int i = 0; i < digits; ++i) w /= 10;
  return w;
}

Rat rabs(const Rat& x) { return x >= 0 ? x : Rat(-x); }

std::vector<FamilyPoint> all_family_points(const EinsteinSystem& sys,
                                           const fixtures::SystemCase& sc) {
  std::vector<FamilyPoint> pts;
  for (const auto& br : sc.branches) {
    FamilySolution fam = solve_family(sys, br.relations);
    for (auto& p : family_points(sys, sc.pinned, fam, tiny(30)))
      pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

TEST_CASE("solution families satisfy the systems identically over Q[g]/(gate)") {
  for (const auto& sc : fixtures::system_cases()) {
    INFO(sc.key);
    const Setup& st = setup(sc.key);
    EinsteinSystem sys = einstein_system(st.T, st.D, sc.pinned);
    for (const auto& br : sc.branches) {
      INFO("gate " + br.relations[0]);
      FamilySolution fam = solve_family(sys, br.relations);
      ModRing R(fam.gate);
      for (const auto& fork : fam.assignments)
        for (const Poly& eq : sys.equations)
          CHECK(uis_zero(eval_in_ring(eq, fork, R)));
    }
  }
}

TEST_CASE("family points satisfy the systems to 1e-9") {
  const Rat tol = tiny(9);
  for (const auto& sc : fixtures::system_cases()) {
    INFO(sc.key);
    const Setup& st = setup(sc.key);
    EinsteinSystem sys = einstein_system(st.T, st.D, sc.pinned);
    for (const auto& p : all_family_points(sys, sc)) {
      std::vector<Rat> at;
      for (const auto& v : sys.vars) at.push_back(p.coords.at(v));
      for (const Poly& eq : sys.equations) CHECK(rabs(eq.eval<Rat>(at)) < tol);
    }
  }
}

TEST_CASE("family enumeration recovers every reductive reference solution") {
  for (const auto& sc : fixtures::system_cases()) {
    INFO(sc.key);
    const Setup& st = setup(sc.key);
    EinsteinSystem sys = einstein_system(st.T, st.D, sc.pinned);
    auto pts = all_family_points(sys, sc);

    int reductive = 0;
    for (const auto& sol : sc.solutions) {
      if (!sol.naturally_reductive) continue;
      ++reductive;
      bool matched = false;
      for (const auto& p : pts) {
        double d = 0;
        for (const auto& [name, v] : p.coords)
          d = std::max(d, std::fabs(to_scalar<double>(v) - sol.coords.at(name)));
        if (d < 1e-7) matched = true;
      }
      INFO("unmatched reference solution #" << reductive);
      CHECK(matched);
    }

    // The only family point that is not tabulated as a solution is the
    // bi-invariant metric, from the degenerate gate root.
    CHECK(static_cast<int>(pts.size()) == reductive + 1);
    bool killing = false;
    for (const auto& p : pts) {
      Rat d(0);
      for (const auto& [name, v] : p.coords) d = std::max(d, rabs(v - Rat(1)));
      if (d < tiny(20)) killing = true;
    }
    CHECK(killing);
  }
}

TEST_CASE("quadratic fork pairs on the fourth family") {
  const Setup& st = setup("E6(3)");
  const auto& sc = fixtures::system_case_by_key("E6(3)");
  EinsteinSystem sys = einstein_system(st.T, st.D, sc.pinned);
  FamilySolution fam = solve_family(sys, sc.branches[3].relations);
  CHECK(fam.gate_var == "x3");
  CHECK(udeg(fam.gate) == 2);
  REQUIRE(fam.assignments.size() == 2);

  // On one fork u3 equals the gate generator; on the other the two roots of
  // the u3 quadratic are exchanged, so u2 and u3 swap between the forks.
  int iu2 = -1, iu3 = -1;
  for (size_t i = 0; i < sys.vars.size(); ++i) {
    if (sys.vars[i] == "u2") iu2 = static_cast<int>(i);
    if (sys.vars[i] == "u3") iu3 = static_cast<int>(i);
  }
  REQUIRE(iu2 >= 0);
  REQUIRE(iu3 >= 0);
  ModRing R(fam.gate);
  CHECK(fam.assignments[0][iu3] == R.gen());
  CHECK(fam.assignments[0][iu2] == fam.assignments[1][iu3]);
  CHECK(fam.assignments[0][iu3] == fam.assignments[1][iu2]);
}

TEST_CASE("a quadratic relation without the gate root is rejected") {
  const Setup& st = setup("G2(2)");
  const auto& sc = fixtures::system_case_by_key("G2(2)");
  EinsteinSystem sys = einstein_system(st.T, st.D, sc.pinned);
  CHECK_THROWS(solve_family(sys, {"x1^2 - 3", "u0^2 - x1"}));
}
