#pragma once
// Reference data for the seven rank-three reductive configurations: module
// dimensions and the nonzero metric structure constants A_{ijk}, recorded as
// exact rationals.  Module indices follow the order k_0, k_1, ..., p_1, p_2,
// p_3 used throughout; keys are sorted index triples.
//
// Later stages extend this table with the polynomial systems, eliminants and
// solution lists used by the reproduction fixtures.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "eliminant_data.hpp"
#include "flag.hpp"
#include "types.hpp"

namespace einmetric::fixtures {

struct GroupCase {
  std::string key;  // CLI name, e.g. "G2(2)"
  CartanType type;
  int node;                               // painted node, 1-based
  std::vector<int> dims;                  // k_0, ideals, p_1..p_3
  std::map<std::array<int, 3>, Rat> triples;  // nonzero A_{ijk}, sorted keys
};

inline const std::vector<GroupCase>& seven_cases() {
  using K = std::array<int, 3>;
  static const std::vector<GroupCase> cases = [] {
    std::vector<GroupCase> v;

    // Modules (k0, k1, p1, p2, p3).
    v.push_back({"G2(2)",
                 CartanType::parse("G2"),
                 2,
                 {1, 3, 4, 2, 4},
                 {{K{0, 2, 2}, rat(1, 12)},
                  {K{0, 3, 3}, rat(1, 6)},
                  {K{0, 4, 4}, rat(3, 4)},
                  {K{1, 1, 1}, rat(3, 2)},
                  {K{1, 2, 2}, rat(3, 4)},
                  {K{1, 4, 4}, rat(3, 4)},
                  {K{2, 2, 3}, rat(2, 3)},
                  {K{2, 3, 4}, rat(1, 2)}}});

    v.push_back({"E8(8)",
                 CartanType::parse("E8"),
                 8,
                 {1, 63, 112, 56, 16},
                 {{K{0, 2, 2}, rat(7, 30)},
                  {K{0, 3, 3}, rat(7, 15)},
                  {K{0, 4, 4}, rat(3, 10)},
                  {K{1, 1, 1}, rat(84, 5)},
                  {K{1, 2, 2}, rat(63, 2)},
                  {K{1, 3, 3}, rat(63, 5)},
                  {K{1, 4, 4}, rat(21, 10)},
                  {K{2, 2, 3}, rat(56, 3)},
                  {K{2, 3, 4}, rat(28, 5)}}});

    // Modules (k0, k1, k2, p1, p2, p3).
    v.push_back({"F4(2)",
                 CartanType::parse("F4"),
                 2,
                 {1, 3, 8, 24, 12, 4},
                 {{K{0, 3, 3}, rat(2, 9)},
                  {K{0, 4, 4}, rat(4, 9)},
                  {K{0, 5, 5}, rat(1, 3)},
                  {K{1, 1, 1}, rat(2, 3)},
                  {K{1, 3, 3}, Rat(2)},
                  {K{1, 5, 5}, rat(1, 3)},
                  {K{2, 2, 2}, rat(4, 3)},
                  {K{2, 3, 3}, rat(40, 9)},
                  {K{2, 4, 4}, rat(20, 9)},
                  {K{3, 3, 4}, Rat(4)},
                  {K{3, 4, 5}, rat(4, 3)}}});

    v.push_back({"E7(3)",
                 CartanType::parse("E7"),
                 3,
                 {1, 24, 8, 60, 30, 10},
                 {{K{0, 3, 3}, rat(2, 9)},
                  {K{0, 4, 4}, rat(4, 9)},
                  {K{0, 5, 5}, rat(1, 3)},
                  {K{1, 1, 1}, rat(20, 3)},
                  {K{1, 3, 3}, Rat(12)},
                  {K{1, 4, 4}, Rat(4)},
                  {K{1, 5, 5}, rat(4, 3)},
                  {K{2, 2, 2}, rat(4, 3)},
                  {K{2, 3, 3}, rat(40, 9)},
                  {K{2, 4, 4}, rat(20, 9)},
                  {K{3, 3, 4}, Rat(10)},
                  {K{3, 4, 5}, rat(10, 3)}}});

    v.push_back({"E7(5)",
                 CartanType::parse("E7"),
                 5,
                 {1, 3, 35, 60, 30, 4},
                 {{K{0, 3, 3}, rat(5, 18)},
                  {K{0, 4, 4}, rat(5, 9)},
                  {K{0, 5, 5}, rat(1, 6)},
                  {K{1, 1, 1}, rat(1, 3)},
                  {K{1, 3, 3}, rat(5, 2)},
                  {K{1, 5, 5}, rat(1, 6)},
                  {K{2, 2, 2}, rat(35, 3)},
                  {K{2, 3, 3}, rat(140, 9)},
                  {K{2, 4, 4}, rat(70, 9)},
                  {K{3, 3, 4}, Rat(10)},
                  {K{3, 4, 5}, rat(5, 3)}}});

    v.push_back({"E8(2)",
                 CartanType::parse("E8"),
                 2,
                 {1, 3, 78, 108, 54, 4},
                 {{K{0, 3, 3}, rat(3, 10)},
                  {K{0, 4, 4}, rat(3, 5)},
                  {K{0, 5, 5}, rat(1, 10)},
                  {K{1, 1, 1}, rat(1, 5)},
                  {K{1, 3, 3}, rat(27, 10)},
                  {K{1, 5, 5}, rat(1, 10)},
                  {K{2, 2, 2}, rat(156, 5)},
                  {K{2, 3, 3}, rat(156, 5)},
                  {K{2, 4, 4}, rat(78, 5)},
                  {K{3, 3, 4}, Rat(18)},
                  {K{3, 4, 5}, rat(9, 5)}}});

    // Modules (k0, k1, k2, k3, p1, p2, p3).
    v.push_back({"E6(3)",
                 CartanType::parse("E6"),
                 3,
                 {1, 3, 8, 8, 36, 18, 4},
                 {{K{0, 4, 4}, rat(1, 4)},
                  {K{0, 5, 5}, rat(1, 2)},
                  {K{0, 6, 6}, rat(1, 4)},
                  {K{1, 1, 1}, rat(1, 2)},
                  {K{1, 4, 4}, rat(9, 4)},
                  {K{1, 6, 6}, rat(1, 4)},
                  {K{2, 2, 2}, Rat(2)},
                  {K{2, 4, 4}, Rat(4)},
                  {K{2, 5, 5}, Rat(2)},
                  {K{3, 3, 3}, Rat(2)},
                  {K{3, 4, 4}, Rat(4)},
                  {K{3, 5, 5}, Rat(2)},
                  {K{4, 4, 5}, Rat(6)},
                  {K{4, 5, 6}, rat(3, 2)}}});

    return v;
  }();
  return cases;
}

inline const GroupCase& case_by_key(const std::string& key) {
  for (const GroupCase& c : seven_cases())
    if (c.key == key) return c;
  throw error("unknown group case: " + key);
}

// ---------------------------------------------------------------------------
// Reference Einstein systems, their real solutions, and degenerate branches
// ---------------------------------------------------------------------------

// One real solution, coordinates keyed by metric variable name.  The
// normalized variable is present with value 1.  Values carry the precision
// they are tabulated with (8 significant digits unless more were given).
struct ReferenceSolution {
  std::map<std::string, double> coords;
  bool naturally_reductive = false;
};

// A solution family cut out by triangular relations.  relations[0] is
// univariate; once a real root of it is substituted, each later relation
// becomes univariate in exactly one still-unknown variable, so the family is
// enumerated by a depth-first walk over real roots.  Variables absent from
// every relation keep the normalization value 1.
struct BranchFamily {
  std::vector<std::string> relations;
};

// Elimination data: adjoin `extra_generator` (if nonempty) to the system,
// saturate by the product of all variables, and eliminate in lex order
// `lex_order` (largest first).  The univariate member of the resulting basis,
// in the variable lex_order.back(), equals the product of `cofactors` and
// `tail` up to an integer unit.
struct EliminationFixture {
  std::string extra_generator;
  std::vector<std::string> lex_order;
  std::vector<std::string> cofactors;
  const EliminantData* tail = nullptr;
};

struct SystemCase {
  std::string key;
  std::string pinned;                  // metric variable normalized to 1
  std::vector<std::string> vars;       // remaining variables, builder order
  std::vector<std::string> equations;  // reference polynomial system
  std::vector<EliminationFixture> eliminations;
  std::vector<ReferenceSolution> solutions;  // reference positive solutions
  // Real solutions with a nonpositive coordinate: no metric, excluded by the
  // positivity filter.
  std::vector<std::map<std::string, double>> nonmetric;
  std::vector<BranchFamily> branches;      // naturally reductive families
  std::vector<std::map<std::string, Rat>> exact_points;  // rational solutions
  int distinct_non_naturally_reductive = 0;  // up to isometry and scaling
};

inline const std::vector<SystemCase>& system_cases() {
  static const std::vector<SystemCase> cases = [] {
    std::vector<SystemCase> v;
    auto P = [](std::map<std::string, double> c, bool nr) {
      return ReferenceSolution{std::move(c), nr};
    };

    {
      SystemCase s;
      s.key = "G2(2)";
      s.pinned = "x3";
      s.vars = {"u0", "u1", "x1", "x2"};
      s.equations = {
          "9 u0 u1 x1^2 x2^2 + 2 u0 u1 x1^2 + u0 u1 x2^2 - 3 u1^2 x1^2 x2^2"
          " - 3 u1^2 x2^2 - 6 x1^2 x2^2",
          "u0 u1 x2 + 6 u1^2 x1^2 x2 + 15 u1^2 x2 - 6 u1 x1^3 + 6 u1 x1 x2^2"
          " - 48 u1 x1 x2 + 6 u1 x1 + 8 u1 x2^2 + 12 x1^2 x2",
          "4 u0 x1^2 - u0 x2^2 - 9 u1 x2^2 + 18 x1^3 x2 - 32 x1^2 x2"
          " - 18 x1 x2^3 + 48 x1 x2^2 + 6 x1 x2 - 16 x2^3",
          "9 u0 x1^2 x2^2 - 4 u0 x1^2 + 9 u1 x1^2 x2^2 - 6 x1^3 x2"
          " - 48 x1^2 x2^2 + 32 x1^2 x2 + 18 x1 x2^3 - 18 x1 x2 + 8 x2^3"};
      s.eliminations = {{"",
                         {"u0", "u1", "x2", "x1"},
                         {"x1 - 1", "9 x1 - 11"},
                         &g2_2_h1}};
      s.solutions = {
          P({{"u0", 1.0851961}, {"u1", 0.69929486}, {"x1", 0.93245951},
             {"x2", 1.0225069}, {"x3", 1}}, false),
          P({{"u0", 1}, {"u1", 1}, {"x1", 1.2222222}, {"x2", 1.2222222},
             {"x3", 1}}, true),
          P({{"u0", 0.095267235}, {"u1", 0.29761039}, {"x1", 1},
             {"x2", 0.095267235}, {"x3", 1}}, true),
          P({{"u0", 0.15539816}, {"u1", 1.8689705}, {"x1", 1},
             {"x2", 0.15539816}, {"x3", 1}}, true),
          P({{"u0", 1.0807632}, {"u1", 0.71913340}, {"x1", 1},
             {"x2", 1.0807632}, {"x3", 1}}, true)};
      s.branches = {
          {{"9 x1 - 11", "u0 - 1", "u1 - 1", "x2 - x1"}},
          {{"(x2 - 1) (875 x2^3 - 1165 x2^2 + 250 x2 - 14)", "x1 - 1",
            "u0 - x2",
            "63 u1 - 1750 x2^3 + 4080 x2^2 - 2585 x2 + 192"}}};
      s.exact_points = {
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"x1", rat(11, 9)},
           {"x2", rat(11, 9)}, {"x3", Rat(1)}},
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"x1", Rat(1)}, {"x2", Rat(1)},
           {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 1;
      v.push_back(std::move(s));
    }

    {
      SystemCase s;
      s.key = "E8(8)";
      s.pinned = "x3";
      s.vars = {"u0", "u1", "x1", "x2"};
      s.equations = {
          "14 u0 u1 x1^2 - 6 u1^2 x1^2 + 7 u0 u1 x2^2 - 15 u1^2 x2^2"
          " - 8 x1^2 x2^2 + 9 u0 u1 x1^2 x2^2 - u1^2 x1^2 x2^2",
          "48 u1^2 x1^2 + 24 u1 x1 x2 - 24 u1 x1^3 x2 + u0 u1 x2^2"
          " + 255 u1^2 x2^2 - 480 u1 x1 x2^2 + 64 x1^2 x2^2"
          " + 8 u1^2 x1^2 x2^2 + 80 u1 x2^3 + 24 u1 x1 x2^3",
          "4 u0 x1^2 + 108 u1 x1^2 + 24 x1 x2 - 320 x1^2 x2 + 72 x1^3 x2"
          " - u0 x2^2 - 135 u1 x2^2 + 480 x1 x2^2 - 160 x2^3 - 72 x1 x2^3",
          "-4 u0 x1^2 - 108 u1 x1^2 - 216 x1 x2 + 320 x1^2 x2 + 120 x1^3 x2"
          " - 480 x1^2 x2^2 + 9 u0 x1^2 x2^2 + 63 u1 x1^2 x2^2 + 80 x2^3"
          " + 216 x1 x2^3"};
      s.eliminations = {{"",
                         {"u0", "u1", "x2", "x1"},
                         {"x1 - 1", "9 x1 - 41"},
                         &e8_8_k1}};
      s.solutions = {
          P({{"u0", 1.0767925}, {"u1", 0.12842350}, {"x1", 0.46131382},
             {"x2", 0.73659849}, {"x3", 1}}, false),
          P({{"u0", 0.77844700}, {"u1", 0.17409566}, {"x1", 0.91172474},
             {"x2", 0.52532563}, {"x3", 1}}, false),
          P({{"u0", 1.1022316}, {"u1", 0.85179391}, {"x1", 4.0130840},
             {"x2", 4.0222155}, {"x3", 1}}, false),
          P({{"u0", 1}, {"u1", 1}, {"x1", 4.5555556}, {"x2", 4.5555556},
             {"x3", 1}}, true),
          P({{"u0", 0.30434783}, {"u1", 0.30434783}, {"x1", 1},
             {"x2", 0.30434783}, {"x3", 1}}, true)};
      s.nonmetric = {
          {{"u0", -1.3411877}, {"u1", -0.75642675}, {"x1", -1.2146356},
           {"x2", -4.9166783}, {"x3", 1}},
          {{"u0", -1.4503818}, {"u1", -0.54000582}, {"x1", -1.1542138},
           {"x2", -4.7370866}, {"x3", 1}}};
      s.branches = {
          {{"9 x1 - 41", "u0 - 1", "u1 - 1", "x2 - x1"}},
          {{"(x2 - 1) (23 x2 - 7)", "x1 - 1", "u0 - x2", "u1 - x2"}}};
      s.exact_points = {
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"x1", rat(41, 9)},
           {"x2", rat(41, 9)}, {"x3", Rat(1)}},
          {{"u0", rat(7, 23)}, {"u1", rat(7, 23)}, {"x1", Rat(1)},
           {"x2", rat(7, 23)}, {"x3", Rat(1)}},
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"x1", Rat(1)}, {"x2", Rat(1)},
           {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 3;
      v.push_back(std::move(s));
    }

    {
      SystemCase s;
      s.key = "F4(2)";
      s.pinned = "x1";
      s.vars = {"u0", "u1", "u2", "x2", "x3"};
      s.equations = {
          "2 u0 u1 x2^2 x3^2 + 3 u0 u1 x2^2 + 4 u0 u1 x3^2"
          " - 6 u1^2 x2^2 x3^2 - u1^2 x2^2 - 2 x2^2 x3^2",
          "12 u1^2 u2 x2^2 x3^2 + 2 u1^2 u2 x2^2 - 10 u1 u2^2 x2^2 x3^2"
          " - 5 u1 u2^2 x3^2 - 3 u1 x2^2 x3^2 + 4 u2 x2^2 x3^2",
          "u0 u2 x2^2 x3 + 9 u1 u2 x2^2 x3 + 50 u2^2 x2^2 x3 + 15 u2^2 x3"
          " + 18 u2 x2^3 x3 + 6 u2 x2^3 - 108 u2 x2^2 x3 + 6 u2 x2 x3^2"
          " - 6 u2 x2 + 9 x2^2 x3",
          "-u0 x2^2 x3 + 4 u0 x3 - 9 u1 x2^2 x3 - 20 u2 x2^2 x3 + 20 u2 x3"
          " - 36 x2^3 x3 - 18 x2^3 + 108 x2^2 x3 + 6 x2 x3^2 - 72 x2 x3"
          " + 18 x2",
          "9 u0 x2^2 - 4 u0 x3^2 + 9 u1 x2^2 - 20 u2 x3^2 + 18 x2^3 x3^2"
          " + 48 x2^3 x3 - 108 x2^2 x3 - 48 x2 x3^3 + 72 x2 x3^2 + 24 x2 x3"};
      s.eliminations = {
          {"",
           {"u0", "u1", "u2", "x2", "x3"},
           {"x3 - 1", "884 x3^3 - 1816 x3^2 + 873 x3 - 117"},
           &f4_2_h1}};
      s.solutions = {
          P({{"u0", 0.26967359}, {"u1", 0.21126932}, {"u2", 0.11447898},
             {"x1", 1}, {"x2", 1.0039269}, {"x3", 0.25594917}}, false),
          P({{"u0", 0.54675598}, {"u1", 0.28246829}, {"u2", 1.1715986},
             {"x1", 1}, {"x2", 1.022763119985955}, {"x3", 0.49280351}},
            false),
          P({{"u0", 0.72660638}, {"u1", 0.143286728}, {"u2", 0.11340863},
             {"x1", 1}, {"x2", 0.49841277}, {"x3", 1.1060677}}, false),
          P({{"u0", 1.3613346}, {"u1", 1.4496103}, {"u2", 0.15582596},
             {"x1", 1}, {"x2", 0.95415861}, {"x3", 1.3849054}}, false),
          P({{"u0", 2.4948349}, {"u1", 0.25221774}, {"u2", 0.17749081},
             {"x1", 1}, {"x2", 1.7461504}, {"x3", 2.4753269}}, false),
          P({{"u0", 0.23910517}, {"u1", 0.23910517}, {"u2", 0.11429253},
             {"x1", 1}, {"x2", 1}, {"x3", 0.23910517}}, true),
          P({{"u0", 0.38779156}, {"u1", 0.38779156}, {"u2", 1.1709075},
             {"x1", 1}, {"x2", 1}, {"x3", 0.38779156}}, true),
          P({{"u0", 1.4274019}, {"u1", 1.4274019}, {"u2", 0.15823885},
             {"x1", 1}, {"x2", 1}, {"x3", 1.4274019}}, true),
          P({{"u0", 0.27971768}, {"u1", 0.13559746}, {"u2", 0.27971768},
             {"x1", 1}, {"x2", 0.27971768}, {"x3", 1}}, true),
          P({{"u0", 0.36506883}, {"u1", 1.6532011}, {"u2", 0.36506883},
             {"x1", 1}, {"x2", 0.36506883}, {"x3", 1}}, true),
          P({{"u0", 1.1215293}, {"u1", 0.27621689}, {"u2", 1.1215293},
             {"x1", 1}, {"x2", 1.1215293}, {"x3", 1}}, true)};
      s.branches = {
          {{"884 x3^3 - 1816 x3^2 + 873 x3 - 117", "x2 - 1", "u0 - x3",
            "u1 - x3", "442 x3^2 - 739 x3 + 65 u2 + 144"}},
          {{"(x2 - 1) (2375 x2^3 - 4195 x2^2 + 1960 x2 - 272)", "x3 - 1",
            "u0 - x2", "u2 - x2",
            "102 u1 - 2375 x2^3 + 6570 x2^2 - 5305 x2 + 1008"}}};
      s.exact_points = {
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"u2", Rat(1)}, {"x1", Rat(1)},
           {"x2", Rat(1)}, {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 5;
      v.push_back(std::move(s));
    }

    {
      SystemCase s;
      s.key = "E7(5)";
      s.pinned = "x1";
      s.vars = {"u0", "u1", "u2", "x2", "x3"};
      s.equations = {
          "5 u0 u1 x2^2 x3^2 + 3 u0 u1 x2^2 + 10 u0 u1 x3^2"
          " - 15 u1^2 x2^2 x3^2 - u1^2 x2^2 - 2 x2^2 x3^2",
          "15 u1^2 u2 x2^2 x3^2 + u1^2 u2 x2^2 - 8 u1 u2^2 x2^2 x3^2"
          " - 4 u1 u2^2 x3^2 - 6 u1 x2^2 x3^2 + 2 u2 x2^2 x3^2",
          "u0 u2 x2^2 x3 + 9 u1 u2 x2^2 x3 + 104 u2^2 x2^2 x3 + 24 u2^2 x3"
          " + 36 u2 x2^3 x3 + 6 u2 x2^3 - 216 u2 x2^2 x3 + 6 u2 x2 x3^2"
          " - 6 u2 x2 + 36 x2^2 x3",
          "-u0 x2^2 x3 + 4 u0 x3 - 9 u1 x2^2 x3 - 56 u2 x2^2 x3 + 56 u2 x3"
          " - 72 x2^3 x3 - 18 x2^3 + 216 x2^2 x3 + 6 x2 x3^2 - 144 x2 x3"
          " + 18 x2",
          "9 u0 x2^2 - 4 u0 x3^2 + 9 u1 x2^2 - 56 u2 x3^2 + 36 x2^3 x3^2"
          " + 102 x2^3 x3 - 216 x2^2 x3 - 102 x2 x3^3 + 144 x2 x3^2"
          " + 78 x2 x3"};
      s.eliminations = {
          {"",
           {"u0", "u1", "u2", "x2", "x3"},
           {"x3 - 1", "2332 x3^3 - 4013 x3^2 + 1053 x3 - 72"},
           &e7_5_h1}};
      s.solutions = {
          P({{"u0", 0.96224102}, {"u1", 0.073621731}, {"u2", 0.24880488},
             {"x1", 1}, {"x2", 0.66994762}, {"x3", 1.1800573}}, false),
          P({{"u0", 0.12590407}, {"u1", 0.10843941}, {"u2", 0.24541305},
             {"x1", 1}, {"x2", 1.0005214}, {"x3", 0.12169301}}, false),
          P({{"u0", 0.22329332}, {"u1", 0.15361011}, {"u2", 1.1356290},
             {"x1", 1}, {"x2", 1.0023024}, {"x3", 0.20754861}}, false),
          P({{"u0", 1.5711912}, {"u1", 1.3666215}, {"u2", 0.31577380},
             {"x1", 1}, {"x2", 1.1132523}, {"x3", 1.5303652}}, false),
          P({{"u0", 2.1869813}, {"u1", 0.10309808}, {"u2", 0.33851600},
             {"x1", 1}, {"x2", 1.5911459}, {"x3", 2.1692738}}, false),
          P({{"u0", 0.11699044}, {"u1", 0.11699044}, {"u2", 0.24536236},
             {"x1", 1}, {"x2", 1}, {"x3", 0.11699044}}, true),
          P({{"u0", 0.18615305}, {"u1", 0.18615305}, {"u2", 1.1352348},
             {"x1", 1}, {"x2", 1}, {"x3", 0.18615305}}, true),
          P({{"u0", 1.4176970}, {"u1", 1.4176970}, {"u2", 0.30406198},
             {"x1", 1}, {"x2", 1}, {"x3", 1.4176970}}, true),
          P({{"u0", 0.37412457}, {"u1", 0.069921978}, {"u2", 0.37412457},
             {"x1", 1}, {"x2", 0.37412457}, {"x3", 1}}, true),
          P({{"u0", 0.43525576}, {"u1", 1.5741577}, {"u2", 0.43525576},
             {"x1", 1}, {"x2", 0.43525576}, {"x3", 1}}, true),
          P({{"u0", 1.0857500}, {"u1", 0.12593450}, {"u2", 1.0857500},
             {"x1", 1}, {"x2", 1.0857500}, {"x3", 1}}, true)};
      s.nonmetric = {
          {{"u0", 0.77867456}, {"u1", 0.18058466}, {"u2", 1.0076703},
           {"x1", 1}, {"x2", 2.8011127}, {"x3", -0.49217418}},
          {{"u0", 0.75556174}, {"u1", 0.56064249}, {"u2", 0.94565380},
           {"x1", 1}, {"x2", 2.8687188}, {"x3", -0.48405841}},
          {{"u0", 1.0814568}, {"u1", 0.76564465}, {"u2", 0.48544174},
           {"x1", 1}, {"x2", 3.1347988}, {"x3", -0.57150512}},
          {{"u0", 1.2615164}, {"u1", 0.13352863}, {"u2", 0.44039770},
           {"x1", 1}, {"x2", 3.1494041}, {"x3", -0.62317102}}};
      s.branches = {
          {{"2332 x3^3 - 4013 x3^2 + 1053 x3 - 72", "x2 - 1", "u0 - x3",
            "u1 - x3", "2332 x3^3 - 6345 x3^2 + 4642 x3 - 224 u2 - 405"}},
          {{"(x2 - 1) (4949 x2^3 - 9379 x2^2 + 5155 x2 - 875)", "x3 - 1",
            "u0 - x2", "u2 - x2",
            "525 u1 - 19796 x2^3 + 57312 x2^2 - 49561 x2 + 11520"}}};
      s.exact_points = {
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"u2", Rat(1)}, {"x1", Rat(1)},
           {"x2", Rat(1)}, {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 5;
      v.push_back(std::move(s));
    }

    {
      SystemCase s;
      s.key = "E8(2)";
      s.pinned = "x1";
      s.vars = {"u0", "u1", "u2", "x2", "x3"};
      s.equations = {
          "9 u0 u1 x2^2 x3^2 + 3 u0 u1 x2^2 + 18 u0 u1 x3^2"
          " - 27 u1^2 x2^2 x3^2 - u1^2 x2^2 - 2 x2^2 x3^2",
          "27 u1^2 u2 x2^2 x3^2 + u1^2 u2 x2^2 - 12 u1 u2^2 x2^2 x3^2"
          " - 6 u1 u2^2 x3^2 - 12 u1 x2^2 x3^2 + 2 u2 x2^2 x3^2",
          "u0 u2 x2^2 x3 + 9 u1 u2 x2^2 x3 + 176 u2^2 x2^2 x3 + 36 u2^2 x3"
          " + 60 u2 x2^3 x3 + 6 u2 x2^3 - 360 u2 x2^2 x3 + 6 u2 x2 x3^2"
          " - 6 u2 x2 + 72 x2^2 x3",
          "-u0 x2^2 x3 + 4 u0 x3 - 9 u1 x2^2 x3 - 104 u2 x2^2 x3 + 104 u2 x3"
          " - 120 x2^3 x3 - 18 x2^3 + 360 x2^2 x3 + 6 x2 x3^2 - 240 x2 x3"
          " + 18 x2",
          "9 u0 x2^2 - 4 u0 x3^2 + 9 u1 x2^2 - 104 u2 x3^2 + 60 x2^3 x3^2"
          " + 174 x2^3 x3 - 360 x2^2 x3 - 174 x2 x3^3 + 240 x2 x3^2"
          " + 150 x2 x3"};
      s.eliminations = {
          {"",
           {"u0", "u1", "u2", "x2", "x3"},
           {"x3 - 1", "14863 x3^3 - 23537 x3^2 + 3841 x3 - 159"},
           &e8_2_h1}};
      s.solutions = {
          P({{"u0", 1.0725485}, {"u1", 0.045012693}, {"u2", 0.31014510},
             {"x1", 1}, {"x2", 0.75504389}, {"x3", 1.2205104}}, false),
          P({{"u0", 0.073985052}, {"u1", 0.067061174}, {"u2", 0.30836161},
             {"x1", 1}, {"x2", 1.0001177}, {"x3", 0.072293790}}, false),
          P({{"u0", 0.12074935}, {"u1", 0.096083894}, {"u2", 1.0975908},
             {"x1", 1}, {"x2", 1.0004421}, {"x3", 0.11492789}}, false),
          P({{"u0", 1.5886788}, {"u1", 1.3434091}, {"u2", 0.37367555},
             {"x1", 1}, {"x2", 1.1394129}, {"x3", 1.5437649}}, false),
          P({{"u0", 2.0094538}, {"u1", 0.057685208}, {"u2", 0.39443471},
             {"x1", 1}, {"x2", 1.4757000}, {"x3", 1.9729151}}, false),
          P({{"u0", 0.070481512}, {"u1", 0.070481512}, {"u2", 0.30834779},
             {"x1", 1}, {"x2", 1}, {"x3", 0.070481512}}, true),
          P({{"u0", 1.4050939}, {"u1", 1.4050939}, {"u2", 0.35656500},
             {"x1", 1}, {"x2", 1}, {"x3", 1.4050939}}, true),
          P({{"u0", 0.10802147}, {"u1", 0.10802147}, {"u2", 1.0974869},
             {"x1", 1}, {"x2", 1}, {"x3", 0.10802147}}, true),
          P({{"u0", 0.41888766}, {"u1", 0.042734087}, {"u2", 0.41888766},
             {"x1", 1}, {"x2", 0.41888766}, {"x3", 1}}, true),
          P({{"u0", 0.46172446}, {"u1", 1.5439133}, {"u2", 0.46172446},
             {"x1", 1}, {"x2", 0.46172446}, {"x3", 1}}, true),
          P({{"u0", 1.0592027}, {"u1", 0.072250884}, {"u2", 1.0592027},
             {"x1", 1}, {"x2", 1.0592027}, {"x3", 1}}, true)};
      s.nonmetric = {
          {{"u0", 0.57479844}, {"u1", 0.091481076}, {"u2", 1.0446277},
           {"x1", 1}, {"x2", 2.2251780}, {"x3", -0.30929231}},
          {{"u0", 0.56438862}, {"u1", 0.57295621}, {"u2", 0.98344796},
           {"x1", 1}, {"x2", 2.3226977}, {"x3", -0.30556009}},
          {{"u0", 1.1366881}, {"u1", 0.071052398}, {"u2", 0.50096966},
           {"x1", 1}, {"x2", 2.5636731}, {"x3", -0.44683455}},
          {{"u0", 0.95640165}, {"u1", 0.80160322}, {"u2", 0.54149306},
           {"x1", 1}, {"x2", 2.5715323}, {"x3", -0.39992522}}};
      s.branches = {
          {{"14863 x3^3 - 23537 x3^2 + 3841 x3 - 159", "x2 - 1", "u0 - x3",
            "u1 - x3", "44589 x3^2 - 65894 x3 + 2756 u2 + 3573"}},
          {{"(x2 - 1) (864 x2^3 - 1676 x2^2 + 973 x2 - 177)", "x3 - 1",
            "u0 - x2", "u2 - x2",
            "59 u1 - 3456 x2^3 + 10160 x2^2 - 9003 x2 + 2240"}}};
      s.exact_points = {
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"u2", Rat(1)}, {"x1", Rat(1)},
           {"x2", Rat(1)}, {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 5;
      v.push_back(std::move(s));
    }

    {
      SystemCase s;
      s.key = "E7(3)";
      s.pinned = "x1";
      s.vars = {"u0", "u1", "u2", "x2", "x3"};
      s.equations = {
          "4 u0 u1 x2^2 x3^2 + 6 u0 u1 x2^2 + 8 u0 u1 x3^2"
          " - 9 u1^2 x2^2 x3^2 - u1^2 x2^2 - 3 u1^2 x3^2 - 5 x2^2 x3^2",
          "9 u1^2 u2 x2^2 x3^2 + u1^2 u2 x2^2 + 3 u1^2 u2 x3^2"
          " - 10 u1 u2^2 x2^2 x3^2 - 5 u1 u2^2 x3^2 - 3 u1 x2^2 x3^2"
          " + 5 u2 x2^2 x3^2",
          "2 u0 u2 x2^2 x3 + 108 u1 u2 x2^2 x3 + 190 u2^2 x2^2 x3"
          " + 75 u2^2 x3 + 90 u2 x2^3 x3 + 30 u2 x2^3 - 540 u2 x2^2 x3"
          " + 30 u2 x2 x3^2 - 30 u2 x2 + 45 x2^2 x3",
          "-u0 x2^2 x3 + 4 u0 x3 - 54 u1 x2^2 x3 + 36 u1 x3 - 20 u2 x2^2 x3"
          " + 20 u2 x3 - 90 x2^3 x3 - 45 x2^3 + 270 x2^2 x3 + 15 x2 x3^2"
          " - 180 x2 x3 + 45 x2",
          "9 u0 x2^2 - 4 u0 x3^2 + 36 u1 x2^2 - 36 u1 x3^2 - 20 u2 x3^2"
          " + 45 x2^3 x3^2 + 120 x2^3 x3 - 270 x2^2 x3 - 120 x2 x3^3"
          " + 180 x2 x3^2 + 60 x2 x3"};
      s.eliminations = {
          {"",
           {"u0", "u1", "u2", "x2", "x3"},
           {"x3 - 1", "5632 x3^3 - 9488 x3^2 + 3933 x3 - 477"},
           &e7_3_h1}};
      s.solutions = {
          P({{"u0", 0.30587680}, {"u1", 0.23162043}, {"u2", 0.11719295},
             {"x1", 1}, {"x2", 1.0035307}, {"x3", 0.27827971}}, false),
          P({{"u0", 0.43465453}, {"u1", 0.27733727}, {"u2", 1.4182653},
             {"x1", 1}, {"x2", 1.0086185}, {"x3", 0.37945991}}, false),
          P({{"u0", 0.33445150}, {"u1", 0.23695076}, {"u2", 0.36978513},
             {"x1", 1}, {"x2", 0.31241976}, {"x3", 1.0008636}}, false),
          P({{"u0", 0.28679936}, {"u1", 0.36605764}, {"u2", 0.14958786},
             {"x1", 1}, {"x2", 0.28763468}, {"x3", 1.0026185}}, false),
          P({{"u0", 0.77541704}, {"u1", 0.19715742}, {"u2", 0.11437270},
             {"x1", 1}, {"x2", 0.52666358}, {"x3", 1.0826430}}, false),
          P({{"u0", 1.5820396}, {"u1", 0.30622692}, {"u2", 1.3221125},
             {"x1", 1}, {"x2", 1.2303151}, {"x3", 1.3552648}}, false),
          P({{"u0", 2.3846395}, {"u1", 0.30253103}, {"u2", 0.17015362},
             {"x1", 1}, {"x2", 1.6249173}, {"x3", 2.2246116}}, false),
          P({{"u0", 0.24536236}, {"u1", 0.24536236}, {"u2", 0.11699044},
             {"x1", 1}, {"x2", 1}, {"x3", 0.24536236}}, true),
          P({{"u0", 0.30406198}, {"u1", 0.30406198}, {"u2", 1.4176970},
             {"x1", 1}, {"x2", 1}, {"x3", 0.30406198}}, true),
          P({{"u0", 1.1352348}, {"u1", 1.1352348}, {"u2", 0.18615305},
             {"x1", 1}, {"x2", 1}, {"x3", 1.1352348}}, true),
          P({{"u0", 0.28571429}, {"u1", 0.28571429}, {"u2", 0.28571429},
             {"x1", 1}, {"x2", 0.28571429}, {"x3", 1}}, true)};
      s.branches = {
          {{"5632 x3^3 - 9488 x3^2 + 3933 x3 - 477", "x2 - 1", "u0 - x3",
            "u1 - x3", "1408 x3^2 - 1948 x3 + 53 u2 + 387"}},
          {{"(x2 - 1) (7 x2 - 2)", "x3 - 1", "u0 - x2", "u1 - x2",
            "u2 - x2"}}};
      s.exact_points = {
          {{"u0", rat(2, 7)}, {"u1", rat(2, 7)}, {"u2", rat(2, 7)},
           {"x1", Rat(1)}, {"x2", rat(2, 7)}, {"x3", Rat(1)}},
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"u2", Rat(1)}, {"x1", Rat(1)},
           {"x2", Rat(1)}, {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 7;
      v.push_back(std::move(s));
    }

    {
      SystemCase s;
      s.key = "E6(3)";
      s.pinned = "x1";
      s.vars = {"u0", "u1", "u2", "u3", "x2", "x3"};
      s.equations = {
          "3 u0 u1 x2^2 x3^2 + 3 u0 u1 x2^2 + 6 u0 u1 x3^2"
          " - 9 u1^2 x2^2 x3^2 - u1^2 x2^2 - 2 x2^2 x3^2",
          "9 u1^2 u2 x2^2 x3^2 + u1^2 u2 x2^2 - 6 u1 u2^2 x2^2 x3^2"
          " - 3 u1 u2^2 x3^2 - 3 u1 x2^2 x3^2 + 2 u2 x2^2 x3^2",
          "(u2 - u3) (2 u2 u3 x2^2 + u2 u3 - x2^2)",
          "u0 u3 x2^2 x3 + 9 u1 u3 x2^2 x3 + 16 u2 u3 x2^2 x3"
          " + 52 u3^2 x2^2 x3 + 18 u3^2 x3 + 24 u3 x2^3 x3 + 6 u3 x2^3"
          " - 144 u3 x2^2 x3 + 6 u3 x2 x3^2 - 6 u3 x2 + 18 x2^2 x3",
          "-u0 x2^2 x3 + 4 u0 x3 - 9 u1 x2^2 x3 - 16 u2 x2^2 x3 + 16 u2 x3"
          " - 16 u3 x2^2 x3 + 16 u3 x3 - 48 x2^3 x3 - 18 x2^3 + 144 x2^2 x3"
          " + 6 x2 x3^2 - 96 x2 x3 + 18 x2",
          "9 u0 x2^2 - 4 u0 x3^2 + 9 u1 x2^2 - 16 u2 x3^2 - 16 u3 x3^2"
          " + 24 x2^3 x3^2 + 66 x2^3 x3 - 144 x2^2 x3 - 66 x2 x3^3"
          " + 96 x2 x3^2 + 42 x2 x3"};
      s.eliminations = {
          {"u2 - u3",
           {"u0", "u1", "u2", "u3", "x2", "x3"},
           {"x3 - 1", "17 x3 - 3", "105 x3^2 - 180 x3 + 43"},
           &e6_3_h1},
          {"2 u2 u3 x2^2 + u2 u3 - x2^2",
           {"u0", "u1", "u2", "u3", "x2", "x3"},
           {"129 x3^2 - 180 x3 + 35"},
           &e6_3_h2}};
      s.solutions = {
          P({{"u0", 0.19486610}, {"u1", 0.15924707}, {"u2", 0.17659278},
             {"u3", 0.17659278}, {"x1", 1}, {"x2", 1.0016957},
             {"x3", 0.18639713}}, false),
          P({{"u0", 0.37393672}, {"u1", 0.21919659}, {"u2", 1.1626641},
             {"u3", 1.1626641}, {"x1", 1}, {"x2", 1.0087519},
             {"x3", 0.34082479}}, false),
          P({{"u0", 0.84212893}, {"u1", 0.10872180}, {"u2", 0.178610960},
             {"u3", 0.178610960}, {"x1", 1}, {"x2", 0.58058297},
             {"x3", 1.1408077}}, false),
          P({{"u0", 1.5046268}, {"u1", 1.4017692}, {"u2", 0.23783921},
             {"u3", 0.23783921}, {"x1", 1}, {"x2", 1.0550442},
             {"x3", 1.4812096}}, false),
          P({{"u0", 2.3653572}, {"u1", 0.16989789}, {"u2", 0.26106774},
             {"u3", 0.26106774}, {"x1", 1}, {"x2", 1.6915562},
             {"x3", 2.3587740}}, false),
          P({{"u0", 0.35854650}, {"u1", 0.10372795}, {"u2", 0.42074677},
             {"u3", 0.22748595}, {"x1", 1}, {"x2", 0.34405535},
             {"x3", 1.0032864}}, false),
          P({{"u0", 0.35854650}, {"u1", 0.10372795}, {"u2", 0.22748595},
             {"u3", 0.42074677}, {"x1", 1}, {"x2", 0.34405535},
             {"x3", 1.0032864}}, false),
          P({{"u0", 0.27724447}, {"u1", 0.19525496}, {"u2", 1.4284934},
             {"u3", 0.23400191}, {"x1", 1}, {"x2", 1.0042307},
             {"x3", 0.25857941}}, false),
          P({{"u0", 0.27724447}, {"u1", 0.19525496}, {"u2", 0.23400191},
             {"u3", 1.4284934}, {"x1", 1}, {"x2", 1.0042307},
             {"x3", 0.25857941}}, false),
          P({{"u0", 1.5127009}, {"u1", 0.18053147}, {"u2", 1.3241010},
             {"u3", 0.28487472}, {"x1", 1}, {"x2", 1.2393058},
             {"x3", 1.3899161}}, false),
          P({{"u0", 1.5127009}, {"u1", 0.18053147}, {"u2", 0.28487472},
             {"u3", 1.3241010}, {"x1", 1}, {"x2", 1.2393058},
             {"x3", 1.3899161}}, false),
          P({{"u0", 0.47336119}, {"u1", 1.5881009}, {"u2", 0.25625661},
             {"u3", 0.55478019}, {"x1", 1}, {"x2", 0.44569962},
             {"x3", 1.0082270}}, false),
          P({{"u0", 0.47336119}, {"u1", 1.5881009}, {"u2", 0.55478019},
             {"u3", 0.25625661}, {"x1", 1}, {"x2", 0.44569962},
             {"x3", 1.0082270}}, false),
          P({{"u0", 0.28690600}, {"u1", 0.28690600}, {"u2", 1.1618207},
             {"u3", 1.1618207}, {"x1", 1}, {"x2", 1}, {"x3", 0.28690600}},
            true),
          P({{"u0", 1.4273797}, {"u1", 1.4273797}, {"u2", 0.23352814},
             {"u3", 0.23352814}, {"x1", 1}, {"x2", 1}, {"x3", 1.4273797}},
            true),
          P({{"u0", 0.23352814}, {"u1", 0.23352814}, {"u2", 1.4273797},
             {"u3", 0.23352814}, {"x1", 1}, {"x2", 1}, {"x3", 0.23352814}},
            true),
          P({{"u0", 0.23352814}, {"u1", 0.23352814}, {"u2", 0.23352814},
             {"u3", 1.4273797}, {"x1", 1}, {"x2", 1}, {"x3", 0.23352814}},
            true),
          P({{"u0", 1.1618207}, {"u1", 1.1618207}, {"u2", 0.28690600},
             {"u3", 1.1618207}, {"x1", 1}, {"x2", 1}, {"x3", 1.1618207}},
            true),
          P({{"u0", 1.1618207}, {"u1", 1.1618207}, {"u2", 1.1618207},
             {"u3", 0.28690600}, {"x1", 1}, {"x2", 1}, {"x3", 1.1618207}},
            true),
          P({{"u0", 0.17647059}, {"u1", 0.17647059}, {"u2", 0.17647059},
             {"u3", 0.17647059}, {"x1", 1}, {"x2", 1}, {"x3", 0.17647059}},
            true),
          P({{"u0", 0.32447061}, {"u1", 0.10305040}, {"u2", 0.32447061},
             {"u3", 0.32447061}, {"x1", 1}, {"x2", 0.32447061}, {"x3", 1}},
            true),
          P({{"u0", 0.40093736}, {"u1", 1.6130682}, {"u2", 0.40093736},
             {"u3", 0.40093736}, {"x1", 1}, {"x2", 0.40093736}, {"x3", 1}},
            true),
          P({{"u0", 1.1084478}, {"u1", 0.19842410}, {"u2", 1.1084478},
             {"u3", 1.1084478}, {"x1", 1}, {"x2", 1.1084478}, {"x3", 1}},
            true)};
      s.nonmetric = {
          {{"u0", 1.3387553}, {"u1", 0.24195763}, {"u2", 0.34572988},
           {"u3", 0.34572988}, {"x1", 1}, {"x2", 3.8653526},
           {"x3", -0.80052360}},
          {{"u0", 1.1975502}, {"u1", 0.69035070}, {"u2", 0.37629335},
           {"u3", 0.37629335}, {"x1", 1}, {"x2", 3.8406206},
           {"x3", -0.75956931}},
          {{"u0", 1.0325160}, {"u1", 0.34059800}, {"u2", 1.1055012},
           {"u3", 0.435626061}, {"x1", 1}, {"x2", 3.6160749},
           {"x3", -0.71677982}},
          {{"u0", 1.0325160}, {"u1", 0.34059800}, {"u2", 0.435626061},
           {"u3", 1.1055012}, {"x1", 1}, {"x2", 3.6160749},
           {"x3", -0.71677982}},
          {{"u0", 1.0018570}, {"u1", 0.49052811}, {"u2", 1.0713232},
           {"u3", 0.44960349}, {"x1", 1}, {"x2", 3.6248195},
           {"x3", -0.70718824}},
          {{"u0", 1.0018570}, {"u1", 0.49052811}, {"u2", 0.44960349},
           {"u3", 1.0713232}, {"x1", 1}, {"x2", 3.6248195},
           {"x3", -0.70718824}}};
      s.branches = {
          {{"105 x3^2 - 180 x3 + 43", "x2 - 1", "u0 - x3", "u1 - x3",
            "35 x3 + 43 u2 - 60", "u3 - u2"}},
          {{"17 x3 - 3", "x2 - 1", "u0 - x3", "u1 - x3", "u2 - x3",
            "u3 - x3"}},
          {{"(x2 - 1) (319 x2^3 - 585 x2^2 + 298 x2 - 46)", "x3 - 1",
            "u0 - x2", "u2 - x2", "u3 - x2",
            "23 u1 - 638 x2^3 + 1808 x2^2 - 1513 x2 + 320"}},
          {{"129 x3^2 - 180 x3 + 35", "x2 - 1", "u0 - x3", "u1 - x3",
            "24 u3 x3 + 105 u3^2 - 180 u3 + 35",
            "8 x3 + 35 u2 + 35 u3 - 60"}}};
      s.exact_points = {
          {{"u0", rat(3, 17)}, {"u1", rat(3, 17)}, {"u2", rat(3, 17)},
           {"u3", rat(3, 17)}, {"x1", Rat(1)}, {"x2", Rat(1)},
           {"x3", rat(3, 17)}},
          {{"u0", Rat(1)}, {"u1", Rat(1)}, {"u2", Rat(1)}, {"u3", Rat(1)},
           {"x1", Rat(1)}, {"x2", Rat(1)}, {"x3", Rat(1)}}};
      s.distinct_non_naturally_reductive = 9;
      v.push_back(std::move(s));
    }

    return v;
  }();
  return cases;
}

inline const SystemCase& system_case_by_key(const std::string& key) {
  for (const SystemCase& c : system_cases())
    if (c.key == key) return c;
  throw error("unknown system case: " + key);
}

// Closed-form degenerate solutions on E6(3) whose coordinates live in
// Q(sqrt(3585)); each coordinate is stored as a pair (a, b) meaning
// a + b*sqrt(3585).
struct QuadraticPoint {
  std::map<std::string, std::pair<Rat, Rat>> coords;
};

inline const std::vector<QuadraticPoint>& e6_sqrt3585_points() {
  static const std::vector<QuadraticPoint> pts = [] {
    std::vector<QuadraticPoint> v;
    auto lo129 = std::pair<Rat, Rat>{rat(30, 43), rat(-1, 129)};
    auto hi129 = std::pair<Rat, Rat>{rat(30, 43), rat(1, 129)};
    auto lo105 = std::pair<Rat, Rat>{rat(6, 7), rat(-1, 105)};
    auto hi105 = std::pair<Rat, Rat>{rat(6, 7), rat(1, 105)};
    auto one = std::pair<Rat, Rat>{Rat(1), Rat(0)};
    // u2 != u3 family: u0 = u1 = x3 equals one of (90 +- s)/129 and the
    // off-diagonal coordinate equals the conjugate-scaled (90 -+ s)/105.
    v.push_back({{{"u0", lo129}, {"u1", lo129}, {"u2", hi105},
                  {"u3", lo129}, {"x1", one}, {"x2", one}, {"x3", lo129}}});
    v.push_back({{{"u0", lo129}, {"u1", lo129}, {"u2", lo129},
                  {"u3", hi105}, {"x1", one}, {"x2", one}, {"x3", lo129}}});
    v.push_back({{{"u0", hi129}, {"u1", hi129}, {"u2", lo105},
                  {"u3", hi129}, {"x1", one}, {"x2", one}, {"x3", hi129}}});
    v.push_back({{{"u0", hi129}, {"u1", hi129}, {"u2", hi129},
                  {"u3", lo105}, {"x1", one}, {"x2", one}, {"x3", hi129}}});
    // u2 = u3 family: u0 = u1 = x3 equals (90 -+ s)/105 and u2 = u3 equals
    // (90 +- s)/129.
    v.push_back({{{"u0", lo105}, {"u1", lo105}, {"u2", hi129},
                  {"u3", hi129}, {"x1", one}, {"x2", one}, {"x3", lo105}}});
    v.push_back({{{"u0", hi105}, {"u1", hi105}, {"u2", lo129},
                  {"u3", lo129}, {"x1", one}, {"x2", one}, {"x3", hi105}}});
    return v;
  }();
  return pts;
}

}  // namespace einmetric::fixtures
