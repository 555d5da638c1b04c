#pragma once
// Triangular solution families of an Einstein system.  A family is a list of
// relations: the first is univariate in the "gate" variable, and each later
// one determines exactly one new variable (linearly, or quadratically when
// the gate generator itself is a root).  Families are verified symbolically
// over Q[g]/(gate) and enumerated numerically through real gate roots.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "ricci.hpp"
#include "types.hpp"
#include "univariate.hpp"

namespace einmetric {

struct FamilySolution {
  std::string gate_var;
  UPoly gate;
  // One entry per branch fork; each maps system variable index to its
  // expression in Q[g]/(gate).
  std::vector<std::vector<UPoly>> assignments;
};

inline FamilySolution solve_family(const EinsteinSystem& sys,
                                   const std::vector<std::string>& relations) {
  require(!relations.empty(), "family needs at least one relation");
  const int n = static_cast<int>(sys.vars.size());
  std::vector<Poly> rel;
  for (const auto& s : relations) rel.push_back(parse_poly(sys.vars, s));

  int gate_var = -1;
  for (const auto& [m, c] : rel[0].terms)
    for (int i = 0; i < n; ++i)
      if (m[i] != 0) {
        require(gate_var == -1 || gate_var == i, "gate relation is not univariate");
        gate_var = i;
      }
  require(gate_var >= 0, "gate relation is constant");

  FamilySolution out;
  out.gate_var = sys.vars[gate_var];
  out.gate = to_univariate(rel[0], gate_var);
  ModRing R(out.gate);

  struct Slot {
    bool set = false;
    UPoly expr;
  };
  std::vector<std::vector<Slot>> forks(1, std::vector<Slot>(n));
  forks[0][gate_var] = {true, R.gen()};

  for (size_t ri = 1; ri < rel.size(); ++ri) {
    const Poly& r = rel[ri];
    std::vector<std::vector<Slot>> next;
    for (const auto& asg : forks) {
      int dep = -1, dmax = 0;
      for (const auto& [m, c] : r.terms)
        for (int i = 0; i < n; ++i)
          if (m[i] != 0 && !asg[i].set) {
            require(dep == -1 || dep == i, "relation has two unknowns");
            dep = i;
            dmax = std::max(dmax, m[i]);
          }
      require(dep >= 0, "relation introduces no unknown");
      require(dmax >= 1 && dmax <= 2, "relation degree in its unknown exceeds two");

      // Coefficients of the powers of the unknown, as ring elements.
      std::vector<UPoly> coef(dmax + 1, R.zero());
      for (const auto& [m, c] : r.terms) {
        Mono mm = m;
        int e = mm[dep];
        mm[dep] = 0;
        UPoly t = R.constant(c);
        for (int i = 0; i < n; ++i) {
          if (mm[i] == 0) continue;
          require(asg[i].set, "relation references an unassigned variable");
          t = R.mul(t, R.pow(asg[i].expr, mm[i]));
        }
        coef[e] = R.add(coef[e], t);
      }

      if (dmax == 1) {
        UPoly v = R.mul(uneg(coef[0]), R.inverse(coef[1]));
        auto a = asg;
        a[dep] = {true, std::move(v)};
        next.push_back(std::move(a));
      } else {
        // The gate generator must be one root; the other follows from the
        // root sum, staying polynomial in g.
        UPoly g = R.gen();
        UPoly at_g = R.add(R.mul(coef[2], R.mul(g, g)), R.add(R.mul(coef[1], g), coef[0]));
        require(uis_zero(at_g), "quadratic relation does not vanish at the gate generator");
        UPoly sum = R.mul(uneg(coef[1]), R.inverse(coef[2]));
        auto a = asg;
        a[dep] = {true, g};
        next.push_back(a);
        auto b = asg;
        b[dep] = {true, R.sub(sum, g)};
        next.push_back(std::move(b));
      }
    }
    forks = std::move(next);
  }

  for (const auto& asg : forks) {
    std::vector<UPoly> full(n);
    for (int i = 0; i < n; ++i) full[i] = asg[i].set ? asg[i].expr : ModRing(out.gate).one();
    out.assignments.push_back(std::move(full));
  }
  return out;
}

// Real points of the family with every coordinate positive.  Gate roots are
// refined to within `width`; coordinates are exact rational images of the
// refined root, keyed by variable name with the normalized variable at 1.
struct FamilyPoint {
  std::map<std::string, Rat> coords;
};

inline std::vector<FamilyPoint> family_points(const EinsteinSystem& sys,
                                              const std::string& pinned,
                                              const FamilySolution& fam,
                                              const Rat& width) {
  std::vector<FamilyPoint> out;
  for (const Rat& root : real_roots(fam.gate, width)) {
    for (const auto& asg : fam.assignments) {
      FamilyPoint p;
      bool positive = true;
      for (size_t i = 0; i < sys.vars.size(); ++i) {
        Rat v = ueval(asg[i], root);
        if (v <= 0) positive = false;
        p.coords[sys.vars[i]] = v;
      }
      p.coords[pinned] = Rat(1);
      if (positive) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace einmetric
