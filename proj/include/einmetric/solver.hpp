#pragma once
// Multi-start damped Newton solver for the Einstein systems.
//
// Starting points are drawn log-uniformly from a coordinate box, (0.01, 5]
// per variable by default, optionally with independent random signs so that
// sign-mixed real solutions are reachable too.  Each start runs a damped
// Newton iteration with backtracking line search on the squared residual;
// non-convergent starts are discarded.  Converged points are polished in
// extended precision (256-bit significand) until the largest equation value
// drops below the refinement target, then deduplicated by coordinate
// distance.  The whole pipeline is deterministic for a fixed seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ricci.hpp"

namespace einmetric {

inline constexpr mp_bitcnt_t solver_precision = 256;

struct SolverBox {
  double lo = 0.01;        // magnitude range, sampled log-uniformly
  double hi = 5.0;
  bool with_signs = false; // flip each coordinate's sign with probability 1/2
};

struct SolverOptions {
  SolverBox box;
  int starts = 2000;
  std::uint64_t seed = 1;
  int max_iterations = 120;
  double accept_residual = 1e-9;   // double-precision acceptance gate
  double refine_residual = 1e-12;  // required after extended-precision polish
  double dedup_distance = 1e-6;    // max-coordinate distance
  // Clearing denominators adjoins components on the coordinate hyperplanes
  // (the exact route removes them by saturation); converged points with a
  // coordinate this small are those artifacts and are discarded.
  double min_coordinate = 1e-3;
};

struct CandidateSolution {
  std::vector<mpf_class> coords;  // aligned with EinsteinSystem::vars
  std::string source = "newton";
  double residual = 0;  // max |equation| at the stored point
  bool refined = false;

  std::vector<double> coord_doubles() const {
    std::vector<double> v;
    v.reserve(coords.size());
    for (const auto& c : coords) v.push_back(c.get_d());
    return v;
  }
};

inline bool all_positive(const CandidateSolution& c) {
  for (const auto& v : c.coords)
    if (v <= 0) return false;
  return true;
}

// Full metric from a candidate: every module's variable, pinned one at 1.
inline std::map<std::string, double> candidate_metric(const EinsteinSystem& sys,
                                                      const Decomposition& D,
                                                      const CandidateSolution& c) {
  std::vector<std::string> names = metric_variable_names(D);
  std::map<std::string, double> y;
  for (int m = 0; m < static_cast<int>(names.size()); ++m) {
    int j = sys.var_of_module[m];
    y[names[m]] = (j < 0) ? 1.0 : c.coords[j].get_d();
  }
  return y;
}

namespace detail {

// Term list with double coefficients for the inner Newton loop.
struct CompiledPoly {
  std::vector<double> coef;
  std::vector<Mono> mono;
};

inline CompiledPoly compile(const Poly& p) {
  CompiledPoly c;
  for (const auto& [m, v] : p.terms) {
    for (int e : m) require(e >= 0, "solver expects polynomial equations");
    c.coef.push_back(to_scalar<double>(v));
    c.mono.push_back(m);
  }
  return c;
}

inline double ceval(const CompiledPoly& p, const std::vector<double>& x) {
  double acc = 0;
  for (std::size_t t = 0; t < p.coef.size(); ++t) {
    double v = p.coef[t];
    const Mono& m = p.mono[t];
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) v *= x[i];
    acc += v;
  }
  return acc;
}

inline double abs_of(double x) { return std::fabs(x); }
inline mpf_class abs_of(const mpf_class& x) { return abs(x); }

// In-place Gaussian elimination with partial pivoting; false when singular.
template <class S>
bool solve_linear(std::vector<std::vector<S>>& a, std::vector<S>& b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (abs_of(a[r][col]) > abs_of(a[piv][col])) piv = r;
    if (!(abs_of(a[piv][col]) > S(0))) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      S f = a[r][col] / a[col][col];
      if (f == S(0)) continue;
      for (int c2 = col; c2 < n; ++c2) a[r][c2] -= f * a[col][c2];
      b[r] -= f * b[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int r = col + 1; r < n; ++r) b[col] -= a[col][r] * b[r];
    b[col] /= a[col][col];
  }
  for (const S& v : b)
    if (!(v == v)) return false;  // reject NaN from overflow
  return true;
}

struct NewtonProblem {
  std::vector<CompiledPoly> f;
  std::vector<std::vector<CompiledPoly>> jac;  // jac[i][j] = d f_i / d x_j
  const std::vector<Poly>* exact = nullptr;
  std::vector<std::vector<Poly>> exact_jac;
};

inline NewtonProblem make_problem(const EinsteinSystem& sys) {
  NewtonProblem prob;
  prob.exact = &sys.equations;
  const int n = static_cast<int>(sys.vars.size());
  require(static_cast<int>(sys.equations.size()) == n, "system is not square");
  for (const Poly& eq : sys.equations) {
    prob.f.push_back(compile(eq));
    std::vector<CompiledPoly> row;
    std::vector<Poly> erow;
    for (int j = 0; j < n; ++j) {
      Poly d = eq.derivative(j);
      row.push_back(compile(d));
      erow.push_back(std::move(d));
    }
    prob.jac.push_back(std::move(row));
    prob.exact_jac.push_back(std::move(erow));
  }
  return prob;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

inline double sum_sq(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

// Damped Newton from one start; true when the acceptance gate is met.
inline bool newton_from(const NewtonProblem& prob, std::vector<double>& x,
                        const SolverOptions& opt) {
  const int n = static_cast<int>(x.size());
  std::vector<double> fx(n), fn(n), xn(n);
  auto eval_all = [&](const std::vector<double>& p, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      out[i] = ceval(prob.f[i], p);
      if (!std::isfinite(out[i])) return false;
    }
    return true;
  };
  if (!eval_all(x, fx)) return false;
  double s = sum_sq(fx);
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (max_abs(fx) < opt.accept_residual) return true;
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> step(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = ceval(prob.jac[i][j], x);
      step[i] = -fx[i];
    }
    if (!solve_linear(a, step)) return false;
    bool moved = false;
    for (double t = 1.0; t > 1e-7; t /= 2) {
      for (int i = 0; i < n; ++i) xn[i] = x[i] + t * step[i];
      if (!eval_all(xn, fn)) continue;
      double sn = sum_sq(fn);
      if (sn <= (1 - 1e-4 * t) * s) {
        x = xn;
        fx = fn;
        s = sn;
        moved = true;
        break;
      }
    }
    if (!moved || max_abs(x) > 1e6) return false;
  }
  return max_abs(fx) < opt.accept_residual;
}

inline mpf_class big(const Rat& r) {
  mpf_class v(0, solver_precision);
  mpf_set_q(v.get_mpf_t(), r.get_mpq_t());
  return v;
}

inline mpf_class eval_big(const Poly& p, const std::vector<mpf_class>& at) {
  mpf_class acc(0, solver_precision);
  for (const auto& [m, c] : p.terms) {
    mpf_class t = big(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= at[i];
    acc += t;
  }
  return acc;
}

// Newton polish at 256-bit precision; true when the target residual is met.
inline bool polish(const NewtonProblem& prob, std::vector<mpf_class>& x,
                   double target, double& residual) {
  const int n = static_cast<int>(x.size());
  const std::vector<Poly>& eqs = *prob.exact;
  std::vector<mpf_class> fx(n, mpf_class(0, solver_precision));
  auto eval_residual = [&] {
    double r = 0;
    for (int i = 0; i < n; ++i) {
      fx[i] = eval_big(eqs[i], x);
      r = std::max(r, std::fabs(fx[i].get_d()));
    }
    return r;
  };
  residual = eval_residual();
  for (int it = 0; it < 8 && residual > target * 1e-6; ++it) {
    std::vector<std::vector<mpf_class>> a(
        n, std::vector<mpf_class>(n, mpf_class(0, solver_precision)));
    std::vector<mpf_class> step(n, mpf_class(0, solver_precision));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = eval_big(prob.exact_jac[i][j], x);
      step[i] = -fx[i];
    }
    if (!solve_linear(a, step)) break;
    for (int i = 0; i < n; ++i) x[i] += step[i];
    double next = eval_residual();
    if (next >= residual) break;
    residual = next;
  }
  return residual < target;
}

}  // namespace detail

// Multi-start damped Newton over the square Einstein system.  Returns the
// deduplicated refined candidates, sorted by coordinates; every returned
// candidate has residual below opt.refine_residual.
inline std::vector<CandidateSolution> newton_solve(const EinsteinSystem& sys,
                                                   const SolverOptions& opt = {}) {
  require(opt.box.lo > 0 && opt.box.hi > opt.box.lo, "solver box is empty");
  const int n = static_cast<int>(sys.vars.size());
  detail::NewtonProblem prob = detail::make_problem(sys);
  std::mt19937_64 rng(opt.seed);
  auto unit = [&] {  // [0, 1), fixed 53-bit construction
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  };
  const double log_lo = std::log(opt.box.lo), log_hi = std::log(opt.box.hi);

  std::vector<std::vector<double>> coarse;
  for (int s = 0; s < opt.starts; ++s) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
      double u = unit();
      x[j] = std::exp(log_hi - u * (log_hi - log_lo));  // (lo, hi], u=0 -> hi
      if (opt.box.with_signs && (rng() & 1)) x[j] = -x[j];
    }
    if (!detail::newton_from(prob, x, opt)) continue;
    bool artifact = false;
    for (int j = 0; j < n; ++j)
      if (std::fabs(x[j]) < opt.min_coordinate) artifact = true;
    if (artifact) continue;
    bool dup = false;
    for (const auto& k : coarse) {
      double d = 0;
      for (int j = 0; j < n; ++j) d = std::max(d, std::fabs(k[j] - x[j]));
      if (d < opt.dedup_distance) {
        dup = true;
        break;
      }
    }
    if (!dup) coarse.push_back(std::move(x));
  }

  std::vector<CandidateSolution> out;
  for (const auto& p : coarse) {
    CandidateSolution cand;
    cand.coords.assign(n, mpf_class(0, solver_precision));
    for (int j = 0; j < n; ++j) cand.coords[j] = p[j];
    if (!detail::polish(prob, cand.coords, opt.refine_residual, cand.residual))
      continue;  // singular or stalled polish: treat as non-convergent
    cand.refined = true;
    bool dup = false;
    for (const auto& k : out) {
      double d = 0;
      for (int j = 0; j < n; ++j)
        d = std::max(d, std::fabs(k.coords[j].get_d() - cand.coords[j].get_d()));
      if (d < opt.dedup_distance) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(),
            [](const CandidateSolution& a, const CandidateSolution& b) {
              return a.coord_doubles() < b.coord_doubles();
            });
  return out;
}

}  // namespace einmetric
