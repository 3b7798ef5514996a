#include "triobj/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triobj {

LpProblem LpProblem::box(std::vector<double> objective,
                         std::vector<ConstraintRow> rows) {
  LpProblem p;
  p.lower.assign(objective.size(), 0.0);
  p.upper.assign(objective.size(), 1.0);
  p.objective = std::move(objective);
  p.rows = std::move(rows);
  return p;
}

LpProblem relaxation(const Instance& inst, std::vector<double> objective) {
  return LpProblem::box(std::move(objective), inst.constraints);
}

namespace {

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

constexpr double kPivotTol = 1e-9;
constexpr int kRefactorEvery = 64;

struct Tableau {
  int n = 0;      // structural variables
  int m = 0;      // rows
  int nv = 0;     // structural + slack + artificial
  std::vector<std::vector<std::pair<int, double>>> cols;  // per variable
  std::vector<double> lo, hi;
  std::vector<double> rhs;
  std::vector<double> cost;           // phase-dependent
  std::vector<VarState> state;
  std::vector<double> nb_value;       // value of nonbasic variable
  std::vector<int> basic;             // variable per basis row
  std::vector<double> xb;             // value per basis row
  std::vector<double> binv;           // m*m, row-major

  double& bi(int r, int c) { return binv[static_cast<std::size_t>(r * m + c)]; }

  bool refactor() {
    // Dense Gauss-Jordan on the basis matrix; desk-scale rows keep this cheap.
    if (m == 0) return true;
    std::vector<double> mat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i)
      for (const auto& [r, a] : cols[static_cast<std::size_t>(basic[static_cast<std::size_t>(i)])])
        mat[static_cast<std::size_t>(r * m + i)] = a;
    binv.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) bi(i, i) = 1.0;
    for (int c = 0; c < m; ++c) {
      int piv = -1;
      double best = kPivotTol;
      for (int r = c; r < m; ++r) {
        const double v = std::fabs(mat[static_cast<std::size_t>(r * m + c)]);
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (piv < 0) return false;
      if (piv != c) {
        for (int j = 0; j < m; ++j) {
          std::swap(mat[static_cast<std::size_t>(piv * m + j)], mat[static_cast<std::size_t>(c * m + j)]);
          std::swap(bi(piv, j), bi(c, j));
        }
      }
      const double d = mat[static_cast<std::size_t>(c * m + c)];
      for (int j = 0; j < m; ++j) {
        mat[static_cast<std::size_t>(c * m + j)] /= d;
        bi(c, j) /= d;
      }
      for (int r = 0; r < m; ++r) {
        if (r == c) continue;
        const double f = mat[static_cast<std::size_t>(r * m + c)];
        if (f == 0.0) continue;
        for (int j = 0; j < m; ++j) {
          mat[static_cast<std::size_t>(r * m + j)] -= f * mat[static_cast<std::size_t>(c * m + j)];
          bi(r, j) -= f * bi(c, j);
        }
      }
    }
    recompute_basics();
    return true;
  }

  void recompute_basics() {
    std::vector<double> r = rhs;
    for (int v = 0; v < nv; ++v) {
      if (state[static_cast<std::size_t>(v)] == VarState::Basic) continue;
      const double val = nb_value[static_cast<std::size_t>(v)];
      if (val == 0.0) continue;
      for (const auto& [row, a] : cols[static_cast<std::size_t>(v)])
        r[static_cast<std::size_t>(row)] -= a * val;
    }
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      for (int j = 0; j < m; ++j) s += bi(i, j) * r[static_cast<std::size_t>(j)];
      xb[static_cast<std::size_t>(i)] = s;
    }
  }
};

}  // namespace

LpResult SimplexSolver::solve(const LpProblem& prob) {
  const int n = static_cast<int>(prob.objective.size());
  const int m = static_cast<int>(prob.rows.size());
  LpResult res;

  Tableau t;
  t.n = n;
  t.m = m;
  t.lo = prob.lower.empty() ? std::vector<double>(static_cast<std::size_t>(n), 0.0) : prob.lower;
  t.hi = prob.upper.empty() ? std::vector<double>(static_cast<std::size_t>(n), 1.0) : prob.upper;
  if (static_cast<int>(t.lo.size()) != n || static_cast<int>(t.hi.size()) != n)
    throw std::invalid_argument("solve_lp: bound arrays must match objective length");
  for (int j = 0; j < n; ++j) {
    if (!(t.lo[static_cast<std::size_t>(j)] <= t.hi[static_cast<std::size_t>(j)]))
      throw std::invalid_argument("solve_lp: lower bound exceeds upper bound");
    if (!std::isfinite(t.lo[static_cast<std::size_t>(j)]) ||
        !std::isfinite(t.hi[static_cast<std::size_t>(j)]))
      throw std::invalid_argument("solve_lp: structural bounds must be finite");
  }

  t.cols.assign(static_cast<std::size_t>(n + m), {});
  t.rhs.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& row = prob.rows[static_cast<std::size_t>(i)];
    t.rhs[static_cast<std::size_t>(i)] = row.rhs;
    for (const auto& [idx, a] : row.coeffs) {
      if (idx < 0 || idx >= n)
        throw std::invalid_argument("solve_lp: row references variable out of range");
      t.cols[static_cast<std::size_t>(idx)].emplace_back(i, a);
    }
  }
  // Slack for row i at n+i; its bounds encode the sense.
  for (int i = 0; i < m; ++i) {
    t.cols[static_cast<std::size_t>(n + i)] = {{i, 1.0}};
    switch (prob.rows[static_cast<std::size_t>(i)].sense) {
      case Sense::Le: t.lo.push_back(0.0);  t.hi.push_back(kInf); break;
      case Sense::Ge: t.lo.push_back(-kInf); t.hi.push_back(0.0); break;
      case Sense::Eq: t.lo.push_back(0.0);  t.hi.push_back(0.0); break;
    }
  }
  t.nv = n + m;
  t.state.assign(static_cast<std::size_t>(t.nv), VarState::AtLower);
  t.nb_value.assign(static_cast<std::size_t>(t.nv), 0.0);
  for (int j = 0; j < n; ++j)
    t.nb_value[static_cast<std::size_t>(j)] = t.lo[static_cast<std::size_t>(j)];

  // Start from the slack basis; rows whose residual cannot be carried by the
  // slack get a phase-1 artificial instead.
  t.basic.resize(static_cast<std::size_t>(m));
  t.xb.resize(static_cast<std::size_t>(m));
  std::vector<double> residual = t.rhs;
  for (int j = 0; j < n; ++j) {
    const double v = t.nb_value[static_cast<std::size_t>(j)];
    if (v == 0.0) continue;
    for (const auto& [row, a] : t.cols[static_cast<std::size_t>(j)])
      residual[static_cast<std::size_t>(row)] -= a * v;
  }
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    const int sv = n + i;
    const double r = residual[static_cast<std::size_t>(i)];
    const double slo = t.lo[static_cast<std::size_t>(sv)];
    const double shi = t.hi[static_cast<std::size_t>(sv)];
    if (r >= slo - kFeasibilityTol && r <= shi + kFeasibilityTol) {
      t.basic[static_cast<std::size_t>(i)] = sv;
      t.state[static_cast<std::size_t>(sv)] = VarState::Basic;
      t.xb[static_cast<std::size_t>(i)] = std::clamp(r, slo, shi);
      continue;
    }
    const double beta = r < slo ? slo : shi;
    t.state[static_cast<std::size_t>(sv)] = r < slo ? VarState::AtLower : VarState::AtUpper;
    t.nb_value[static_cast<std::size_t>(sv)] = beta;
    const double rho = r - beta;
    t.cols.push_back({{i, rho > 0 ? 1.0 : -1.0}});
    t.lo.push_back(0.0);
    t.hi.push_back(kInf);
    t.state.push_back(VarState::Basic);
    t.nb_value.push_back(0.0);
    t.basic[static_cast<std::size_t>(i)] = t.nv;
    t.xb[static_cast<std::size_t>(i)] = std::fabs(rho);
    ++t.nv;
    ++artificials;
  }

  const int max_pivots = 50 * (n + m);
  const int dantzig_pivots = max_pivots / 2;
  int pivots = 0;
  int since_refactor = 0;

  if (!t.refactor()) return res;  // singular start: numerical failure

  std::vector<double> y(static_cast<std::size_t>(m));
  std::vector<double> w(static_cast<std::size_t>(m));

  const auto run_phase = [&]() -> LpStatus {
    while (true) {
      if (pivots >= max_pivots) return LpStatus::IterationLimit;
      // y = c_B B^-1
      for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) {
          const double cb = t.cost[static_cast<std::size_t>(t.basic[static_cast<std::size_t>(i)])];
          if (cb != 0.0) s += cb * t.bi(i, j);
        }
        y[static_cast<std::size_t>(j)] = s;
      }
      // Pricing: Dantzig with lowest-index ties early, Bland afterwards.
      const bool bland = pivots >= dantzig_pivots;
      int enter = -1;
      double best_score = 0.0;
      for (int v = 0; v < t.nv; ++v) {
        const auto st = t.state[static_cast<std::size_t>(v)];
        if (st == VarState::Basic) continue;
        if (t.lo[static_cast<std::size_t>(v)] == t.hi[static_cast<std::size_t>(v)]) continue;
        double d = t.cost[static_cast<std::size_t>(v)];
        for (const auto& [row, a] : t.cols[static_cast<std::size_t>(v)])
          d -= a * y[static_cast<std::size_t>(row)];
        const bool viol = (st == VarState::AtLower && d < -kReducedCostTol) ||
                          (st == VarState::AtUpper && d > kReducedCostTol);
        if (!viol) continue;
        if (bland) {
          enter = v;
          break;
        }
        if (std::fabs(d) > best_score + 1e-15) {
          best_score = std::fabs(d);
          enter = v;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      // w = B^-1 a_enter
      std::fill(w.begin(), w.end(), 0.0);
      for (const auto& [row, a] : t.cols[static_cast<std::size_t>(enter)])
        for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] += t.bi(i, row) * a;

      const int dir = t.state[static_cast<std::size_t>(enter)] == VarState::AtLower ? 1 : -1;
      double t_best = t.hi[static_cast<std::size_t>(enter)] - t.lo[static_cast<std::size_t>(enter)];
      int leave_pos = -1;       // -1 means bound flip
      int leave_var = enter;
      bool leave_to_upper = false;
      for (int i = 0; i < m; ++i) {
        const double wi = w[static_cast<std::size_t>(i)];
        if (std::fabs(wi) <= kPivotTol) continue;
        const double delta = -dir * wi;  // rate of change of x_B[i]
        const int bv = t.basic[static_cast<std::size_t>(i)];
        double ti;
        bool to_upper;
        if (delta > 0) {
          const double cap = t.hi[static_cast<std::size_t>(bv)];
          if (!std::isfinite(cap)) continue;
          ti = (cap - t.xb[static_cast<std::size_t>(i)]) / delta;
          to_upper = true;
        } else {
          const double cap = t.lo[static_cast<std::size_t>(bv)];
          if (!std::isfinite(cap)) continue;
          ti = (t.xb[static_cast<std::size_t>(i)] - cap) / (-delta);
          to_upper = false;
        }
        if (ti < 0) ti = 0;
        if (ti < t_best - 1e-12) {
          t_best = ti;
          leave_pos = i;
          leave_var = bv;
          leave_to_upper = to_upper;
        } else if (ti <= t_best + 1e-12 && bv < leave_var) {
          // Near-tie: lowest variable index leaves, which keeps Bland's rule
          // cycling-free and the pivot sequence reproducible.
          t_best = std::min(t_best, ti);
          leave_pos = i;
          leave_var = bv;
          leave_to_upper = to_upper;
        }
      }
      if (!std::isfinite(t_best)) return LpStatus::Unbounded;

      // Move the basics, then either flip the entering bound or pivot.
      for (int i = 0; i < m; ++i) {
        const double wi = w[static_cast<std::size_t>(i)];
        if (wi != 0.0) t.xb[static_cast<std::size_t>(i)] -= dir * wi * t_best;
      }
      const double enter_val =
          dir > 0 ? t.lo[static_cast<std::size_t>(enter)] + t_best
                  : t.hi[static_cast<std::size_t>(enter)] - t_best;
      if (leave_pos < 0) {
        t.state[static_cast<std::size_t>(enter)] =
            dir > 0 ? VarState::AtUpper : VarState::AtLower;
        t.nb_value[static_cast<std::size_t>(enter)] = enter_val;
      } else {
        const int lvar = t.basic[static_cast<std::size_t>(leave_pos)];
        t.state[static_cast<std::size_t>(lvar)] =
            leave_to_upper ? VarState::AtUpper : VarState::AtLower;
        t.nb_value[static_cast<std::size_t>(lvar)] =
            leave_to_upper ? t.hi[static_cast<std::size_t>(lvar)]
                           : t.lo[static_cast<std::size_t>(lvar)];
        t.basic[static_cast<std::size_t>(leave_pos)] = enter;
        t.state[static_cast<std::size_t>(enter)] = VarState::Basic;
        t.xb[static_cast<std::size_t>(leave_pos)] = enter_val;
        const double piv = w[static_cast<std::size_t>(leave_pos)];
        for (int j = 0; j < m; ++j) t.bi(leave_pos, j) /= piv;
        for (int i = 0; i < m; ++i) {
          if (i == leave_pos) continue;
          const double f = w[static_cast<std::size_t>(i)];
          if (f == 0.0) continue;
          for (int j = 0; j < m; ++j)
            t.bi(i, j) -= f * t.bi(leave_pos, j);
        }
        if (++since_refactor >= kRefactorEvery) {
          since_refactor = 0;
          if (!t.refactor()) return LpStatus::IterationLimit;
        }
      }
      ++pivots;
    }
  };

  if (artificials > 0) {
    t.cost.assign(static_cast<std::size_t>(t.nv), 0.0);
    for (int v = n + m; v < t.nv; ++v) t.cost[static_cast<std::size_t>(v)] = 1.0;
    const LpStatus s1 = run_phase();
    if (s1 != LpStatus::Optimal) {
      res.status = s1 == LpStatus::Unbounded ? LpStatus::IterationLimit : s1;
      return res;
    }
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (t.basic[static_cast<std::size_t>(i)] >= n + m)
        infeas += std::max(0.0, t.xb[static_cast<std::size_t>(i)]);
    if (infeas > kFeasibilityTol) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // Pin artificials at zero for phase 2; basic ones stay harmlessly at 0.
    for (int v = n + m; v < t.nv; ++v) {
      t.lo[static_cast<std::size_t>(v)] = 0.0;
      t.hi[static_cast<std::size_t>(v)] = 0.0;
      if (t.state[static_cast<std::size_t>(v)] != VarState::Basic)
        t.nb_value[static_cast<std::size_t>(v)] = 0.0;
    }
  }

  t.cost.assign(static_cast<std::size_t>(t.nv), 0.0);
  for (int j = 0; j < n; ++j)
    t.cost[static_cast<std::size_t>(j)] = prob.objective[static_cast<std::size_t>(j)];
  const LpStatus s2 = run_phase();
  if (s2 != LpStatus::Optimal) {
    res.status = s2;
    return res;
  }

  res.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    if (t.state[static_cast<std::size_t>(j)] != VarState::Basic)
      res.x[static_cast<std::size_t>(j)] = t.nb_value[static_cast<std::size_t>(j)];
  for (int i = 0; i < m; ++i) {
    const int bv = t.basic[static_cast<std::size_t>(i)];
    if (bv < n) res.x[static_cast<std::size_t>(bv)] = t.xb[static_cast<std::size_t>(i)];
  }
  res.value = 0.0;
  for (int j = 0; j < n; ++j)
    res.value += prob.objective[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
  res.duals.assign(static_cast<std::size_t>(m), 0.0);
  for (int j = 0; j < m; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
      const double cb = t.cost[static_cast<std::size_t>(t.basic[static_cast<std::size_t>(i)])];
      if (cb != 0.0) s += cb * t.bi(i, j);
    }
    res.duals[static_cast<std::size_t>(j)] = s;
  }

  // Post-hoc feasibility: a vertex that violates a row signals numerical
  // trouble and is reported as a failure, never as optimal.
  for (int j = 0; j < n; ++j) {
    const double v = res.x[static_cast<std::size_t>(j)];
    if (v < t.lo[static_cast<std::size_t>(j)] - kFeasibilityTol ||
        v > t.hi[static_cast<std::size_t>(j)] + kFeasibilityTol) {
      res.status = LpStatus::IterationLimit;
      return res;
    }
  }
  for (int i = 0; i < m; ++i) {
    const auto& row = prob.rows[static_cast<std::size_t>(i)];
    const double scale = std::max(1.0, std::fabs(row.rhs));
    if (!row.holds(row.lhs(res.x), kFeasibilityTol * scale)) {
      res.status = LpStatus::IterationLimit;
      return res;
    }
  }

  res.status = LpStatus::Optimal;
  res.is_vertex = true;
  return res;
}

LpResult solve_lp(const LpProblem& prob) {
  SimplexSolver solver;
  return solver.solve(prob);
}

}  // namespace triobj
