#pragma once

#include <vector>

#include "triobj/common.hpp"
#include "triobj/model.hpp"

namespace triobj {

// min objective . x  subject to  rows, lo <= x <= hi. Bounds must be finite.
struct LpProblem {
  std::vector<double> objective;
  std::vector<ConstraintRow> rows;
  std::vector<double> lower;  // default 0
  std::vector<double> upper;  // default 1

  static LpProblem box(std::vector<double> objective,
                       std::vector<ConstraintRow> rows);
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
  LpStatus status = LpStatus::IterationLimit;
  std::vector<double> x;      // structural values, basic (vertex) solution
  double value = 0.0;         // objective . x
  bool is_vertex = false;
  std::vector<double> duals;  // one multiplier per row, minimisation sign
};

// Bounded-variable revised simplex with a dense explicit basis inverse.
// Deterministic: Dantzig pricing (lowest index on ties) for the first half of
// the pivot budget, Bland's rule afterwards. Equality and range-infeasible
// rows get phase-1 artificials. One solver instance per worker; problems are
// shared freely.
class SimplexSolver {
 public:
  LpResult solve(const LpProblem& prob);

 private:
  struct Work;  // scratch arrays, reused across solves
};

LpResult solve_lp(const LpProblem& prob);

// LP relaxation of an instance under the given objective vector.
LpProblem relaxation(const Instance& inst, std::vector<double> objective);

}  // namespace triobj
