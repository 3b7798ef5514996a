#pragma once

#include <stdexcept>
#include <vector>

#include "triobj/model.hpp"
#include "triobj/simplex.hpp"

namespace triobj {

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Extreme point of the relaxation with its criterion-space image.
struct RelaxedSolution {
  std::vector<double> x;      // within [0,1]^n
  std::vector<double> image;  // Cx, minimisation form
  bool is_integral = false;   // every coordinate within 1e-6 of {0,1}
};

// Extreme supported images of the relaxation's nondominated frontier.
struct BoundSet {
  std::vector<RelaxedSolution> solutions;  // distinct images, insertion order
  double fractionality = 0.0;
  bool complete = false;  // outer approximation confirmed every facet
};

// Vertex optimum of the weighted-sum LP over the relaxation. Weights must be
// nonnegative and not all zero.
RelaxedSolution supported_point(const Instance& inst,
                                const std::vector<double>& weights);

// Outer approximation: seeds with the single-objective and equal-weight
// optima, then solves one weighted-sum LP per unconfirmed lower facet of the
// image hull until every facet is supported or the budget runs out. A partial
// result is still a valid bound set (complete=false).
BoundSet compute_lb_set(const Instance& inst, double time_limit_s);

// Share of solutions with at least one non-binary coordinate.
double fractionality(const BoundSet& bs);

}  // namespace triobj
