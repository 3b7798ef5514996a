#pragma once

#include <string>
#include <vector>

#include "triobj/model.hpp"

namespace triobj {

struct FrontStats {
  int size = 0;
  double time_s = 0.0;
  std::string branch;       // "FP+", "FPGPR" or "" when not produced by a run
  double fractionality = 0.0;
  bool lb_complete = true;
  std::string warning;
};

// A mutually nondominated set of feasible images with their preimages,
// ordered lexicographically by image.
struct Front {
  std::vector<std::vector<double>> points;  // minimisation form
  std::vector<BitVector> solutions;
  FrontStats stats;
};

// True iff a <= b componentwise and a < b somewhere (1e-9 strictness slack).
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

// Drops duplicates, infeasible members and dominated images; keeps the first
// preimage of each surviving image; sorts by image.
Front filter_nondominated(const Instance& inst,
                          const std::vector<BinarySolution>& candidates);

// Same postprocessing for relaxed candidate vectors: fractional members are
// dropped before the binary filter runs.
Front filter_candidates(const Instance& inst,
                        const std::vector<std::vector<double>>& candidates);

}  // namespace triobj
