#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "triobj/front.hpp"
#include "triobj/lbset.hpp"
#include "triobj/pump.hpp"
#include "triobj/rng.hpp"

namespace triobj {

struct Params {
  double bensolve_time_limit = 600.0;  // bound-set budget, seconds
  double algo_time_limit = 120.0;      // search budget, seconds
  double allowed_fractionality = 0.20;
  int fp_iter = 10;
  int gpr_iter = 20;
  std::uint64_t seed = 0;
};

enum class Branch { FpPlus, Fpgpr };

inline Branch choose_branch(double fractionality, double allowed) {
  return fractionality <= allowed ? Branch::FpPlus : Branch::Fpgpr;
}

// Append-only set of candidate vectors (integral or fractional) with exact
// membership on snapped coordinates and stable insertion order.
class CandidateSet {
 public:
  bool contains(const std::vector<double>& v) const;
  int index_of(const std::vector<double>& v) const;  // -1 when absent
  bool insert(std::vector<double> v);                // false on duplicates
  const std::vector<std::vector<double>>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<std::vector<double>> items_;
  std::unordered_map<std::vector<double>, int, RealVectorHash> index_;
};

// Indices where two candidate vectors differ by more than 1e-6, ascending.
std::vector<int> diff_indices(const std::vector<double>& a,
                              const std::vector<double>& b);

// One-coordinate neighbours towards the guiding solution: integral
// coordinates flip, fractional ones produce both settings (1 first). Members
// of tabu are removed.
std::vector<std::vector<double>> create_neighbours(
    const std::vector<double>& s_i, const std::vector<int>& dif,
    const CandidateSet& tabu);

// Rank-degree selection: per objective the best minimisation value gets rank
// |candidates| (ties share the higher rank); the highest total degree wins,
// earliest creation order breaking ties. Infeasible neighbours only compete
// when no feasible one exists.
std::vector<double> next_si(const Instance& inst,
                            const std::vector<std::vector<double>>& neighbours);

struct PathRelinkState {
  CandidateSet cand_x;
  CandidateSet tabu_si;
  std::set<std::pair<int, int>> used_pairs;  // ordered cand_x index pairs
};

struct WalkStep {
  std::vector<double> from;
  std::vector<std::vector<double>> neighbours;
  std::vector<double> selected;  // empty when the walk stopped at this step
};

// Path-relinking walk from s_i towards s_g; harvests feasible integral
// neighbours into state.cand_x. Ends on arrival, on a used pair, on an empty
// neighbourhood, on a regenerated vector, or after gpr_iter steps.
std::vector<double> relink_walk(const Instance& inst, std::vector<double> s_i,
                                const std::vector<double>& s_g,
                                PathRelinkState& state, int gpr_iter,
                                std::vector<WalkStep>* trace = nullptr);

Front fp_plus(const Instance& inst, const BoundSet& bs, const Params& params,
              Rng& rng);

Front fpgpr(const Instance& inst, const BoundSet& bs, const Params& params,
            Rng& rng);

// Full pipeline: bound set, branch on fractionality, search, filter.
Front lpbm(const Instance& inst, const Params& params);

}  // namespace triobj
