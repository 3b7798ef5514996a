#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "triobj/lbset.hpp"
#include "triobj/model.hpp"
#include "triobj/rng.hpp"
#include "triobj/simplex.hpp"

namespace triobj {

// Roundings that failed during the search. Holds infeasible vectors only;
// archived solutions never enter it.
class TabuList {
 public:
  bool contains(const BitVector& v) const { return members_.count(v) > 0; }
  void insert(BitVector v) { members_.insert(std::move(v)); }
  std::size_t size() const { return members_.size(); }

 private:
  std::unordered_set<BitVector, BitVectorHash> members_;
};

// Feasible solutions found so far. Dominated members are allowed during the
// search; filtering happens at the end.
class Archive {
 public:
  bool contains(const BitVector& v) const { return index_.count(v) > 0; }

  // Inserts a feasible solution; returns false on duplicates. Throws
  // std::logic_error if the solution fails the feasibility check.
  bool insert(const Instance& inst, BitVector v);

  const std::vector<BinarySolution>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<BinarySolution> members_;
  std::unordered_set<BitVector, BitVectorHash> index_;
};

// Componentwise nearest integer, ties at 0.5 rounded up. Coordinates must be
// inside [0,1] (1e-7 slack).
BitVector round_solution(const std::vector<double>& x);

// Tabu escape. Phase 1 flips coordinates cumulatively in descending
// |relaxed - rounded| order (ties by index) and returns the first vector not
// in the tabu list. Phase 2 retries up to N times with a random flip set of
// size in [ceil(N/2), N-1]. Returns nullopt when everything is tabu.
std::optional<BitVector> flip(const TabuList& tabu,
                              const std::vector<double>& relaxed,
                              const BitVector& rounded, Rng& rng);

// Closest relaxation point to the target rounding (Hamming-style distance
// LP). nullopt on solver failure; throws InfeasibleError when the relaxation
// itself is infeasible.
std::optional<RelaxedSolution> find_new_lp(const Instance& inst,
                                           SimplexSolver& solver,
                                           const BitVector& target);

enum class PumpOutcome { Archived, Exhausted };

struct PumpTrace {
  std::vector<BitVector> roundings;
  std::vector<BitVector> flips;
  std::optional<BitVector> archived;
};

// One feasibility-pump run: round, archive/flip/project, repeat on the new
// relaxation point. At most max_pumps distance LPs per call; every exit path
// archives at most one new solution.
PumpOutcome core_fp(const Instance& inst, SimplexSolver& solver,
                    std::vector<double> relaxed, Archive& archive,
                    TabuList& tabu, Rng& rng, int max_pumps,
                    PumpTrace* trace = nullptr);

}  // namespace triobj
