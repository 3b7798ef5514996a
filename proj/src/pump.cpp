#include "triobj/pump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triobj {

bool Archive::insert(const Instance& inst, BitVector v) {
  if (index_.count(v)) return false;
  BinarySolution sol = make_solution(inst, std::move(v));
  if (!is_feasible(inst, sol.x))
    throw std::logic_error("archive: rejected infeasible solution");
  index_.insert(sol.x);
  members_.push_back(std::move(sol));
  return true;
}

BitVector round_solution(const std::vector<double>& x) {
  BitVector r(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double v = x[j];
    if (v < -1e-7 || v > 1.0 + 1e-7)
      throw std::invalid_argument("round_solution: coordinate outside [0,1]");
    r[j] = v >= 0.5 ? 1 : 0;
  }
  return r;
}

std::optional<BitVector> flip(const TabuList& tabu,
                              const std::vector<double>& relaxed,
                              const BitVector& rounded, Rng& rng) {
  const std::size_t n = relaxed.size();
  if (rounded.size() != n)
    throw std::invalid_argument("flip: vector lengths differ");
  if (n == 0) return std::nullopt;

  // Most fractional first; equal gaps keep index order.
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(relaxed[a] - static_cast<double>(rounded[a])) >
           std::fabs(relaxed[b] - static_cast<double>(rounded[b]));
  });

  BitVector work = rounded;
  for (std::size_t i = 0; i < n; ++i) {
    work[order[i]] ^= 1;  // cumulative
    if (!tabu.contains(work)) return work;
  }

  if (n == 1) return std::nullopt;  // both vectors exhausted above
  const std::int64_t lo = static_cast<std::int64_t>((n + 1) / 2);
  const std::int64_t hi = static_cast<std::int64_t>(n - 1);
  for (std::size_t attempt = 0; attempt < n; ++attempt) {
    work = rounded;
    const std::size_t num = static_cast<std::size_t>(rng.uniform_int(lo, hi));
    for (std::size_t pos : rng.sample_indices(n, num)) work[order[pos]] ^= 1;
    if (!tabu.contains(work)) return work;
  }
  return std::nullopt;
}

std::optional<RelaxedSolution> find_new_lp(const Instance& inst,
                                           SimplexSolver& solver,
                                           const BitVector& target) {
  if (static_cast<int>(target.size()) != inst.n)
    throw std::invalid_argument("find_new_lp: target length mismatch");
  // min sum_{j: t_j=0} x_j + sum_{j: t_j=1} (1 - x_j); constants dropped.
  std::vector<double> obj(target.size());
  for (std::size_t j = 0; j < target.size(); ++j) obj[j] = target[j] ? -1.0 : 1.0;
  const LpResult res = solver.solve(relaxation(inst, std::move(obj)));
  if (res.status == LpStatus::Infeasible)
    throw InfeasibleError("instance relaxation is infeasible");
  if (res.status != LpStatus::Optimal) return std::nullopt;
  RelaxedSolution rs;
  rs.x = snap_binary(res.x, 1e-7);
  rs.image = evaluate_relaxed(inst, rs.x);
  rs.is_integral = is_integral_vector(rs.x);
  return rs;
}

PumpOutcome core_fp(const Instance& inst, SimplexSolver& solver,
                    std::vector<double> relaxed, Archive& archive,
                    TabuList& tabu, Rng& rng, int max_pumps, PumpTrace* trace) {
  int pumps = 0;
  while (true) {
    BitVector rounded = round_solution(relaxed);
    if (trace) trace->roundings.push_back(rounded);

    if (is_feasible(inst, rounded)) {
      if (archive.contains(rounded)) return PumpOutcome::Exhausted;
      if (trace) trace->archived = rounded;
      archive.insert(inst, std::move(rounded));
      return PumpOutcome::Archived;
    }

    if (tabu.contains(rounded)) {
      auto flipped = flip(tabu, relaxed, rounded, rng);
      if (!flipped) return PumpOutcome::Exhausted;
      if (trace) trace->flips.push_back(*flipped);
      if (is_feasible(inst, *flipped) && !archive.contains(*flipped)) {
        if (trace) trace->archived = *flipped;
        archive.insert(inst, std::move(*flipped));
        return PumpOutcome::Archived;
      }
      return PumpOutcome::Exhausted;
    }

    tabu.insert(rounded);
    if (pumps >= max_pumps) return PumpOutcome::Exhausted;
    ++pumps;
    auto next = find_new_lp(inst, solver, rounded);
    if (!next) return PumpOutcome::Exhausted;
    relaxed = std::move(next->x);
  }
}

}  // namespace triobj
