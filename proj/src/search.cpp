#include "triobj/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace triobj {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point after(Clock::time_point start, double seconds) {
  return start + std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(seconds));
}

}  // namespace

bool CandidateSet::contains(const std::vector<double>& v) const {
  return index_.count(snap_binary(v)) > 0;
}

int CandidateSet::index_of(const std::vector<double>& v) const {
  const auto it = index_.find(snap_binary(v));
  return it == index_.end() ? -1 : it->second;
}

bool CandidateSet::insert(std::vector<double> v) {
  v = snap_binary(std::move(v));
  const auto [it, fresh] = index_.emplace(v, static_cast<int>(items_.size()));
  if (!fresh) return false;
  items_.push_back(std::move(v));
  return true;
}

std::vector<int> diff_indices(const std::vector<double>& a,
                              const std::vector<double>& b) {
  std::vector<int> dif;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::fabs(a[j] - b[j]) > kIntegralityTol)
      dif.push_back(static_cast<int>(j));
  return dif;
}

std::vector<std::vector<double>> create_neighbours(
    const std::vector<double>& s_i, const std::vector<int>& dif,
    const CandidateSet& tabu) {
  std::vector<std::vector<double>> out;
  for (int idx : dif) {
    const double v = s_i[static_cast<std::size_t>(idx)];
    if (is_binary_value(v)) {
      auto nb = s_i;
      nb[static_cast<std::size_t>(idx)] = v >= 0.5 ? 0.0 : 1.0;
      if (!tabu.contains(nb)) out.push_back(std::move(nb));
    } else {
      auto up = s_i;
      up[static_cast<std::size_t>(idx)] = 1.0;
      if (!tabu.contains(up)) out.push_back(std::move(up));
      auto down = s_i;
      down[static_cast<std::size_t>(idx)] = 0.0;
      if (!tabu.contains(down)) out.push_back(std::move(down));
    }
  }
  return out;
}

std::vector<double> next_si(const Instance& inst,
                            const std::vector<std::vector<double>>& neighbours) {
  if (neighbours.empty())
    throw std::invalid_argument("next_si: neighbour list is empty");

  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < neighbours.size(); ++i)
    if (is_feasible_relaxed(inst, neighbours[i])) pool.push_back(i);
  if (pool.empty()) {
    pool.resize(neighbours.size());
    for (std::size_t i = 0; i < neighbours.size(); ++i) pool[i] = i;
  }
  if (pool.size() == 1) return neighbours[pool[0]];

  std::vector<std::vector<double>> images;
  images.reserve(pool.size());
  for (std::size_t i : pool) images.push_back(evaluate_relaxed(inst, neighbours[i]));

  // rank = |pool| - (#strictly better); equal values share the higher rank.
  const std::size_t count = pool.size();
  std::vector<int> degree(count, 0);
  for (int k = 0; k < inst.p; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      int better = 0;
      for (std::size_t j = 0; j < count; ++j)
        if (images[j][static_cast<std::size_t>(k)] <
            images[i][static_cast<std::size_t>(k)] - 1e-12)
          ++better;
      degree[i] += static_cast<int>(count) - better;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < count; ++i)
    if (degree[i] > degree[best]) best = i;  // ties: earliest creation order
  return neighbours[pool[best]];
}

std::vector<double> relink_walk(const Instance& inst, std::vector<double> s_i,
                                const std::vector<double>& s_g,
                                PathRelinkState& state, int gpr_iter,
                                std::vector<WalkStep>* trace) {
  CandidateSet seen;
  seen.insert(s_i);
  for (int iter = 0; iter < gpr_iter; ++iter) {
    const std::vector<int> dif = diff_indices(s_i, s_g);
    if (dif.empty()) break;  // arrived at the guiding solution
    const int ci = state.cand_x.index_of(s_i);
    const int cg = state.cand_x.index_of(s_g);
    if (ci >= 0 && cg >= 0 && state.used_pairs.count({ci, cg})) break;

    auto neighbours = create_neighbours(s_i, dif, state.tabu_si);
    if (trace) trace->push_back({s_i, neighbours, {}});
    if (neighbours.empty()) break;

    bool regenerated = false;
    for (const auto& nb : neighbours) {
      if (seen.contains(nb)) regenerated = true;
      if (is_integral_vector(nb)) {
        const BitVector bits = to_bits(nb);
        if (is_feasible(inst, bits) && !state.cand_x.contains(nb))
          state.cand_x.insert(nb);
      }
    }
    for (const auto& nb : neighbours) seen.insert(nb);
    // A regenerated neighbour means the walk has started to cycle; keep the
    // current initiating solution as the terminal one.
    if (regenerated) break;

    s_i = next_si(inst, neighbours);
    if (trace) trace->back().selected = s_i;
    if (!state.cand_x.contains(s_i)) state.tabu_si.insert(s_i);
  }
  return s_i;
}

namespace {

// Unordered index pairs {i,j}, i<j, sampled without replacement; the pool may
// grow while pairs are being consumed.
class UnorderedPairPool {
 public:
  void grow_to(std::size_t n) {
    for (; have_ < n; ++have_)
      for (std::size_t i = 0; i < have_; ++i)
        open_.emplace_back(static_cast<int>(i), static_cast<int>(have_));
  }
  bool empty() const { return open_.empty(); }
  std::pair<int, int> draw(Rng& rng) {
    const std::size_t k = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(open_.size()) - 1));
    const auto pair = open_[k];
    open_[k] = open_.back();
    open_.pop_back();
    return pair;
  }

 private:
  std::size_t have_ = 0;
  std::vector<std::pair<int, int>> open_;
};

// Ordered index pairs (i,j), i != j, for the relinking stage.
class OrderedPairPool {
 public:
  void grow_to(std::size_t n) {
    for (; have_ < n; ++have_)
      for (std::size_t i = 0; i < have_; ++i) {
        open_.emplace_back(static_cast<int>(i), static_cast<int>(have_));
        open_.emplace_back(static_cast<int>(have_), static_cast<int>(i));
      }
  }
  bool empty() const { return open_.empty(); }
  std::pair<int, int> draw(Rng& rng) {
    const std::size_t k = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(open_.size()) - 1));
    const auto pair = open_[k];
    open_[k] = open_.back();
    open_.pop_back();
    return pair;
  }

 private:
  std::size_t have_ = 0;
  std::vector<std::pair<int, int>> open_;
};

}  // namespace

Front fp_plus(const Instance& inst, const BoundSet& bs, const Params& params,
              Rng& rng) {
  const auto deadline = after(Clock::now(), params.algo_time_limit);
  SimplexSolver solver;

  CandidateSet pool;
  Archive archive;
  TabuList tabu;
  for (const auto& sol : bs.solutions) {
    pool.insert(sol.x);
    if (sol.is_integral) {
      // Integral bound-set members seed both lists: the tabu copy stops the
      // pump from rediscovering them, the archive copy keeps them in the pool
      // feedback loop and in the final front.
      const BitVector bits = to_bits(snap_binary(sol.x));
      tabu.insert(bits);
      archive.insert(inst, bits);
    }
  }

  UnorderedPairPool pairs;
  pairs.grow_to(pool.size());
  bool single_done = false;

  while (Clock::now() < deadline) {
    std::vector<double> mean;
    if (pool.size() == 1) {
      if (single_done) break;
      single_done = true;
      mean = pool.items()[0];
    } else {
      if (pairs.empty()) break;
      const auto [i, j] = pairs.draw(rng);
      const auto& a = pool.items()[static_cast<std::size_t>(i)];
      const auto& b = pool.items()[static_cast<std::size_t>(j)];
      mean.resize(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) mean[t] = 0.5 * a[t] + 0.5 * b[t];
    }
    const std::size_t before = archive.size();
    core_fp(inst, solver, std::move(mean), archive, tabu, rng, params.fp_iter);
    if (archive.size() > before) {
      pool.insert(to_reals(archive.members().back().x));
      pairs.grow_to(pool.size());
    }
  }

  Front front = filter_candidates(inst, pool.items());
  front.stats.branch = "FP+";
  return front;
}

Front fpgpr(const Instance& inst, const BoundSet& bs, const Params& params,
            Rng& rng) {
  const auto start = Clock::now();
  const auto half = after(start, 0.5 * params.algo_time_limit);
  const auto full = after(start, params.algo_time_limit);
  SimplexSolver solver;

  // Stage 1: pump randomly drawn bound-set solutions.
  Archive pumped;
  TabuList tabu;
  std::vector<std::size_t> open(bs.solutions.size());
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
  std::vector<bool> drawn(bs.solutions.size(), false);
  while (!open.empty() && Clock::now() < half) {
    const std::size_t k = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(open.size()) - 1));
    const std::size_t idx = open[k];
    open[k] = open.back();
    open.pop_back();
    drawn[idx] = true;
    core_fp(inst, solver, bs.solutions[idx].x, pumped, tabu, rng,
            params.fp_iter);
  }

  // Stage 2: relink over pumped solutions plus the untouched bound-set part.
  PathRelinkState state;
  for (const auto& sol : pumped.members()) state.cand_x.insert(to_reals(sol.x));
  for (std::size_t i = 0; i < bs.solutions.size(); ++i)
    if (!drawn[i]) state.cand_x.insert(bs.solutions[i].x);

  OrderedPairPool pairs;
  pairs.grow_to(state.cand_x.size());
  while (Clock::now() < full && !pairs.empty()) {
    const auto [i, j] = pairs.draw(rng);
    const auto s_i = state.cand_x.items()[static_cast<std::size_t>(i)];
    const auto s_g = state.cand_x.items()[static_cast<std::size_t>(j)];
    if (diff_indices(s_i, s_g).empty()) {
      state.used_pairs.insert({i, j});
      continue;
    }
    relink_walk(inst, s_i, s_g, state, params.gpr_iter);
    state.used_pairs.insert({i, j});
    pairs.grow_to(state.cand_x.size());
  }

  Front front = filter_candidates(inst, state.cand_x.items());
  front.stats.branch = "FPGPR";
  return front;
}

Front lpbm(const Instance& inst, const Params& params) {
  const auto start = Clock::now();
  const BoundSet bs = compute_lb_set(inst, params.bensolve_time_limit);
  Rng rng = Rng(params.seed).fork("search");

  Front front;
  if (choose_branch(bs.fractionality, params.allowed_fractionality) ==
      Branch::FpPlus) {
    Rng stream = rng.fork("fp+");
    front = fp_plus(inst, bs, params, stream);
  } else {
    Rng stream = rng.fork("fpgpr");
    front = fpgpr(inst, bs, params, stream);
  }
  front.stats.fractionality = bs.fractionality;
  front.stats.lb_complete = bs.complete;
  front.stats.size = static_cast<int>(front.points.size());
  front.stats.time_s =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (front.points.empty())
    front.stats.warning = "search produced no feasible solutions";
  return front;
}

}  // namespace triobj
