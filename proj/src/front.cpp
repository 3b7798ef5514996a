#include "triobj/front.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace triobj {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominates: point dimensions differ");
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k] - 1e-9) strict = true;
  }
  return strict;
}

Front filter_nondominated(const Instance& inst,
                          const std::vector<BinarySolution>& candidates) {
  std::vector<BinarySolution> pool;
  pool.reserve(candidates.size());
  std::unordered_set<BitVector, BitVectorHash> seen;
  for (const auto& c : candidates) {
    if (!is_feasible(inst, c.x)) continue;
    if (!seen.insert(c.x).second) continue;
    pool.push_back(c);
  }

  std::vector<bool> dead(pool.size(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (i == j || dead[j]) continue;
      if (dominates(pool[j].objectives, pool[i].objectives)) {
        dead[i] = true;
        break;
      }
    }
  }

  // Equal images with distinct preimages: first one in wins.
  Front front;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!dead[i]) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pool[a].objectives < pool[b].objectives;
  });
  for (std::size_t idx : order) {
    if (!front.points.empty() && front.points.back() == pool[idx].objectives)
      continue;
    front.points.push_back(pool[idx].objectives);
    front.solutions.push_back(pool[idx].x);
  }
  front.stats.size = static_cast<int>(front.points.size());
  return front;
}

Front filter_candidates(const Instance& inst,
                        const std::vector<std::vector<double>>& candidates) {
  std::vector<BinarySolution> binaries;
  binaries.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (!is_integral_vector(c)) continue;
    binaries.push_back(make_solution(inst, to_bits(c)));
  }
  return filter_nondominated(inst, binaries);
}

}  // namespace triobj
