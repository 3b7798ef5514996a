#include "triobj/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace triobj {

namespace {

// Keeps the running set nondominated so memory stays proportional to the
// front, not to the number of feasible vectors.
void insert_nondominated(std::vector<BinarySolution>& archive,
                         BinarySolution sol) {
  for (const auto& m : archive)
    if (m.objectives == sol.objectives || dominates(m.objectives, sol.objectives))
      return;
  std::erase_if(archive, [&](const BinarySolution& m) {
    return dominates(sol.objectives, m.objectives);
  });
  archive.push_back(std::move(sol));
}

}  // namespace

Front exact_front(const Instance& inst, int max_n) {
  if (inst.n > max_n)
    throw std::invalid_argument(
        "exact_front: n=" + std::to_string(inst.n) + " exceeds the enumeration cap " +
        std::to_string(max_n) + "; raise max_n only if 2^n vectors are affordable");

  const int n = inst.n;
  const int m = static_cast<int>(inst.constraints.size());
  const bool exact = inst.all_data_integral();

  // Column view of the constraints for single-bit updates.
  std::vector<std::vector<std::pair<int, double>>> cols(
      static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (const auto& [idx, a] : inst.constraints[static_cast<std::size_t>(i)].coeffs)
      cols[static_cast<std::size_t>(idx)].emplace_back(i, a);

  BitVector x(static_cast<std::size_t>(n), 0);
  std::vector<double> lhs(static_cast<std::size_t>(m), 0.0);
  std::vector<double> image(static_cast<std::size_t>(inst.p), 0.0);

  const auto feasible_now = [&]() {
    for (int i = 0; i < m; ++i) {
      const auto& row = inst.constraints[static_cast<std::size_t>(i)];
      const double tol = exact ? 1e-9 : 1e-6 * std::max(1.0, std::fabs(row.rhs));
      if (!row.holds(lhs[static_cast<std::size_t>(i)], tol)) return false;
    }
    return true;
  };

  std::vector<BinarySolution> archive;
  if (feasible_now()) insert_nondominated(archive, make_solution(inst, x));

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    // Gray code: one bit flips per step.
    int bit = 0;
    while (!((step >> bit) & 1u)) ++bit;
    const double delta = x[static_cast<std::size_t>(bit)] ? -1.0 : 1.0;
    x[static_cast<std::size_t>(bit)] ^= 1;
    for (const auto& [row, a] : cols[static_cast<std::size_t>(bit)])
      lhs[static_cast<std::size_t>(row)] += delta * a;
    for (int k = 0; k < inst.p; ++k)
      image[static_cast<std::size_t>(k)] +=
          delta * inst.objectives[static_cast<std::size_t>(k)][static_cast<std::size_t>(bit)];
    if (feasible_now()) {
      BinarySolution sol;
      sol.x = x;
      sol.objectives = evaluate(inst, x);  // exact product, no drift
      insert_nondominated(archive, std::move(sol));
    }
  }

  return filter_nondominated(inst, archive);
}

}  // namespace triobj
