#include "triobj/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "triobj/rng.hpp"

namespace triobj {

std::string sense_to_string(Sense s) {
  switch (s) {
    case Sense::Ge: return ">=";
    case Sense::Le: return "<=";
    case Sense::Eq: return "=";
  }
  return "?";
}

Sense sense_from_string(const std::string& s) {
  if (s == ">=") return Sense::Ge;
  if (s == "<=") return Sense::Le;
  if (s == "=" || s == "==") return Sense::Eq;
  throw std::invalid_argument("unknown constraint sense '" + s + "'");
}

double ConstraintRow::lhs(const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& [idx, c] : coeffs) v += c * x[static_cast<std::size_t>(idx)];
  return v;
}

double ConstraintRow::lhs(const BitVector& x) const {
  double v = 0.0;
  for (const auto& [idx, c] : coeffs)
    if (x[static_cast<std::size_t>(idx)]) v += c;
  return v;
}

bool ConstraintRow::holds(double lhs_value, double tol) const {
  switch (sense) {
    case Sense::Ge: return lhs_value >= rhs - tol;
    case Sense::Le: return lhs_value <= rhs + tol;
    case Sense::Eq: return std::fabs(lhs_value - rhs) <= tol;
  }
  return false;
}

namespace {

bool value_is_integer(double v) { return v == std::floor(v); }

}  // namespace

bool Instance::all_data_integral() const {
  if (integral_cache_ >= 0) return integral_cache_ == 1;
  bool ok = true;
  for (const auto& row : objectives)
    for (double c : row)
      if (!value_is_integer(c)) ok = false;
  for (const auto& row : constraints) {
    if (!value_is_integer(row.rhs)) ok = false;
    for (const auto& [idx, c] : row.coeffs)
      if (!value_is_integer(c)) ok = false;
  }
  integral_cache_ = ok ? 1 : 0;
  return ok;
}

void Instance::validate() const {
  if (n <= 0) throw std::invalid_argument("instance: n must be positive");
  if (p < 2) throw std::invalid_argument("instance: p must be at least 2");
  if (static_cast<int>(objectives.size()) != p)
    throw std::invalid_argument("instance: expected " + std::to_string(p) +
                                " objective rows, got " +
                                std::to_string(objectives.size()));
  for (std::size_t k = 0; k < objectives.size(); ++k)
    if (static_cast<int>(objectives[k].size()) != n)
      throw std::invalid_argument("instance: objective row " +
                                  std::to_string(k) + " has length " +
                                  std::to_string(objectives[k].size()) +
                                  ", expected n=" + std::to_string(n));
  if (static_cast<int>(original_senses.size()) != p)
    throw std::invalid_argument("instance: senses length must equal p");
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto& row = constraints[r];
    int prev = -1;
    for (const auto& [idx, c] : row.coeffs) {
      if (idx < 0 || idx >= n)
        throw std::invalid_argument("instance: constraint " + std::to_string(r) +
                                    " references variable " + std::to_string(idx));
      if (idx <= prev)
        throw std::invalid_argument("instance: constraint " + std::to_string(r) +
                                    " indices not strictly increasing");
      if (c == 0.0)
        throw std::invalid_argument("instance: constraint " + std::to_string(r) +
                                    " stores a zero coefficient");
      prev = idx;
    }
  }
}

std::vector<double> evaluate(const Instance& inst, const BitVector& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw std::invalid_argument("evaluate: solution length " +
                                std::to_string(x.size()) + " != n=" +
                                std::to_string(inst.n));
  std::vector<double> image(static_cast<std::size_t>(inst.p), 0.0);
  for (int k = 0; k < inst.p; ++k) {
    const auto& row = inst.objectives[static_cast<std::size_t>(k)];
    double v = 0.0;
    for (int j = 0; j < inst.n; ++j)
      if (x[static_cast<std::size_t>(j)]) v += row[static_cast<std::size_t>(j)];
    image[static_cast<std::size_t>(k)] = v;
  }
  return image;
}

std::vector<double> evaluate_relaxed(const Instance& inst,
                                     const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw std::invalid_argument("evaluate_relaxed: solution length mismatch");
  std::vector<double> image(static_cast<std::size_t>(inst.p), 0.0);
  for (int k = 0; k < inst.p; ++k) {
    const auto& row = inst.objectives[static_cast<std::size_t>(k)];
    double v = 0.0;
    for (int j = 0; j < inst.n; ++j)
      v += row[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    image[static_cast<std::size_t>(k)] = v;
  }
  return image;
}

bool is_feasible(const Instance& inst, const BitVector& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw std::invalid_argument("is_feasible: solution length mismatch");
  const bool exact = inst.all_data_integral();
  for (const auto& row : inst.constraints) {
    const double tol = exact ? 0.0 : 1e-6 * std::max(1.0, std::fabs(row.rhs));
    if (!row.holds(row.lhs(x), tol)) return false;
  }
  return true;
}

bool is_feasible_relaxed(const Instance& inst, const std::vector<double>& x) {
  for (const auto& row : inst.constraints) {
    const double tol = 1e-6 * std::max(1.0, std::fabs(row.rhs));
    if (!row.holds(row.lhs(x), tol)) return false;
  }
  return true;
}

BinarySolution make_solution(const Instance& inst, BitVector x) {
  BinarySolution s;
  s.objectives = evaluate(inst, x);
  s.x = std::move(x);
  return s;
}

Instance gen_moap(int tasks, std::uint64_t seed) {
  if (tasks < 2) throw std::invalid_argument("gen_moap: tasks must be >= 2");
  Rng rng(seed);
  Instance inst;
  inst.name = "moap_t" + std::to_string(tasks) + "_s" + std::to_string(seed);
  inst.family = "moap";
  inst.n = tasks * tasks;
  inst.p = 3;
  inst.original_senses.assign(3, ObjectiveSense::Min);
  inst.objectives.assign(3, std::vector<double>(static_cast<std::size_t>(inst.n)));
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < inst.n; ++j)
      inst.objectives[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          static_cast<double>(rng.uniform_int(1, 20));
  // x_{rl} lives at index r*tasks + l. One task per agent, one agent per task.
  for (int r = 0; r < tasks; ++r) {
    ConstraintRow row;
    row.sense = Sense::Eq;
    row.rhs = 1.0;
    for (int l = 0; l < tasks; ++l) row.coeffs.emplace_back(r * tasks + l, 1.0);
    inst.constraints.push_back(std::move(row));
  }
  for (int l = 0; l < tasks; ++l) {
    ConstraintRow row;
    row.sense = Sense::Eq;
    row.rhs = 1.0;
    for (int r = 0; r < tasks; ++r) row.coeffs.emplace_back(r * tasks + l, 1.0);
    inst.constraints.push_back(std::move(row));
  }
  inst.validate();
  return inst;
}

Instance gen_mokp(int items, std::uint64_t seed) {
  if (items < 1) throw std::invalid_argument("gen_mokp: items must be >= 1");
  Rng rng(seed);
  Instance inst;
  inst.name = "mokp_n" + std::to_string(items) + "_s" + std::to_string(seed);
  inst.family = "mokp";
  inst.n = items;
  inst.p = 3;
  inst.original_senses.assign(3, ObjectiveSense::Max);
  inst.objectives.assign(3, std::vector<double>(static_cast<std::size_t>(items)));
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < items; ++j)
      inst.objectives[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          -static_cast<double>(rng.uniform_int(1, 100));  // profits, negated
  ConstraintRow cap;
  cap.sense = Sense::Le;
  double total = 0.0;
  for (int j = 0; j < items; ++j) {
    const double w = static_cast<double>(rng.uniform_int(1, 100));
    cap.coeffs.emplace_back(j, w);
    total += w;
  }
  cap.rhs = std::ceil(0.5 * total);
  inst.constraints.push_back(std::move(cap));
  inst.validate();
  return inst;
}

Instance gen_toflp(int facilities, std::uint64_t seed) {
  if (facilities < 2)
    throw std::invalid_argument("gen_toflp: facilities must be >= 2");
  Rng rng(seed);
  const int ni = facilities;
  const int nj = 2 * facilities;
  Instance inst;
  inst.name = "toflp_f" + std::to_string(facilities) + "_s" + std::to_string(seed);
  inst.family = "toflp";
  inst.n = ni * nj + ni + nj;
  inst.p = 3;
  inst.original_senses.assign(3, ObjectiveSense::Min);
  inst.objectives.assign(3, std::vector<double>(static_cast<std::size_t>(inst.n), 0.0));
  // Layout: x_ij at i*nj+j, y_i at ni*nj+i, z_j at ni*nj+ni+j.
  const auto xid = [nj](int i, int j) { return i * nj + j; };
  const int ybase = ni * nj;
  const int zbase = ni * nj + ni;
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j)
      inst.objectives[0][static_cast<std::size_t>(xid(i, j))] =
          static_cast<double>(rng.uniform_int(1, 100));  // servicing cost
  for (int i = 0; i < ni; ++i)
    inst.objectives[1][static_cast<std::size_t>(ybase + i)] =
        static_cast<double>(rng.uniform_int(100, 500));  // opening cost
  for (int j = 0; j < nj; ++j)
    inst.objectives[2][static_cast<std::size_t>(zbase + j)] =
        -static_cast<double>(rng.uniform_int(1, 100));  // covered demand
  // Coverage bookkeeping: sum_i x_ij = z_j.
  for (int j = 0; j < nj; ++j) {
    ConstraintRow row;
    row.sense = Sense::Eq;
    row.rhs = 0.0;
    for (int i = 0; i < ni; ++i) row.coeffs.emplace_back(xid(i, j), 1.0);
    row.coeffs.emplace_back(zbase + j, -1.0);
    inst.constraints.push_back(std::move(row));
  }
  // Service only from open facilities: y_i - x_ij >= 0.
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j) {
      ConstraintRow row;
      row.sense = Sense::Ge;
      row.rhs = 0.0;
      row.coeffs.emplace_back(xid(i, j), -1.0);
      row.coeffs.emplace_back(ybase + i, 1.0);
      inst.constraints.push_back(std::move(row));
    }
  inst.validate();
  return inst;
}

}  // namespace triobj
