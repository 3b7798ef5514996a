#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triobj/common.hpp"

namespace triobj {

enum class Sense : std::uint8_t { Ge, Le, Eq };

std::string sense_to_string(Sense s);
Sense sense_from_string(const std::string& s);

// One linear constraint, stored sparse. Indices strictly increasing, no zero
// coefficients.
struct ConstraintRow {
  std::vector<std::pair<int, double>> coeffs;
  Sense sense = Sense::Ge;
  double rhs = 0.0;

  double lhs(const std::vector<double>& x) const;
  double lhs(const BitVector& x) const;
  bool holds(double lhs_value, double tol) const;
};

enum class ObjectiveSense : std::uint8_t { Min, Max };

// A multi-objective binary program in minimisation form. Max objectives are
// negated on load; original_senses remembers how to report them back.
struct Instance {
  std::string name;
  int n = 0;
  int p = 3;
  std::vector<std::vector<double>> objectives;  // p rows of length n, min form
  std::vector<ObjectiveSense> original_senses;
  std::vector<ConstraintRow> constraints;
  std::string family = "generic";

  bool all_data_integral() const;  // cached on first call
  void validate() const;           // throws std::invalid_argument on bad shape

 private:
  mutable int integral_cache_ = -1;
};

// Image Cx in minimisation form. Exact for integral data.
std::vector<double> evaluate(const Instance& inst, const BitVector& x);

// Same product for a relaxed point; used when ranking fractional candidates.
std::vector<double> evaluate_relaxed(const Instance& inst,
                                     const std::vector<double>& x);

// Checks every constraint row. Exact comparisons for integral data, otherwise
// a 1e-6 relative tolerance.
bool is_feasible(const Instance& inst, const BitVector& x);

// Constraint check for a relaxed point (box membership not included).
bool is_feasible_relaxed(const Instance& inst, const std::vector<double>& x);

struct BinarySolution {
  BitVector x;
  std::vector<double> objectives;
};

BinarySolution make_solution(const Instance& inst, BitVector x);

// Benchmark generators. All draws come from the given seed only.
Instance gen_moap(int tasks, std::uint64_t seed);
Instance gen_mokp(int items, std::uint64_t seed);
Instance gen_toflp(int facilities, std::uint64_t seed);

}  // namespace triobj
