#pragma once

#include <string>
#include <vector>

namespace triobj {

// Per-objective bounds of the reference front, used for affine rescaling.
struct NormalizationContext {
  std::vector<double> mins;
  std::vector<double> maxs;

  static NormalizationContext from_points(
      const std::vector<std::vector<double>>& reference);
  bool degenerate(std::size_t k) const { return maxs[k] - mins[k] <= 0.0; }
};

// (y - min) / (max - min) per objective; degenerate objectives map to 0.
// Values above 1 are legal (points beyond the reference nadir).
std::vector<std::vector<double>> normalize_hv(
    const std::vector<std::vector<double>>& points,
    const NormalizationContext& ctx);

// Volume dominated between the point set and the reference point, minimisation
// orientation. Exact sweep for p=3; inclusion-exclusion fallback for p<=4 with
// at most 20 points. Points not strictly below the reference contribute
// nothing.
double hypervolume(const std::vector<std::vector<double>>& points,
                   const std::vector<double>& ref = {2.0, 2.0, 2.0});

// Multiplicative unary epsilon after both sets are rescaled to [1,2] with the
// reference bounds: max over r of min over a of max_k a_k/r_k.
double unary_epsilon(const std::vector<std::vector<double>>& approx,
                     const std::vector<std::vector<double>>& reference);

struct IndicatorReport {
  double hv_abs = 0.0;   // hypervolume of the normalised approximation
  double hv_ref = 0.0;   // hypervolume of the normalised reference
  double hv_pct = 0.0;   // 100 * hv_abs / hv_ref
  double epsilon = 1.0;
  int approx_count = 0;
  int ref_count = 0;
};

// Normalisation context always comes from the reference side.
IndicatorReport compare_fronts(const std::vector<std::vector<double>>& approx,
                               const std::vector<std::vector<double>>& reference);

std::string report_to_json(const IndicatorReport& report);

}  // namespace triobj
