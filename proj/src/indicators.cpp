#include "triobj/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace triobj {

NormalizationContext NormalizationContext::from_points(
    const std::vector<std::vector<double>>& reference) {
  if (reference.empty())
    throw std::invalid_argument("normalization: empty reference front");
  const std::size_t p = reference.front().size();
  NormalizationContext ctx;
  ctx.mins.assign(p, std::numeric_limits<double>::infinity());
  ctx.maxs.assign(p, -std::numeric_limits<double>::infinity());
  for (const auto& y : reference) {
    if (y.size() != p)
      throw std::invalid_argument("normalization: ragged reference front");
    for (std::size_t k = 0; k < p; ++k) {
      ctx.mins[k] = std::min(ctx.mins[k], y[k]);
      ctx.maxs[k] = std::max(ctx.maxs[k], y[k]);
    }
  }
  return ctx;
}

std::vector<std::vector<double>> normalize_hv(
    const std::vector<std::vector<double>>& points,
    const NormalizationContext& ctx) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const auto& y : points) {
    std::vector<double> z(y.size());
    for (std::size_t k = 0; k < y.size(); ++k)
      z[k] = ctx.degenerate(k) ? 0.0
                               : (y[k] - ctx.mins[k]) / (ctx.maxs[k] - ctx.mins[k]);
    out.push_back(std::move(z));
  }
  return out;
}

namespace {

// Area of the union of [x, rx] x [y, ry] boxes, minimisation orientation.
double staircase_area(std::vector<std::pair<double, double>> pts, double rx,
                      double ry) {
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double prev_y = ry;
  for (const auto& [x, y] : pts) {
    if (x >= rx || y >= prev_y) continue;
    area += (rx - x) * (prev_y - y);
    prev_y = y;
  }
  return area;
}

double hv_sweep3(const std::vector<std::vector<double>>& pts,
                 const std::vector<double>& ref) {
  std::vector<std::vector<double>> kept;
  for (const auto& y : pts)
    if (y[0] < ref[0] && y[1] < ref[1] && y[2] < ref[2]) kept.push_back(y);
  if (kept.empty()) return 0.0;
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a[2] < b[2]; });
  std::vector<double> levels;
  for (const auto& y : kept)
    if (levels.empty() || y[2] > levels.back()) levels.push_back(y[2]);
  double volume = 0.0;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const double z = levels[li];
    const double z_next = li + 1 < levels.size() ? levels[li + 1] : ref[2];
    std::vector<std::pair<double, double>> active;
    for (const auto& y : kept)
      if (y[2] <= z) active.emplace_back(y[0], y[1]);
    volume += staircase_area(std::move(active), ref[0], ref[1]) * (z_next - z);
  }
  return volume;
}

double hv_inclusion_exclusion(const std::vector<std::vector<double>>& pts,
                              const std::vector<double>& ref) {
  const std::size_t p = ref.size();
  std::vector<std::vector<double>> kept;
  for (const auto& y : pts) {
    bool inside = true;
    for (std::size_t k = 0; k < p; ++k)
      if (y[k] >= ref[k]) inside = false;
    if (inside) kept.push_back(y);
  }
  const std::size_t n = kept.size();
  if (n == 0) return 0.0;
  if (n > 20)
    throw std::invalid_argument("hypervolume: inclusion-exclusion limited to 20 points");
  double total = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<double> corner(p, -std::numeric_limits<double>::infinity());
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) {
        ++bits;
        for (std::size_t k = 0; k < p; ++k)
          corner[k] = std::max(corner[k], kept[i][k]);
      }
    double vol = 1.0;
    for (std::size_t k = 0; k < p; ++k) vol *= std::max(0.0, ref[k] - corner[k]);
    total += (bits % 2 == 1 ? 1.0 : -1.0) * vol;
  }
  return total;
}

}  // namespace

double hypervolume(const std::vector<std::vector<double>>& points,
                   const std::vector<double>& ref) {
  for (const auto& y : points)
    if (y.size() != ref.size())
      throw std::invalid_argument("hypervolume: point/reference dimension mismatch");
  if (ref.size() == 3) return hv_sweep3(points, ref);
  if (ref.size() <= 4) return hv_inclusion_exclusion(points, ref);
  throw std::invalid_argument("hypervolume: only p <= 4 supported");
}

double unary_epsilon(const std::vector<std::vector<double>>& approx,
                     const std::vector<std::vector<double>>& reference) {
  if (approx.empty() || reference.empty())
    throw std::invalid_argument("unary_epsilon: sets must be non-empty");
  const NormalizationContext ctx = NormalizationContext::from_points(reference);
  const std::size_t p = ctx.mins.size();
  const auto rescale = [&](const std::vector<double>& y) {
    std::vector<double> z(p);
    for (std::size_t k = 0; k < p; ++k)
      z[k] = ctx.degenerate(k)
                 ? 1.0
                 : 1.0 + (y[k] - ctx.mins[k]) / (ctx.maxs[k] - ctx.mins[k]);
    return z;
  };
  std::vector<std::vector<double>> a2, r2;
  for (const auto& y : approx) a2.push_back(rescale(y));
  for (const auto& y : reference) r2.push_back(rescale(y));

  double eps = 0.0;
  for (const auto& r : r2) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : a2) {
      double worst = 0.0;
      for (std::size_t k = 0; k < p; ++k) worst = std::max(worst, a[k] / r[k]);
      best = std::min(best, worst);
    }
    eps = std::max(eps, best);
  }
  return eps;
}

IndicatorReport compare_fronts(const std::vector<std::vector<double>>& approx,
                               const std::vector<std::vector<double>>& reference) {
  IndicatorReport rep;
  rep.approx_count = static_cast<int>(approx.size());
  rep.ref_count = static_cast<int>(reference.size());
  const NormalizationContext ctx = NormalizationContext::from_points(reference);
  rep.hv_ref = hypervolume(normalize_hv(reference, ctx));
  rep.hv_abs = approx.empty() ? 0.0 : hypervolume(normalize_hv(approx, ctx));
  rep.hv_pct = rep.hv_ref > 0.0 ? 100.0 * rep.hv_abs / rep.hv_ref : 0.0;
  rep.epsilon = approx.empty() ? std::numeric_limits<double>::infinity()
                               : unary_epsilon(approx, reference);
  return rep;
}

std::string report_to_json(const IndicatorReport& report) {
  nlohmann::json doc;
  doc["hv_abs"] = report.hv_abs;
  doc["hv_ref"] = report.hv_ref;
  doc["hv_pct"] = report.hv_pct;
  doc["epsilon"] = report.epsilon;
  doc["approx_count"] = report.approx_count;
  doc["ref_count"] = report.ref_count;
  return doc.dump(2) + "\n";
}

}  // namespace triobj
