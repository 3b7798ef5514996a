#pragma once

#include <array>
#include <vector>

namespace triobj {

using Vec3 = std::array<double, 3>;

struct HullFacet {
  Vec3 normal{};            // unit outward normal
  double offset = 0.0;      // normal . x == offset on the facet plane
  std::array<int, 3> vertices{};
};

// Incremental convex hull of a full-dimensional 3-D point cloud. Triangulated
// facets; epsilon predicates scaled to the coordinate magnitude. Throws
// std::invalid_argument when the input is not full-dimensional.
class ConvexHull3D {
 public:
  explicit ConvexHull3D(const std::vector<Vec3>& points);

  const std::vector<HullFacet>& facets() const { return facets_; }

  // Largest signed distance of any input point above any facet; exposed for
  // verification (should be ~0 for a correct hull).
  double max_violation() const { return max_violation_; }

 private:
  std::vector<HullFacet> facets_;
  double max_violation_ = 0.0;
};

}  // namespace triobj
