#include "triobj/hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace triobj {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Face {
  int a, b, c;
  Vec3 n;         // unit outward
  double off;     // n . x = off
  bool alive = true;
};

Face make_face(int a, int b, int c, const std::vector<Vec3>& pts) {
  Face f{a, b, c, {}, 0.0, true};
  const Vec3 u = sub(pts[static_cast<std::size_t>(b)], pts[static_cast<std::size_t>(a)]);
  const Vec3 v = sub(pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(a)]);
  Vec3 n = cross(u, v);
  const double len = norm(n);
  if (len > 0.0) {
    n = {n[0] / len, n[1] / len, n[2] / len};
  }
  f.n = n;
  f.off = dot(n, pts[static_cast<std::size_t>(a)]);
  return f;
}

}  // namespace

ConvexHull3D::ConvexHull3D(const std::vector<Vec3>& points) {
  const int np = static_cast<int>(points.size());
  if (np < 4)
    throw std::invalid_argument("hull3d: need at least 4 points");

  double scale = 1.0;
  for (const auto& p : points)
    for (double c : p) scale = std::max(scale, std::fabs(c));
  const double eps = 1e-9 * scale;

  // Initial simplex: spread-out quadruple.
  int i0 = 0;
  for (int i = 1; i < np; ++i)
    if (points[static_cast<std::size_t>(i)] < points[static_cast<std::size_t>(i0)]) i0 = i;
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < np; ++i) {
    const double d = norm(sub(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(i0)]));
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) throw std::invalid_argument("hull3d: points are coincident");
  int i2 = -1;
  best = eps;
  const Vec3 dir = sub(points[static_cast<std::size_t>(i1)], points[static_cast<std::size_t>(i0)]);
  for (int i = 0; i < np; ++i) {
    const Vec3 d = sub(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(i0)]);
    const double area = norm(cross(dir, d)) / norm(dir);
    if (area > best) {
      best = area;
      i2 = i;
    }
  }
  if (i2 < 0) throw std::invalid_argument("hull3d: points are collinear");
  Face base = make_face(i0, i1, i2, points);
  int i3 = -1;
  best = eps;
  for (int i = 0; i < np; ++i) {
    const double d = std::fabs(dot(base.n, points[static_cast<std::size_t>(i)]) - base.off);
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) throw std::invalid_argument("hull3d: points are coplanar");

  std::vector<Face> faces;
  {
    int a = i0, b = i1, c = i2;
    if (dot(base.n, points[static_cast<std::size_t>(i3)]) - base.off > 0) std::swap(b, c);
    // Orient each face of the simplex away from the opposite vertex.
    const int quad[4][4] = {{a, b, c, i3}, {a, c, i3, b}, {a, i3, b, c}, {c, b, i3, a}};
    for (const auto& q : quad) {
      Face f = make_face(q[0], q[1], q[2], points);
      if (dot(f.n, points[static_cast<std::size_t>(q[3])]) - f.off > 0) {
        std::swap(f.b, f.c);
        f = make_face(f.a, f.b, f.c, points);
      }
      faces.push_back(f);
    }
  }

  std::vector<char> used(static_cast<std::size_t>(np), 0);
  used[static_cast<std::size_t>(i0)] = used[static_cast<std::size_t>(i1)] = 1;
  used[static_cast<std::size_t>(i2)] = used[static_cast<std::size_t>(i3)] = 1;

  for (int pi = 0; pi < np; ++pi) {
    if (used[static_cast<std::size_t>(pi)]) continue;
    const Vec3& p = points[static_cast<std::size_t>(pi)];
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      const Face& f = faces[static_cast<std::size_t>(fi)];
      if (!f.alive) continue;
      if (dot(f.n, p) - f.off > eps) visible.push_back(fi);
    }
    if (visible.empty()) continue;  // inside or on the hull

    // Horizon: directed edges of visible faces whose reverse edge is not.
    std::unordered_set<std::uint64_t> vis_edges;
    const auto key = [](int u, int v) {
      return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
             static_cast<std::uint32_t>(v);
    };
    for (int fi : visible) {
      const Face& f = faces[static_cast<std::size_t>(fi)];
      vis_edges.insert(key(f.a, f.b));
      vis_edges.insert(key(f.b, f.c));
      vis_edges.insert(key(f.c, f.a));
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto e : vis_edges)
      if (!vis_edges.count(key(static_cast<int>(e & 0xffffffffu),
                               static_cast<int>(e >> 32))))
        horizon.emplace_back(static_cast<int>(e >> 32),
                             static_cast<int>(e & 0xffffffffu));
    // Deterministic fan order.
    std::sort(horizon.begin(), horizon.end());

    for (int fi : visible) faces[static_cast<std::size_t>(fi)].alive = false;
    for (const auto& [u, v] : horizon)
      faces.push_back(make_face(u, v, pi, points));
  }

  for (const Face& f : faces) {
    if (!f.alive) continue;
    HullFacet out;
    out.normal = f.n;
    out.offset = f.off;
    out.vertices = {f.a, f.b, f.c};
    facets_.push_back(out);
  }

  for (const auto& p : points)
    for (const auto& f : facets_)
      max_violation_ = std::max(max_violation_, dot(f.normal, p) - f.offset);
}

}  // namespace triobj
