#include "triobj/lbset.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "triobj/front.hpp"
#include "triobj/hull3d.hpp"

namespace triobj {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<double> weighted_objective(const Instance& inst,
                                       const std::vector<double>& w) {
  std::vector<double> obj(static_cast<std::size_t>(inst.n), 0.0);
  for (int k = 0; k < inst.p; ++k) {
    const double wk = w[static_cast<std::size_t>(k)];
    if (wk == 0.0) continue;
    const auto& row = inst.objectives[static_cast<std::size_t>(k)];
    for (int j = 0; j < inst.n; ++j)
      obj[static_cast<std::size_t>(j)] += wk * row[static_cast<std::size_t>(j)];
  }
  return obj;
}

RelaxedSolution from_lp(const Instance& inst, std::vector<double> x) {
  RelaxedSolution rs;
  rs.x = snap_binary(std::move(x), 1e-7);
  rs.image = evaluate_relaxed(inst, rs.x);
  rs.is_integral = is_integral_vector(rs.x);
  return rs;
}

bool images_close(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > kImageMergeTol) return false;
  return true;
}

// Weight key for the solved-facet cache: L1-normalised, quantised at 1e-9.
std::array<std::int64_t, 3> weight_key(const std::array<double, 3>& w) {
  return {static_cast<std::int64_t>(std::llround(w[0] * 1e9)),
          static_cast<std::int64_t>(std::llround(w[1] * 1e9)),
          static_cast<std::int64_t>(std::llround(w[2] * 1e9))};
}

struct OuterState {
  const Instance& inst;
  SimplexSolver solver;
  std::vector<RelaxedSolution> points;
  std::map<std::array<std::int64_t, 3>, std::vector<double>> solved;
  Clock::time_point deadline;

  bool out_of_time() const { return Clock::now() >= deadline; }

  // Solves min w.Cx; records a new bound-set member when the image is fresh.
  // Returns the achieved image.
  const std::vector<double>& solve_weight(const std::array<double, 3>& w) {
    const auto key = weight_key(w);
    const auto it = solved.find(key);
    if (it != solved.end()) return it->second;
    RelaxedSolution rs =
        supported_point(inst, std::vector<double>(w.begin(), w.end()));
    bool fresh = true;
    for (const auto& p : points)
      if (images_close(p.image, rs.image)) {
        fresh = false;
        break;
      }
    if (fresh) points.push_back(std::move(rs));
    const auto [pos, ok] =
        solved.emplace(key, fresh ? points.back().image : rs.image);
    (void)ok;
    return pos->second;
  }
};

void drop_dominated(std::vector<RelaxedSolution>& points) {
  std::vector<RelaxedSolution> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dead = false;
    for (std::size_t j = 0; j < points.size() && !dead; ++j)
      if (i != j && dominates(points[j].image, points[i].image)) dead = true;
    if (!dead) kept.push_back(std::move(points[i]));
  }
  points.swap(kept);
}

BoundSet finish(std::vector<RelaxedSolution> points, bool complete) {
  drop_dominated(points);
  BoundSet bs;
  bs.solutions = std::move(points);
  bs.complete = complete;
  bs.fractionality = fractionality(bs);
  return bs;
}

BoundSet lb_set_dichotomic(const Instance& inst, Clock::time_point deadline);

}  // namespace

RelaxedSolution supported_point(const Instance& inst,
                                const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != inst.p)
    throw std::invalid_argument("supported_point: weight length must equal p");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw std::invalid_argument("supported_point: weights must be nonnegative");
    sum += w;
  }
  if (sum == 0.0)
    throw std::invalid_argument("supported_point: weights must not all be zero");
  const LpResult res = solve_lp(relaxation(inst, weighted_objective(inst, weights)));
  if (res.status == LpStatus::Infeasible)
    throw InfeasibleError("instance relaxation is infeasible");
  if (res.status != LpStatus::Optimal)
    throw SolveFailure("weighted-sum LP did not reach optimality");
  return from_lp(inst, res.x);
}

double fractionality(const BoundSet& bs) {
  if (bs.solutions.empty())
    throw std::invalid_argument("fractionality: empty bound set");
  int frac = 0;
  for (const auto& s : bs.solutions)
    if (!s.is_integral) ++frac;
  return static_cast<double>(frac) / static_cast<double>(bs.solutions.size());
}

BoundSet compute_lb_set(const Instance& inst, double time_limit_s) {
  if (inst.p > 3)
    throw std::invalid_argument("compute_lb_set: at most 3 objectives supported");
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(time_limit_s));
  if (inst.p == 2) return lb_set_dichotomic(inst, deadline);

  OuterState st{inst, SimplexSolver{}, {}, {}, deadline};

  const std::array<std::array<double, 3>, 4> seeds = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1.0 / 3, 1.0 / 3, 1.0 / 3}}};
  for (const auto& w : seeds) {
    st.solve_weight(w);
    if (st.out_of_time()) {
      if (st.points.empty())
        throw SolveFailure("compute_lb_set: time limit before any point was found");
      return finish(std::move(st.points), false);
    }
  }

  while (true) {
    // Hull over images plus per-objective shifted copies standing in for the
    // recession directions e_k.
    std::array<double, 3> max_img = {-kInf, -kInf, -kInf};
    std::array<double, 3> min_img = {kInf, kInf, kInf};
    for (const auto& p : st.points)
      for (int k = 0; k < 3; ++k) {
        max_img[static_cast<std::size_t>(k)] =
            std::max(max_img[static_cast<std::size_t>(k)], p.image[static_cast<std::size_t>(k)]);
        min_img[static_cast<std::size_t>(k)] =
            std::min(min_img[static_cast<std::size_t>(k)], p.image[static_cast<std::size_t>(k)]);
      }
    std::array<double, 3> shift;
    for (int k = 0; k < 3; ++k)
      shift[static_cast<std::size_t>(k)] =
          10.0 * (max_img[static_cast<std::size_t>(k)] - min_img[static_cast<std::size_t>(k)]) + 1.0;

    std::vector<Vec3> cloud;
    cloud.reserve(st.points.size() * 4);
    for (const auto& p : st.points) {
      const Vec3 y = {p.image[0], p.image[1], p.image[2]};
      cloud.push_back(y);
      for (int k = 0; k < 3; ++k) {
        Vec3 s = y;
        s[static_cast<std::size_t>(k)] += shift[static_cast<std::size_t>(k)];
        cloud.push_back(s);
      }
    }
    const ConvexHull3D hull(cloud);

    // Candidate weights: inward normals that stay in the nonnegative orthant,
    // L1-normalised, solved in lexicographic order so runs are reproducible.
    std::vector<std::array<double, 3>> cand;
    for (const auto& f : hull.facets()) {
      std::array<double, 3> w = {-f.normal[0], -f.normal[1], -f.normal[2]};
      if (w[0] < -1e-9 || w[1] < -1e-9 || w[2] < -1e-9) continue;
      for (double& v : w) v = std::max(v, 0.0);
      const double sum = w[0] + w[1] + w[2];
      if (sum <= 1e-12) continue;
      for (double& v : w) v /= sum;
      cand.push_back(w);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](const auto& a, const auto& b) {
                             return weight_key(a) == weight_key(b);
                           }),
               cand.end());

    // A facet is confirmed when its weight LP yields no image we have not
    // seen; a fresh image cuts the facet off and forces another hull pass.
    const std::size_t before = st.points.size();
    for (const auto& w : cand) {
      if (st.out_of_time()) return finish(std::move(st.points), false);
      st.solve_weight(w);
    }
    if (st.points.size() == before)
      return finish(std::move(st.points), true);
  }
}

namespace {

BoundSet lb_set_dichotomic(const Instance& inst, Clock::time_point deadline) {
  std::vector<RelaxedSolution> points;
  const auto add_point = [&](RelaxedSolution rs) -> bool {
    for (const auto& p : points)
      if (images_close(p.image, rs.image)) return false;
    points.push_back(std::move(rs));
    return true;
  };
  RelaxedSolution a = supported_point(inst, {1, 0});
  RelaxedSolution b = supported_point(inst, {0, 1});
  add_point(a);
  const bool two = add_point(b);
  bool complete = true;
  if (two) {
    std::vector<std::pair<std::vector<double>, std::vector<double>>> stack;
    stack.emplace_back(a.image, b.image);
    while (!stack.empty()) {
      if (Clock::now() >= deadline) {
        complete = false;
        break;
      }
      auto [ya, yb] = stack.back();
      stack.pop_back();
      if (ya[0] > yb[0]) std::swap(ya, yb);
      const double w1 = ya[1] - yb[1];
      const double w2 = yb[0] - ya[0];
      if (w1 <= 1e-12 || w2 <= 1e-12) continue;
      RelaxedSolution mid = supported_point(inst, {w1, w2});
      const double lhs = w1 * mid.image[0] + w2 * mid.image[1];
      const double ref = w1 * ya[0] + w2 * ya[1];
      if (lhs < ref - 1e-7 * (1.0 + std::fabs(ref)) && add_point(mid)) {
        stack.emplace_back(ya, points.back().image);
        stack.emplace_back(points.back().image, yb);
      }
    }
  }
  return finish(std::move(points), complete);
}

}  // namespace

}  // namespace triobj
