#include "secrecy/rates.hpp"

#include <algorithm>
#include <cmath>

namespace secrecy {

namespace {

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

}  // namespace

std::vector<std::size_t> upper_right_hull(const std::vector<RatePoint>& points) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // sort by R2 asc, then R1 desc; ties resolved toward the lower index
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].r2 != points[b].r2) return points[a].r2 < points[b].r2;
    return points[a].r1 > points[b].r1;
  });
  // Pareto pass: walking R2 upward, keep strictly decreasing-in-R1 staircase tops
  std::vector<std::size_t> pareto;
  double best_r1 = -1.0;
  for (std::size_t i = order.size(); i-- > 0;) {  // from high R2 down
    std::size_t idx = order[i];
    if (points[idx].r1 > best_r1 + 1e-15) {
      pareto.push_back(idx);
      best_r1 = points[idx].r1;
    }
  }
  std::reverse(pareto.begin(), pareto.end());  // now R2 ascending, R1 descending
  // convex pass (upper hull over the staircase)
  std::vector<std::size_t> hull;
  for (std::size_t idx : pareto) {
    while (hull.size() >= 2 &&
           cross(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <=
               1e-15)
      hull.pop_back();
    hull.push_back(idx);
  }
  return hull;
}

bool hull_dominates(const std::vector<RatePoint>& frontier, const RatePoint& q,
                    double tol) {
  if (frontier.empty()) return q.r1 <= tol && q.r2 <= tol;
  // frontier sorted by R2 asc, R1 desc; region = union of the hull's lower-left
  // set. Check q against each edge (and the axis-parallel extensions).
  double max_r1 = frontier.front().r1;
  double max_r2 = frontier.back().r2;
  if (q.r1 <= tol && q.r2 <= tol) return true;
  if (q.r1 > max_r1 + tol || q.r2 > max_r2 + tol) return false;
  if (frontier.size() == 1) return q.r1 <= max_r1 + tol && q.r2 <= max_r2 + tol;
  for (std::size_t i = 0; i + 1 < frontier.size(); ++i) {
    const auto& a = frontier[i];
    const auto& b = frontier[i + 1];
    if (q.r2 >= a.r2 - tol && q.r2 <= b.r2 + tol) {
      double t = (b.r2 == a.r2) ? 0.0 : (q.r2 - a.r2) / (b.r2 - a.r2);
      t = std::clamp(t, 0.0, 1.0);
      double edge_r1 = a.r1 + t * (b.r1 - a.r1);
      if (q.r1 <= edge_r1 + tol) return true;
    }
  }
  return q.r2 <= frontier.front().r2 + tol && q.r1 <= max_r1 + tol;
}

}  // namespace secrecy
