#pragma once

#include <cstddef>
#include <vector>

namespace secrecy {

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
};

struct RateTriple {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Upper-right boundary of a rate region: points sorted by R2 ascending with
/// R1 non-increasing, plus the index of the generating parameter per point.
struct RateRegion {
  std::vector<RatePoint> boundary;
  std::vector<std::size_t> generator;  // parallel to boundary
};

/// Upper-right convex frontier (monotone chain) of a point cloud.
/// Returns indices into `points`, sorted by R2 ascending, R1 non-increasing;
/// dominated and hull-interior points are dropped.
std::vector<std::size_t> upper_right_hull(const std::vector<RatePoint>& points);

/// True if q is dominated by (or equal to, within tol) some convex
/// combination of the frontier plus free disposal towards the origin.
bool hull_dominates(const std::vector<RatePoint>& frontier, const RatePoint& q,
                    double tol);

}  // namespace secrecy
