#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/rates.hpp"

namespace secrecy {

/// Auxiliary decomposition P(u)P(x|u) for the degraded region.
struct AuxiliaryDecomposition {
  Pmf p_u;
  DiscreteChannel p_x_given_u;  // rows indexed by u, columns by x
};

std::string serialize(const AuxiliaryDecomposition& dec);

/// (max(0, I(X;Y1|U)-I(X;Z|U)), max(0, I(U;Y2)-I(U;Z))) for the induced
/// joint over (U,X,Y1,Y2,Z); consumes only the marginal kernels.
RatePoint evaluate_degraded_pair(const BceChannel& bce,
                                 const AuxiliaryDecomposition& dec);

struct SearchConfig {
  int grid_resolution = 16;       // simplex step 1/grid_resolution
  int random_samples = 2000;
  int refine_iters = 50;
  std::vector<double> mu_grid = {1.0, 1.5, 2.0, 4.0, 8.0};
  std::uint64_t seed = 0;
  std::size_t u_cap = 0;          // 0 means |X| + 1
  std::size_t grid_budget = 1u << 20;  // max grid candidates; resolution is
                                       // halved (nested) until it fits
};

struct DegradedFrontierPoint {
  RatePoint rate;
  AuxiliaryDecomposition certificate;
  double mu = 0.0;  // trade-off weight this point maximized (0 = cloud extreme)
};

struct DegradedRegion {
  std::vector<DegradedFrontierPoint> frontier;  // sorted by R2 asc, R1 non-incr
  bool degradedness_verified = false;
  std::string warning;           // non-empty when the input is not degraded
  int effective_grid_resolution = 0;
};

/// Maximizes R1 + mu*R2 over gridded plus seeded random auxiliary
/// decompositions with local refinement, and returns the upper-right convex
/// frontier with a stored certificate per point.
DegradedRegion search_degraded_region(const BceChannel& bce, const SearchConfig& config);

}  // namespace secrecy
