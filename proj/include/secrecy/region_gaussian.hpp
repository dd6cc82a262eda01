#pragma once

#include "secrecy/rates.hpp"

#include <cstddef>
#include <vector>

namespace secrecy {

/// Gaussian broadcast channel with an eavesdropper: transmit power and the
/// three noise variances, ordered sigma1^2 <= sigma2^2 <= sigma3^2
/// (receiver 1 strongest, eavesdropper weakest).
struct GaussianBceParams {
  double power;
  double sigma1_sq;
  double sigma2_sq;
  double sigma3_sq;
};

struct GaussianSplit {
  double alpha;  // power fraction of the first-receiver layer, in [0,1]
};

void validate(const GaussianBceParams& p);

/// C(x) = 1/2 log2(1+x).
double half_log2_1p(double x);

/// Secrecy rate pair at a given power split.
RatePoint secret_rate_pair(const GaussianBceParams& p, const GaussianSplit& split);

/// Classical degraded Gaussian BC pair (no eavesdropper terms).
RatePoint nonsecret_rate_pair(const GaussianBceParams& p, const GaussianSplit& split);

struct GaussianBoundary {
  std::vector<double> alphas;       // generating parameter per point
  std::vector<RatePoint> secret;    // parallel to alphas
  std::vector<RatePoint> nonsecret;
  RateRegion frontier;              // pruned monotone secret frontier
};

/// Sweep alpha over [0,1] at n_points uniform samples.
GaussianBoundary region_boundary(const GaussianBceParams& p, std::size_t n_points);

}  // namespace secrecy
