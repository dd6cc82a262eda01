#pragma once

#include "secrecy/channel.hpp"

namespace secrecy {

inline constexpr double kDegradednessTolerance = 1e-9;

struct DegradednessResult {
  bool feasible = false;
  /// Best row-stochastic kernel found, with weak ~ strong * kernel.
  DiscreteChannel degrading_kernel;
  /// Frobenius norm of strong * kernel - weak; the infeasibility certificate
  /// when feasible is false.
  double residual = 0.0;
};

/// Stochastic-degradedness feasibility: find row-stochastic D with
/// weak = strong * D. Solved as non-negative least squares with the
/// row-sum equality folded in, via a Lawson-Hanson active set.
DegradednessResult check_stochastically_degraded(const DiscreteChannel& strong,
                                                 const DiscreteChannel& weak,
                                                 double tolerance = kDegradednessTolerance);

}  // namespace secrecy
