#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace secrecy {

/// Slowly fading wiretap channel description: distribution of the main
/// channel power gain, fixed eavesdropper power gain, and power budget.
struct FadingSpec {
  enum class Family { Rayleigh, Custom };
  Family family = Family::Rayleigh;
  double s_prime = 0.0;
  double power = 1.0;
  std::function<double(double)> pdf;  // required for Custom
  std::function<double(double)> cdf;

  double pdf_at(double s) const;
  double cdf_at(double s) const;
};

void validate(const FadingSpec& spec);

/// Gain above which the fading tail mass drops below 1e-6.
double gain_truncation(const FadingSpec& spec);

/// Layer power density rho and residual interference I sampled on a gain grid.
struct PowerProfile {
  std::vector<double> grid;          // strictly increasing gains
  std::vector<double> interference;  // I at grid points, non-increasing
  std::vector<double> density;       // rho at grid points
  bool closed_form_rayleigh = false; // evaluate via closed forms, not the grid
  double s_prime = 0.0;
  double power = 0.0;
};

void validate_profile(const PowerProfile& profile);

/// Stationary interference profile
///   I(x) = (1 - F(x) - (x-s')f(x)) / (s'(1-F(x)) + x(x-s')f(x))
/// on max{s', x0} <= x <= x1, else 0; clipped to [0, P].
double optimal_interference(double x, const FadingSpec& spec);

/// Closed-form Rayleigh window endpoints (s0 with I(s0)=P, s1 = 1+s').
std::pair<double, double> rayleigh_endpoints(const FadingSpec& spec);

/// Closed-form Rayleigh layer power density on the support window, else 0.
double rayleigh_power_density(double s, const FadingSpec& spec);

/// Sample the closed-form Rayleigh profile on a uniform grid over its support.
PowerProfile closed_form_profile(const FadingSpec& spec, std::size_t n_points = 512);

/// Cumulative rate decodable at main-channel gain s, in bits:
///   (1/2) \int_0^s [ u rho/(1+uI) - s' rho/(1+s'I) ]^+ du / ln 2.
double layer_rate(double s, const FadingSpec& spec, const PowerProfile& profile);

/// Average rate over the fading distribution, (1/2) \int (1-F) G, in bits.
double average_rate(const FadingSpec& spec, const PowerProfile& profile);

struct OptimizeOptions {
  std::size_t max_iters = 20000;
  double rel_tol = 1e-10;
  double armijo = 1e-4;
  std::vector<double> grid;  // optional explicit gain grid (overrides n_layers)
};

struct OptimizeResult {
  PowerProfile profile;
  double objective = 0.0;  // bits
  std::size_t iterations = 0;
  bool converged = false;
};

/// Discretized maximization of the average secret rate over non-negative
/// layer powers summing to P, by projected gradient ascent with Armijo
/// backtracking. Per-layer rates keep the exact log form so that the
/// discrete objective converges to the continuum functional.
OptimizeResult optimize_profile_numerical(const FadingSpec& spec,
                                          std::size_t n_layers,
                                          const OptimizeOptions& opts = {});

/// The discretized objective (bits) for given layer gains and powers;
/// exposed for perturbation checks.
double discretized_objective(const FadingSpec& spec,
                             const std::vector<double>& gains,
                             const std::vector<double>& powers);

}  // namespace secrecy
