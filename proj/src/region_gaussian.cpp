#include "secrecy/region_gaussian.hpp"

#include <cmath>
#include <numbers>

#include "secrecy/errors.hpp"

namespace secrecy {

void validate(const GaussianBceParams& p) {
  if (!(p.power > 0.0)) throw ValidationError("gaussian: power must be positive");
  if (!(p.sigma1_sq > 0.0)) throw ValidationError("gaussian: sigma1^2 must be positive");
  if (!(p.sigma1_sq <= p.sigma2_sq && p.sigma2_sq <= p.sigma3_sq))
    throw ValidationError("gaussian: need sigma1^2 <= sigma2^2 <= sigma3^2");
}

double half_log2_1p(double x) { return 0.5 * std::log1p(x) / std::numbers::ln2; }

RatePoint secret_rate_pair(const GaussianBceParams& p, const GaussianSplit& split) {
  validate(p);
  double a = split.alpha;
  if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("gaussian: alpha outside [0,1]");
  RatePoint r;
  r.r1 = half_log2_1p(a * p.power / p.sigma1_sq) - half_log2_1p(a * p.power / p.sigma3_sq);
  r.r2 = half_log2_1p((1.0 - a) * p.power / (a * p.power + p.sigma2_sq)) -
         half_log2_1p((1.0 - a) * p.power / (a * p.power + p.sigma3_sq));
  if (r.r1 < 0.0) r.r1 = 0.0;  // exact zero only at degenerate variance ties
  if (r.r2 < 0.0) r.r2 = 0.0;
  return r;
}

RatePoint nonsecret_rate_pair(const GaussianBceParams& p, const GaussianSplit& split) {
  validate(p);
  double a = split.alpha;
  if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("gaussian: alpha outside [0,1]");
  RatePoint r;
  r.r1 = half_log2_1p(a * p.power / p.sigma1_sq);
  r.r2 = half_log2_1p((1.0 - a) * p.power / (a * p.power + p.sigma2_sq));
  return r;
}

GaussianBoundary region_boundary(const GaussianBceParams& p, std::size_t n_points) {
  validate(p);
  if (n_points < 2) throw ValidationError("region_boundary: need n_points >= 2");
  GaussianBoundary out;
  out.alphas.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    double a = static_cast<double>(i) / static_cast<double>(n_points - 1);
    out.alphas.push_back(a);
    out.secret.push_back(secret_rate_pair(p, {a}));
    out.nonsecret.push_back(nonsecret_rate_pair(p, {a}));
  }
  auto hull = upper_right_hull(out.secret);
  for (std::size_t idx : hull) {
    out.frontier.boundary.push_back(out.secret[idx]);
    out.frontier.generator.push_back(idx);
  }
  return out;
}

}  // namespace secrecy
