#include "secrecy/fading.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;  // 1/ln 2
constexpr double kQuadTol = 1e-9;
constexpr int kQuadMaxDepth = 20;  // up to 2^20 panels

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth >= kQuadMaxDepth) {
    // edge panels around integrand jumps land here with residuals far below
    // the global tolerance; only genuinely stuck panels are an error
    if (std::abs(delta) > 1e-6)
      throw NumericalError("adaptive quadrature did not converge; residual " +
                           std::to_string(std::abs(delta)));
    return left + right + delta / 15.0;
  }
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = kQuadTol) {
  if (b <= a) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

double bisect(const std::function<double(double)>& g, double lo, double hi,
              double tol = 1e-12) {
  double glo = g(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0.0) == (glo > 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double FadingSpec::pdf_at(double s) const {
  if (family == Family::Rayleigh) return s < 0.0 ? 0.0 : std::exp(-s);
  return pdf(s);
}

double FadingSpec::cdf_at(double s) const {
  if (family == Family::Rayleigh) return s < 0.0 ? 0.0 : -std::expm1(-s);
  return cdf(s);
}

void validate(const FadingSpec& spec) {
  if (!(spec.power > 0.0)) throw ValidationError("fading: power must be positive");
  if (!(spec.s_prime >= 0.0)) throw ValidationError("fading: s' must be >= 0");
  if (spec.family == FadingSpec::Family::Custom && (!spec.pdf || !spec.cdf))
    throw ValidationError("fading: custom family needs pdf and cdf");
  if (std::abs(spec.cdf_at(0.0)) > 1e-9)
    throw ValidationError("fading: F(0) must be 0");
  double prev = 0.0;
  double smax = gain_truncation(spec);
  for (int i = 1; i <= 8; ++i) {
    double s = smax * i / 8.0;
    double fs = spec.cdf_at(s);
    if (fs + 1e-12 < prev) throw ValidationError("fading: cdf not non-decreasing");
    if (spec.pdf_at(s) < -1e-12) throw ValidationError("fading: negative pdf");
    double integral = adaptive_simpson([&](double u) { return spec.pdf_at(u); }, 0.0, s,
                                       1e-9);
    if (std::abs(integral - fs) > 1e-6)
      throw ValidationError("fading: pdf/cdf inconsistent at probe point");
    prev = fs;
  }
}

double gain_truncation(const FadingSpec& spec) {
  if (spec.family == FadingSpec::Family::Rayleigh) return -std::log(1e-6);
  double lo = 0.0, hi = 1.0;
  while (1.0 - spec.cdf_at(hi) > 1e-6 && hi < 1e12) hi *= 2.0;
  return bisect([&](double s) { return (1.0 - spec.cdf_at(s)) - 1e-6; }, lo, hi, 1e-9);
}

std::pair<double, double> rayleigh_endpoints(const FadingSpec& spec) {
  if (spec.family != FadingSpec::Family::Rayleigh)
    throw UsageError("rayleigh_endpoints: Rayleigh family only");
  double p = spec.power, sp = spec.s_prime;
  double disc = p * p * sp * sp + 2.0 * p * (1.0 - 2.0 * p) * sp + 4.0 * p + 1.0;
  double s0 = (-1.0 + p * sp + std::sqrt(disc)) / (2.0 * p);
  return {s0, 1.0 + sp};
}

namespace {

struct Window {
  double lo;  // max(s', x0)
  double hi;  // x1
};

double interference_formula(double x, const FadingSpec& spec) {
  double sp = spec.s_prime;
  double f = spec.pdf_at(x), tail = 1.0 - spec.cdf_at(x);
  double num = tail - (x - sp) * f;
  double den = sp * tail + x * (x - sp) * f;
  if (den <= 0.0)
    throw NumericalError(
        "optimal interference: non-positive denominator inside the support window "
        "(fading family violates the closed form's assumptions)");
  return num / den;
}

Window interference_window(const FadingSpec& spec) {
  if (spec.family == FadingSpec::Family::Rayleigh) {
    auto [s0, s1] = rayleigh_endpoints(spec);
    return {std::max(spec.s_prime, s0), s1};
  }
  double smax = gain_truncation(spec);
  double sp = spec.s_prime;
  // x1: zero of the numerator (I = 0)
  auto num = [&](double x) {
    return (1.0 - spec.cdf_at(x)) - (x - sp) * spec.pdf_at(x);
  };
  double hi = smax;
  if (num(smax) < 0.0) hi = bisect(num, sp, smax);
  // x0: I crosses the power budget (window may start at s' if it never does)
  double lo = sp + 1e-12;
  if (interference_formula(std::min(lo * 1.0000001 + 1e-9, hi), spec) > spec.power) {
    lo = bisect([&](double x) { return interference_formula(x, spec) - spec.power; },
                lo, hi);
  }
  return {std::max(sp, lo), hi};
}

}  // namespace

double optimal_interference(double x, const FadingSpec& spec) {
  validate(spec);
  if (x < 0.0) throw ValidationError("optimal_interference: x must be >= 0");
  auto w = interference_window(spec);
  if (x < w.lo || x > w.hi) return 0.0;
  double value = interference_formula(x, spec);
  return std::clamp(value, 0.0, spec.power);
}

double rayleigh_power_density(double s, const FadingSpec& spec) {
  if (spec.family != FadingSpec::Family::Rayleigh)
    throw UsageError("rayleigh_power_density: Rayleigh family only");
  auto [s0, s1] = rayleigh_endpoints(spec);
  double sp = spec.s_prime;
  if (s < std::max(sp, s0) || s > s1) return 0.0;
  double den = s * s - sp * s + sp;
  return (-s * s + 2.0 * (sp + 1.0) * s - sp * sp) / (den * den);
}

PowerProfile closed_form_profile(const FadingSpec& spec, std::size_t n_points) {
  validate(spec);
  if (spec.family != FadingSpec::Family::Rayleigh)
    throw UsageError("closed_form_profile: Rayleigh family only");
  if (n_points < 2) throw ValidationError("closed_form_profile: need >= 2 points");
  auto [s0, s1] = rayleigh_endpoints(spec);
  double lo = std::max(spec.s_prime, s0);
  PowerProfile profile;
  profile.closed_form_rayleigh = true;
  profile.s_prime = spec.s_prime;
  profile.power = spec.power;
  for (std::size_t i = 0; i < n_points; ++i) {
    double s = lo + (s1 - lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
    profile.grid.push_back(s);
    profile.interference.push_back(optimal_interference(s, spec));
    profile.density.push_back(rayleigh_power_density(s, spec));
  }
  return profile;
}

void validate_profile(const PowerProfile& profile) {
  if (profile.grid.size() < 1 || profile.grid.size() != profile.interference.size() ||
      profile.grid.size() != profile.density.size())
    throw ValidationError("profile: array size mismatch");
  for (std::size_t i = 1; i < profile.grid.size(); ++i) {
    if (!(profile.grid[i] > profile.grid[i - 1]))
      throw ValidationError("profile: grid not strictly increasing");
    if (profile.interference[i] > profile.interference[i - 1] + 1e-9)
      throw ValidationError("profile: interference not non-increasing");
  }
  if (profile.interference.front() > profile.power + 1e-9)
    throw ValidationError("profile: interference exceeds the power budget");
  if (profile.interference.back() < -1e-12)
    throw ValidationError("profile: negative terminal interference");
  double integral = 0.0;
  for (std::size_t i = 1; i < profile.grid.size(); ++i) {
    if (profile.density[i] < -1e-9) throw ValidationError("profile: negative density");
    integral += 0.5 * (profile.density[i] + profile.density[i - 1]) *
                (profile.grid[i] - profile.grid[i - 1]);
  }
  double drop = profile.interference.front() - profile.interference.back();
  if (std::abs(integral - drop) > 1e-3 * std::max(1.0, profile.power))
    throw ValidationError("profile: density does not integrate to the interference drop");
}

namespace {

struct ProfileEval {
  std::function<double(double)> interference;
  std::function<double(double)> density;
  double support_lo, support_hi;
};

ProfileEval make_eval(const FadingSpec& spec, const PowerProfile& profile) {
  if (profile.closed_form_rayleigh) {
    auto [s0, s1] = rayleigh_endpoints(spec);
    double lo = std::max(spec.s_prime, s0);
    FadingSpec copy = spec;
    return {[copy](double u) { return optimal_interference(u, copy); },
            [copy](double u) { return rayleigh_power_density(u, copy); }, lo, s1};
  }
  const auto& g = profile.grid;
  auto interp = [g](const std::vector<double>& v, double fill_lo, double fill_hi,
                    double u) {
    if (u <= g.front()) return fill_lo;
    if (u >= g.back()) return fill_hi;
    auto it = std::upper_bound(g.begin(), g.end(), u);
    std::size_t i = static_cast<std::size_t>(it - g.begin());
    double t = (u - g[i - 1]) / (g[i] - g[i - 1]);
    return v[i - 1] + t * (v[i] - v[i - 1]);
  };
  auto interference = profile.interference;
  auto density = profile.density;
  return {[g, interp, interference](double u) {
            return interp(interference, interference.front(), interference.back(), u);
          },
          [g, interp, density](double u) { return interp(density, 0.0, 0.0, u); },
          g.front(), g.back()};
}

// Positive-part integrand of the cumulative rate, in nats (no 1/2 factor).
double rate_integrand(double u, double sp, const ProfileEval& eval) {
  double rho = eval.density(u);
  if (rho <= 0.0) return 0.0;
  double interference = eval.interference(u);
  double bracket = u / (1.0 + u * interference) - sp / (1.0 + sp * interference);
  return bracket > 0.0 ? bracket * rho : 0.0;
}

// Kink locations: the bracket's sign-change root (located by bisection) plus
// the profile support edges.
std::vector<double> split_points(double a, double b, double sp, const ProfileEval& eval) {
  std::vector<double> pts{a, b};
  auto bracket = [&](double u) {
    double interference = eval.interference(u);
    return u / (1.0 + u * interference) - sp / (1.0 + sp * interference);
  };
  if (sp > a && sp < b && bracket(a) < 0.0 && bracket(b) > 0.0)
    pts.push_back(bisect(bracket, a, b, 1e-12));
  for (double edge : {eval.support_lo, eval.support_hi})
    if (edge > a && edge < b) pts.push_back(edge);
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

double layer_rate(double s, const FadingSpec& spec, const PowerProfile& profile) {
  validate(spec);
  validate_profile(profile);
  if (s < 0.0) throw ValidationError("layer_rate: s must be >= 0");
  double sp = spec.s_prime;
  auto eval = make_eval(spec, profile);
  auto pts = split_points(0.0, s, sp, eval);
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    total += adaptive_simpson([&](double u) { return rate_integrand(u, sp, eval); },
                              pts[i - 1], pts[i]);
  return 0.5 * total * kInvLn2;
}

double average_rate(const FadingSpec& spec, const PowerProfile& profile) {
  validate(spec);
  validate_profile(profile);
  double sp = spec.s_prime;
  auto eval = make_eval(spec, profile);
  double smax = std::max(gain_truncation(spec), eval.support_hi);
  auto pts = split_points(0.0, smax, sp, eval);
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    total += adaptive_simpson(
        [&](double u) {
          return (1.0 - spec.cdf_at(u)) * rate_integrand(u, sp, eval);
        },
        pts[i - 1], pts[i]);
  return 0.5 * total * kInvLn2;
}

double discretized_objective(const FadingSpec& spec, const std::vector<double>& gains,
                             const std::vector<double>& powers) {
  double sp = spec.s_prime;
  double interference = 0.0;
  for (double p : powers) interference += p;
  double total = 0.0;
  for (std::size_t k = 0; k < gains.size(); ++k) {
    interference -= powers[k];
    double u = gains[k], p = powers[k];
    double term = 0.5 * (std::log1p(u * p / (1.0 + u * interference)) -
                         std::log1p(sp * p / (1.0 + sp * interference)));
    if (term > 0.0) total += (1.0 - spec.cdf_at(u)) * term;
  }
  return total * kInvLn2;
}

namespace {

// Gradient of the discretized objective (bits) with respect to layer powers.
// Each p_m enters its own log term and the interference of every lower layer.
std::vector<double> objective_gradient(const FadingSpec& spec,
                                       const std::vector<double>& gains,
                                       const std::vector<double>& powers) {
  std::size_t n = gains.size();
  double sp = spec.s_prime;
  std::vector<double> grad(n, 0.0);
  std::vector<double> above(n, 0.0);
  double acc = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    above[k] = acc;
    acc += powers[k];
  }
  double prefix = 0.0;  // sum over lower layers of d(term)/d(interference)
  for (std::size_t k = 0; k < n; ++k) {
    double u = gains[k], p = powers[k], interference = above[k];
    double w = 1.0 - spec.cdf_at(u);
    double a = 1.0 + u * interference, b = 1.0 + sp * interference;
    double term = std::log1p(u * p / a) - std::log1p(sp * p / b);
    bool active = term > 0.0;
    grad[k] = prefix;
    if (active) {
      grad[k] += 0.5 * w * (u / (a + u * p) - sp / (b + sp * p)) * kInvLn2;
      prefix += 0.5 * w *
                (u * (1.0 / (a + u * p) - 1.0 / a) -
                 sp * (1.0 / (b + sp * p) - 1.0 / b)) *
                kInvLn2;
    }
  }
  return grad;
}

void project_scaled_simplex(std::vector<double>& p, double total) {
  std::vector<double> u(p);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double t = (css - total) / static_cast<double>(i + 1);
    if (u[i] > t) theta = t;
  }
  for (auto& x : p) x = std::max(0.0, x - theta);
}

}  // namespace

OptimizeResult optimize_profile_numerical(const FadingSpec& spec, std::size_t n_layers,
                                          const OptimizeOptions& opts) {
  validate(spec);
  std::vector<double> gains = opts.grid;
  if (gains.empty()) {
    if (n_layers < 1)
      throw ValidationError("optimize_profile_numerical: need at least 1 layer");
    // grid uniform in F so layers concentrate where the fading mass is
    for (std::size_t k = 0; k < n_layers; ++k) {
      double q = (static_cast<double>(k) + 0.5) / static_cast<double>(n_layers) *
                 (1.0 - 1e-6);
      if (spec.family == FadingSpec::Family::Rayleigh) {
        gains.push_back(-std::log1p(-q));
      } else {
        double smax = gain_truncation(spec);
        gains.push_back(
            bisect([&](double s) { return spec.cdf_at(s) - q; }, 0.0, smax, 1e-10));
      }
    }
  }
  std::size_t n = gains.size();

  // init: uniform power over [s', window top estimate]
  double top = spec.family == FadingSpec::Family::Rayleigh
                   ? 1.0 + spec.s_prime
                   : interference_window(spec).hi;
  std::vector<double> p(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (gains[k] >= spec.s_prime && gains[k] <= top) p[k] = 1.0;
  project_scaled_simplex(p, spec.power);

  double obj = discretized_objective(spec, gains, p);
  double step = 1.0;
  std::size_t it = 0;
  bool converged = false;
  for (; it < opts.max_iters; ++it) {
    auto grad = objective_gradient(spec, gains, p);
    std::vector<double> trial;
    double trial_obj = obj;
    // backtracking line search with an Armijo acceptance test
    for (;;) {
      trial = p;
      for (std::size_t k = 0; k < n; ++k) trial[k] += step * grad[k];
      project_scaled_simplex(trial, spec.power);
      trial_obj = discretized_objective(spec, gains, trial);
      double dir = 0.0;
      for (std::size_t k = 0; k < n; ++k) dir += grad[k] * (trial[k] - p[k]);
      if (trial_obj >= obj + opts.armijo * dir || step < 1e-15) break;
      step *= 0.5;
    }
    if (trial_obj > obj + std::abs(obj) * opts.rel_tol) {
      p = trial;
      obj = trial_obj;
      step *= 2.0;
    } else {
      step *= 0.5;
      if (step < 1e-15) {
        converged = true;
        break;
      }
    }
  }

  OptimizeResult result;
  result.objective = obj;
  result.iterations = it;
  result.converged = converged;
  result.profile.s_prime = spec.s_prime;
  result.profile.power = spec.power;
  result.profile.grid = gains;
  double above = 0.0;
  for (double v : p) above += v;
  for (std::size_t k = 0; k < n; ++k) {
    above -= p[k];
    result.profile.interference.push_back(above);
    double left = k == 0 ? std::max(0.0, 2.0 * gains[0] - gains[1])
                         : 0.5 * (gains[k - 1] + gains[k]);
    double right = k + 1 == n ? gains[k] + 0.5 * (gains[k] - gains[k - 1])
                              : 0.5 * (gains[k] + gains[k + 1]);
    result.profile.density.push_back(p[k] / std::max(right - left, 1e-12));
  }
  return result;
}

}  // namespace secrecy
