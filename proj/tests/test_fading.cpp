#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "secrecy/errors.hpp"
#include "secrecy/fading.hpp"

using namespace secrecy;

namespace {

// Rayleigh fading, eavesdropper gain 0.5, unit power budget
FadingSpec base_spec() {
  FadingSpec spec;
  spec.s_prime = 0.5;
  spec.power = 1.0;
  return spec;
}

// support endpoints and reference rates pinned from a high-precision oracle
constexpr double kS0 = 0.780776406404415;
constexpr double kS1 = 1.5;
constexpr double kLayerRate14 = 0.211072463188763;  // bits, cumulative at s = 1.4
constexpr double kAverageRate = 0.079013554051819;  // bits

// cell widths matching the optimizer's profile convention
std::vector<double> cell_powers(const PowerProfile& p) {
  const auto& g = p.grid;
  std::size_t n = g.size();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double left = k == 0 ? std::max(0.0, 2.0 * g[0] - g[1]) : 0.5 * (g[k - 1] + g[k]);
    double right =
        k + 1 == n ? g[k] + 0.5 * (g[k] - g[k - 1]) : 0.5 * (g[k] + g[k + 1]);
    out[k] = p.density[k] * (right - left);
  }
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate(base_spec()));
  FadingSpec bad_power = base_spec();
  bad_power.power = 0.0;
  CHECK_THROWS_AS(validate(bad_power), ValidationError);
  FadingSpec bad_sp = base_spec();
  bad_sp.s_prime = -0.1;
  CHECK_THROWS_AS(validate(bad_sp), ValidationError);
  FadingSpec custom;
  custom.family = FadingSpec::Family::Custom;
  CHECK_THROWS_AS(validate(custom), ValidationError);
  // cdf inconsistent with pdf
  custom.pdf = [](double s) { return s < 0.0 ? 0.0 : std::exp(-s); };
  custom.cdf = [](double s) {
    double f = s < 0.0 ? 0.0 : -std::expm1(-s);
    return f * f;
  };
  CHECK_THROWS_AS(validate(custom), ValidationError);
}

TEST_CASE("rayleigh density and distribution") {
  auto spec = base_spec();
  CHECK(spec.pdf_at(-1.0) == 0.0);
  CHECK(spec.cdf_at(0.0) == 0.0);
  CHECK(spec.pdf_at(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(spec.cdf_at(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK(gain_truncation(spec) == doctest::Approx(-std::log(1e-6)).epsilon(1e-12));
}

TEST_CASE("support window endpoints match the pinned oracle") {
  auto [s0, s1] = rayleigh_endpoints(base_spec());
  CHECK(std::abs(s0 - kS0) <= 1e-12);
  CHECK(s1 == kS1);
  FadingSpec custom;
  custom.family = FadingSpec::Family::Custom;
  custom.pdf = [](double s) { return s < 0.0 ? 0.0 : std::exp(-s); };
  custom.cdf = [](double s) { return s < 0.0 ? 0.0 : -std::expm1(-s); };
  CHECK_THROWS_AS(rayleigh_endpoints(custom), UsageError);
}

TEST_CASE("huge power pushes the window start toward zero") {
  FadingSpec spec;
  spec.s_prime = 0.0;
  spec.power = 1e9;
  auto [s0, s1] = rayleigh_endpoints(spec);
  CHECK(s0 <= 1e-4);
  CHECK(s0 > 0.0);
  CHECK(s1 == 1.0);
}

TEST_CASE("optimal interference profile") {
  auto spec = base_spec();
  // hits the budget at s0 and vanishes at s1 (probe a hair inside the window
  // so the pinned 15-digit endpoint cannot fall a ulp outside it)
  CHECK(optimal_interference(kS0 + 1e-9, spec) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(optimal_interference(kS1, spec) == doctest::Approx(0.0).epsilon(1e-9));
  // zero outside the window
  CHECK(optimal_interference(0.1, spec) == 0.0);
  CHECK(optimal_interference(2.0, spec) == 0.0);
  // non-increasing and within [0, P] inside
  double prev = spec.power;
  for (int i = 0; i <= 200; ++i) {
    double x = kS0 + 1e-9 + (kS1 - kS0 - 1e-9) * i / 200.0;
    double v = optimal_interference(x, spec);
    CHECK(v >= 0.0);
    CHECK(v <= spec.power + 1e-12);
    CHECK(v <= prev + 1e-9);
    prev = v;
  }
  CHECK_THROWS_AS(optimal_interference(-0.5, spec), ValidationError);
}

TEST_CASE("custom family reproduces the rayleigh interference") {
  auto spec = base_spec();
  FadingSpec custom;
  custom.family = FadingSpec::Family::Custom;
  custom.s_prime = spec.s_prime;
  custom.power = spec.power;
  custom.pdf = [](double s) { return s < 0.0 ? 0.0 : std::exp(-s); };
  custom.cdf = [](double s) { return s < 0.0 ? 0.0 : -std::expm1(-s); };
  for (double x : {0.85, 1.0, 1.2, 1.4}) {
    CHECK(optimal_interference(x, custom) ==
          doctest::Approx(optimal_interference(x, spec)).epsilon(1e-6));
  }
}

TEST_CASE("power density is the negative interference slope") {
  auto spec = base_spec();
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    double s = kS0 + (kS1 - kS0) * i / 101.0;
    double h = 1e-6;
    double fd =
        -(optimal_interference(s + h, spec) - optimal_interference(s - h, spec)) /
        (2.0 * h);
    double rho = rayleigh_power_density(s, spec);
    worst = std::max(worst, std::abs(fd - rho) / std::max(1.0, std::abs(rho)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("density integrates to the power budget") {
  auto spec = base_spec();
  // independent composite Simpson over the support window
  const int n = 20000;  // even
  double h = (kS1 - kS0) / n;
  double total = rayleigh_power_density(kS0 + 1e-15, spec) +
                 rayleigh_power_density(kS1 - 1e-15, spec);
  for (int i = 1; i < n; ++i)
    total += (i % 2 == 1 ? 4.0 : 2.0) * rayleigh_power_density(kS0 + i * h, spec);
  total *= h / 3.0;
  CHECK(std::abs(total - spec.power) <= 1e-6);
}

TEST_CASE("closed form profile passes validation") {
  auto spec = base_spec();
  auto profile = closed_form_profile(spec, 256);
  CHECK_NOTHROW(validate_profile(profile));
  CHECK(profile.closed_form_rayleigh);
  CHECK(profile.grid.front() == doctest::Approx(kS0).epsilon(1e-12));
  CHECK(profile.grid.back() == doctest::Approx(kS1).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form_profile(spec, 1), ValidationError);

  PowerProfile broken = profile;
  broken.interference[3] = broken.interference[2] + 1.0;
  CHECK_THROWS_AS(validate_profile(broken), ValidationError);
  broken = profile;
  broken.grid[5] = broken.grid[4];
  CHECK_THROWS_AS(validate_profile(broken), ValidationError);
}

TEST_CASE("cumulative layer rate") {
  auto spec = base_spec();
  auto profile = closed_form_profile(spec);
  CHECK(layer_rate(1.4, spec, profile) ==
        doctest::Approx(kLayerRate14).epsilon(1e-6));
  // zero below the window, monotone inside, flat beyond s1
  CHECK(layer_rate(kS0, spec, profile) == doctest::Approx(0.0).epsilon(1e-9));
  double prev = 0.0;
  for (double s : {0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5}) {
    double r = layer_rate(s, spec, profile);
    CHECK(r >= prev - 1e-12);
    prev = r;
  }
  CHECK(layer_rate(3.0, spec, profile) ==
        doctest::Approx(layer_rate(kS1, spec, profile)).epsilon(1e-7));
}

TEST_CASE("average rate matches the pinned oracle") {
  auto spec = base_spec();
  auto profile = closed_form_profile(spec);
  CHECK(average_rate(spec, profile) == doctest::Approx(kAverageRate).epsilon(1e-6));
}

TEST_CASE("optimizer agrees with the closed form when no eavesdropper") {
  FadingSpec spec;
  spec.s_prime = 0.0;
  spec.power = 1.0;
  auto closed = closed_form_profile(spec);
  double reference = average_rate(spec, closed);
  auto result = optimize_profile_numerical(spec, 100);
  CHECK(result.iterations > 0);
  CHECK(std::abs(result.objective - reference) / reference <= 1e-2);
}

TEST_CASE("optimizer output is a discrete maximum") {
  auto spec = base_spec();
  auto result = optimize_profile_numerical(spec, 80);
  auto powers = cell_powers(result.profile);
  double obj = discretized_objective(spec, result.profile.grid, powers);
  CHECK(obj == doctest::Approx(result.objective).epsilon(1e-9));
  // moving 1% of the heaviest layer's power anywhere never helps
  std::size_t heavy = 0;
  for (std::size_t k = 1; k < powers.size(); ++k)
    if (powers[k] > powers[heavy]) heavy = k;
  double shift = 0.01 * powers[heavy];
  REQUIRE(shift > 0.0);
  for (std::size_t target : {std::size_t{0}, powers.size() / 2, powers.size() - 1}) {
    if (target == heavy) continue;
    auto perturbed = powers;
    perturbed[heavy] -= shift;
    perturbed[target] += shift;
    CHECK(discretized_objective(spec, result.profile.grid, perturbed) <= obj + 1e-9);
  }
}

TEST_CASE("optimizer is deterministic") {
  auto spec = base_spec();
  auto a = optimize_profile_numerical(spec, 40);
  auto b = optimize_profile_numerical(spec, 40);
  CHECK(a.objective == b.objective);
  CHECK(a.iterations == b.iterations);
  REQUIRE(a.profile.density.size() == b.profile.density.size());
  for (std::size_t k = 0; k < a.profile.density.size(); ++k)
    CHECK(a.profile.density[k] == b.profile.density[k]);
}
