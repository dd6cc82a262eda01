#include "secrecy/region_degraded.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "secrecy/degraded_check.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/rng.hpp"

namespace secrecy {

namespace {

// I(A;B|C=all) style helpers on small dense arrays, log base 2.
double mi_from_joint(const std::vector<double>& pab, std::size_t na, std::size_t nb) {
  std::vector<double> pa(na, 0.0), pb(nb, 0.0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      pa[a] += pab[a * nb + b];
      pb[b] += pab[a * nb + b];
    }
  double mi = 0.0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      double p = pab[a * nb + b];
      if (p > 0.0) mi += p * std::log2(p / (pa[a] * pb[b]));
    }
  return mi < 0.0 ? 0.0 : mi;
}

// I(X;Y|U) from p(u,x) and a kernel X->Y.
double cmi_x_out_given_u(const std::vector<double>& pux, std::size_t nu, std::size_t nx,
                         const DiscreteChannel& out) {
  std::size_t ny = out.output_size();
  std::vector<double> slice(nx * ny);
  double total = 0.0;
  for (std::size_t u = 0; u < nu; ++u) {
    double pu = 0.0;
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        slice[x * ny + y] = pux[u * nx + x] * out(x, y);
        pu += slice[x * ny + y];
      }
    if (pu <= 0.0) continue;
    std::vector<double> px(nx, 0.0), py(ny, 0.0);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        px[x] += slice[x * ny + y];
        py[y] += slice[x * ny + y];
      }
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        double p = slice[x * ny + y];
        if (p > 0.0) total += p * std::log2(p * pu / (px[x] * py[y]));
      }
  }
  return total < 0.0 ? 0.0 : total;
}

// I(U;Y) from p(u,x) and a kernel X->Y.
double mi_u_out(const std::vector<double>& pux, std::size_t nu, std::size_t nx,
                const DiscreteChannel& out) {
  std::size_t ny = out.output_size();
  std::vector<double> puy(nu * ny, 0.0);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t x = 0; x < nx; ++x) {
      double p = pux[u * nx + x];
      if (p == 0.0) continue;
      for (std::size_t y = 0; y < ny; ++y) puy[u * ny + y] += p * out(x, y);
    }
  return mi_from_joint(puy, nu, ny);
}

struct Candidate {
  std::vector<double> params;  // p_u (nu) then rows of p_x|u (nu*nx)
  RatePoint rate;
};

AuxiliaryDecomposition to_decomposition(const std::vector<double>& params,
                                        std::size_t nu, std::size_t nx) {
  std::vector<double> pu(params.begin(), params.begin() + nu);
  std::vector<double> kernel(params.begin() + nu, params.end());
  return AuxiliaryDecomposition{Pmf(pu), DiscreteChannel(nu, nx, kernel)};
}

RatePoint evaluate_params(const BceChannel& bce, const std::vector<double>& params,
                          std::size_t nu, std::size_t nx) {
  std::vector<double> pux(nu * nx);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t x = 0; x < nx; ++x)
      pux[u * nx + x] = params[u] * params[nu + u * nx + x];
  RatePoint r;
  r.r1 = cmi_x_out_given_u(pux, nu, nx, bce.y1()) -
         cmi_x_out_given_u(pux, nu, nx, bce.z());
  r.r2 = mi_u_out(pux, nu, nx, bce.y2()) - mi_u_out(pux, nu, nx, bce.z());
  // brackets are differences of mutual informations; anything below the
  // rounding floor is a true zero (e.g. Z identical to Y1)
  if (r.r1 < 1e-12) r.r1 = 0.0;
  if (r.r2 < 1e-12) r.r2 = 0.0;
  return r;
}

// Simplex grid: all compositions of `resolution` into `k` parts, as probabilities.
void enumerate_simplex(std::size_t k, int resolution,
                       const std::function<void(const std::vector<double>&)>& emit) {
  std::vector<int> counts(k, 0);
  std::vector<double> probs(k);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == k) {
      counts[pos] = left;
      for (std::size_t i = 0; i < k; ++i)
        probs[i] = static_cast<double>(counts[i]) / resolution;
      emit(probs);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[pos] = c;
      rec(pos + 1, left - c);
    }
  };
  rec(0, resolution);
}

std::size_t simplex_count(std::size_t k, int resolution) {
  // C(resolution + k - 1, k - 1)
  std::size_t n = 1;
  for (std::size_t i = 1; i < k; ++i)
    n = n * (resolution + i) / i;
  return n;
}

// Project a vector onto the probability simplex.
void project_simplex(std::vector<double>& v) {
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    if (u[i] - (css - 1.0) / static_cast<double>(i + 1) > 0.0) {
      rho = i + 1;
      theta = (css - 1.0) / static_cast<double>(rho);
    } else {
      css -= u[i];
    }
  }
  for (auto& x : v) x = std::max(0.0, x - theta);
  double s = 0.0;
  for (double x : v) s += x;
  for (auto& x : v) x /= s;
}

}  // namespace

std::string serialize(const AuxiliaryDecomposition& dec) {
  std::ostringstream ss;
  ss.precision(17);
  for (double p : dec.p_u.probs()) ss << p << ',';
  ss << ';';
  for (double p : dec.p_x_given_u.kernel()) ss << p << ',';
  return ss.str();
}

RatePoint evaluate_degraded_pair(const BceChannel& bce,
                                 const AuxiliaryDecomposition& dec) {
  std::size_t nu = dec.p_u.size();
  std::size_t nx = dec.p_x_given_u.output_size();
  if (dec.p_x_given_u.input_size() != nu)
    throw ValidationError("evaluate_degraded_pair: |U| mismatch");
  if (nx != bce.input_size())
    throw ValidationError("evaluate_degraded_pair: |X| mismatch");
  std::vector<double> params(dec.p_u.probs());
  params.insert(params.end(), dec.p_x_given_u.kernel().begin(),
                dec.p_x_given_u.kernel().end());
  return evaluate_params(bce, params, nu, nx);
}

DegradedRegion search_degraded_region(const BceChannel& bce, const SearchConfig& config) {
  if (config.grid_resolution <= 0)
    throw ValidationError("search: grid resolution must be positive");
  for (double mu : config.mu_grid)
    if (mu < 1.0) throw ValidationError("search: mu values must be >= 1");

  std::size_t nx = bce.input_size();
  std::size_t nu = config.u_cap ? config.u_cap : nx + 1;

  DegradedRegion region;
  auto d12 = check_stochastically_degraded(bce.y1(), bce.y2());
  auto d23 = check_stochastically_degraded(bce.y2(), bce.z());
  region.degradedness_verified = d12.feasible && d23.feasible;
  if (!region.degradedness_verified)
    region.warning =
        "channel is not stochastically degraded; region is a heuristic inner bound";

  // nested deterministic grid, thinned by halving until it fits the budget
  int resolution = config.grid_resolution;
  auto total_grid = [&](int r) {
    std::size_t n = simplex_count(nu, r);
    std::size_t per_row = simplex_count(nx, r);
    for (std::size_t i = 0; i < nu; ++i) {
      if (n > config.grid_budget / per_row + 1) return config.grid_budget + 1;
      n *= per_row;
    }
    return n;
  };
  while (resolution > 1 && total_grid(resolution) > config.grid_budget)
    resolution /= 2;
  region.effective_grid_resolution = resolution;

  std::vector<Candidate> cloud;
  // grid candidates: product of per-simplex grids
  {
    std::vector<std::vector<double>> pu_grid, row_grid;
    enumerate_simplex(nu, resolution,
                      [&](const std::vector<double>& p) { pu_grid.push_back(p); });
    enumerate_simplex(nx, resolution,
                      [&](const std::vector<double>& p) { row_grid.push_back(p); });
    std::vector<std::size_t> row_choice(nu, 0);
    std::vector<double> params(nu + nu * nx);
    for (const auto& pu : pu_grid) {
      std::fill(row_choice.begin(), row_choice.end(), 0);
      for (;;) {
        std::copy(pu.begin(), pu.end(), params.begin());
        for (std::size_t u = 0; u < nu; ++u)
          std::copy(row_grid[row_choice[u]].begin(), row_grid[row_choice[u]].end(),
                    params.begin() + nu + u * nx);
        cloud.push_back({params, evaluate_params(bce, params, nu, nx)});
        std::size_t pos = 0;
        while (pos < nu && ++row_choice[pos] == row_grid.size()) {
          row_choice[pos] = 0;
          ++pos;
        }
        if (pos == nu) break;
      }
    }
  }
  // seeded random candidates (prefix-stable in random_samples)
  {
    Rng rng(config.seed);
    for (int i = 0; i < config.random_samples; ++i) {
      std::vector<double> params = rng.dirichlet(nu);
      for (std::size_t u = 0; u < nu; ++u) {
        auto row = rng.dirichlet(nx);
        params.insert(params.end(), row.begin(), row.end());
      }
      cloud.push_back({params, evaluate_params(bce, params, nu, nx)});
    }
  }

  auto objective = [](const RatePoint& r, double mu) { return r.r1 + mu * r.r2; };

  // local refinement per trade-off weight
  std::vector<Candidate> refined;
  for (double mu : config.mu_grid) {
    std::size_t best = 0;
    double best_obj = -1.0;
    std::string best_ser;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      double obj = objective(cloud[i].rate, mu);
      if (obj > best_obj + 1e-15) {
        best = i;
        best_obj = obj;
        best_ser.clear();
      } else if (obj > best_obj - 1e-15) {
        // tie: lexicographically smallest serialized decomposition
        if (best_ser.empty())
          best_ser = serialize(to_decomposition(cloud[best].params, nu, nx));
        auto ser = serialize(to_decomposition(cloud[i].params, nu, nx));
        if (ser < best_ser) {
          best = i;
          best_ser = ser;
        }
      }
    }
    Candidate cur = cloud[best];
    double step = 1.0 / (2.0 * resolution);
    double cur_obj = objective(cur.rate, mu);
    for (int iter = 0; iter < config.refine_iters; ++iter) {
      bool improved = false;
      for (std::size_t coord = 0; coord < cur.params.size(); ++coord) {
        for (double sign : {+1.0, -1.0}) {
          auto trial = cur.params;
          trial[coord] += sign * step;
          // re-project the block the coordinate belongs to
          if (coord < nu) {
            std::vector<double> blk(trial.begin(), trial.begin() + nu);
            project_simplex(blk);
            std::copy(blk.begin(), blk.end(), trial.begin());
          } else {
            std::size_t u = (coord - nu) / nx;
            auto first = trial.begin() + nu + u * nx;
            std::vector<double> blk(first, first + nx);
            project_simplex(blk);
            std::copy(blk.begin(), blk.end(), first);
          }
          RatePoint rate = evaluate_params(bce, trial, nu, nx);
          double obj = objective(rate, mu);
          if (obj > cur_obj + 1e-15) {
            cur.params = trial;
            cur.rate = rate;
            cur_obj = obj;
            improved = true;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-10) break;
      }
    }
    refined.push_back(cur);
  }

  // hull over the cloud plus refinements
  std::vector<RatePoint> points;
  points.reserve(cloud.size() + refined.size());
  std::vector<const Candidate*> owners;
  for (const auto& c : cloud) {
    points.push_back(c.rate);
    owners.push_back(&c);
  }
  for (const auto& c : refined) {
    points.push_back(c.rate);
    owners.push_back(&c);
  }
  auto hull = upper_right_hull(points);
  for (std::size_t idx : hull) {
    DegradedFrontierPoint fp{owners[idx]->rate,
                             to_decomposition(owners[idx]->params, nu, nx), 0.0};
    if (idx >= cloud.size()) fp.mu = config.mu_grid[idx - cloud.size()];
    region.frontier.push_back(std::move(fp));
  }
  if (region.frontier.empty())
    region.frontier.push_back(
        {RatePoint{0.0, 0.0}, to_decomposition(cloud.front().params, nu, nx), 0.0});
  return region;
}

}  // namespace secrecy
