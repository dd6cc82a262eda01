#include "secrecy/degraded_check.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "secrecy/errors.hpp"

namespace secrecy {
namespace {

// Solve the normal equations (A^T A) x = A^T b restricted to the passive set,
// by Gaussian elimination with partial pivoting. Sizes are tiny.
std::vector<double> solve_ls_subset(const std::vector<double>& a, std::size_t rows,
                                    std::size_t cols, const std::vector<double>& b,
                                    const std::vector<std::size_t>& passive) {
  std::size_t k = passive.size();
  std::vector<double> ata(k * k, 0.0), atb(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r)
        s += a[r * cols + passive[i]] * a[r * cols + passive[j]];
      ata[i * k + j] = ata[j * k + i] = s;
    }
    for (std::size_t r = 0; r < rows; ++r) atb[i] += a[r * cols + passive[i]] * b[r];
  }
  // elimination
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(ata[r * k + col]) > std::abs(ata[piv * k + col])) piv = r;
    if (piv != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(ata[col * k + c], ata[piv * k + c]);
      std::swap(atb[col], atb[piv]);
    }
    double d = ata[col * k + col];
    if (std::abs(d) < 1e-14) d = (d < 0 ? -1e-14 : 1e-14);
    for (std::size_t r = col + 1; r < k; ++r) {
      double f = ata[r * k + col] / d;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < k; ++c) ata[r * k + c] -= f * ata[col * k + c];
      atb[r] -= f * atb[col];
    }
  }
  std::vector<double> x(k, 0.0);
  for (std::size_t i = k; i-- > 0;) {
    double s = atb[i];
    for (std::size_t c = i + 1; c < k; ++c) s -= ata[i * k + c] * x[c];
    double d = ata[i * k + i];
    if (std::abs(d) < 1e-14) d = (d < 0 ? -1e-14 : 1e-14);
    x[i] = s / d;
  }
  return x;
}

// Lawson-Hanson NNLS: minimize ||A x - b|| subject to x >= 0.
std::vector<double> nnls(const std::vector<double>& a, std::size_t rows,
                         std::size_t cols, const std::vector<double>& b) {
  std::vector<double> x(cols, 0.0);
  std::vector<bool> passive(cols, false);
  std::vector<double> resid(b);
  const std::size_t max_outer = 3 * cols + 30;
  for (std::size_t outer = 0; outer < max_outer; ++outer) {
    // gradient w = A^T (b - A x)
    std::vector<double> w(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      double ax = 0.0;
      for (std::size_t c = 0; c < cols; ++c) ax += a[r * cols + c] * x[c];
      resid[r] = b[r] - ax;
    }
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) w[c] += a[r * cols + c] * resid[r];

    std::size_t best = cols;
    double best_w = 1e-11;
    for (std::size_t c = 0; c < cols; ++c)
      if (!passive[c] && w[c] > best_w) {
        best_w = w[c];
        best = c;
      }
    if (best == cols) break;  // KKT satisfied
    passive[best] = true;

    for (std::size_t inner = 0; inner < max_outer; ++inner) {
      std::vector<std::size_t> pidx;
      for (std::size_t c = 0; c < cols; ++c)
        if (passive[c]) pidx.push_back(c);
      auto zsub = solve_ls_subset(a, rows, cols, b, pidx);
      bool all_pos = true;
      for (double v : zsub)
        if (v <= 0.0) all_pos = false;
      if (all_pos) {
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t i = 0; i < pidx.size(); ++i) x[pidx[i]] = zsub[i];
        break;
      }
      double alpha = 1.0;
      for (std::size_t i = 0; i < pidx.size(); ++i)
        if (zsub[i] <= 0.0) {
          double xi = x[pidx[i]];
          double step = xi / (xi - zsub[i]);
          alpha = std::min(alpha, step);
        }
      for (std::size_t i = 0; i < pidx.size(); ++i) {
        x[pidx[i]] += alpha * (zsub[i] - x[pidx[i]]);
        if (x[pidx[i]] <= 1e-13) {
          x[pidx[i]] = 0.0;
          passive[pidx[i]] = false;
        }
      }
    }
  }
  return x;
}

// Dense square solve by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs) {
  std::size_t k = rhs.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(m[r * k + col]) > std::abs(m[piv * k + col])) piv = r;
    if (piv != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(m[col * k + c], m[piv * k + c]);
      std::swap(rhs[col], rhs[piv]);
    }
    double d = m[col * k + col];
    if (std::abs(d) < 1e-14) d = (d < 0 ? -1e-14 : 1e-14);
    for (std::size_t r = col + 1; r < k; ++r) {
      double f = m[r * k + col] / d;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < k; ++c) m[r * k + c] -= f * m[col * k + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(k, 0.0);
  for (std::size_t i = k; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t c = i + 1; c < k; ++c) s -= m[i * k + c] * x[c];
    double d = m[i * k + i];
    if (std::abs(d) < 1e-14) d = (d < 0 ? -1e-14 : 1e-14);
    x[i] = s / d;
  }
  return x;
}

double frobenius_residual(const DiscreteChannel& strong, const DiscreteChannel& weak,
                          const std::vector<double>& d, std::size_t n1, std::size_t n2) {
  double sq = 0.0;
  for (std::size_t x = 0; x < strong.input_size(); ++x)
    for (std::size_t y2 = 0; y2 < n2; ++y2) {
      double v = 0.0;
      for (std::size_t y1 = 0; y1 < n1; ++y1) v += strong(x, y1) * d[y1 * n2 + y2];
      double diff = v - weak(x, y2);
      sq += diff * diff;
    }
  return std::sqrt(sq);
}

}  // namespace

DegradednessResult check_stochastically_degraded(const DiscreteChannel& strong,
                                                 const DiscreteChannel& weak,
                                                 double tolerance) {
  if (strong.input_size() != weak.input_size())
    throw ValidationError("degradedness check: input alphabets differ");
  std::size_t nx = strong.input_size();
  std::size_t n1 = strong.output_size();
  std::size_t n2 = weak.output_size();

  // Stacked least squares over d = vec(D), row-major (y1, y2):
  //   strong * D = weak          (nx * n2 equations)
  //   row sums of D = 1, weighted (n1 equations)
  const double row_weight = 1e4;
  std::size_t rows = nx * n2 + n1;
  std::size_t cols = n1 * n2;
  std::vector<double> a(rows * cols, 0.0), b(rows, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y2 = 0; y2 < n2; ++y2) {
      std::size_t r = x * n2 + y2;
      for (std::size_t y1 = 0; y1 < n1; ++y1) a[r * cols + y1 * n2 + y2] = strong(x, y1);
      b[r] = weak(x, y2);
    }
  for (std::size_t y1 = 0; y1 < n1; ++y1) {
    std::size_t r = nx * n2 + y1;
    for (std::size_t y2 = 0; y2 < n2; ++y2) a[r * cols + y1 * n2 + y2] = row_weight;
    b[r] = row_weight;
  }

  auto d = nnls(a, rows, cols, b);

  // Polish: the row-sum weighting biases the NNLS optimum by O(1/weight^2).
  // On the converged support, re-solve the unweighted least squares with the
  // row sums as exact equality constraints (KKT system); keep the polish only
  // if it stays non-negative.
  {
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols; ++c)
      if (d[c] > 1e-10) support.push_back(c);
    std::size_t k = support.size();
    std::size_t dim = k + n1;
    std::vector<double> kkt(dim * dim, 0.0), rhs(dim, 0.0);
    std::size_t eq_rows = nx * n2;  // unweighted equations only
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < eq_rows; ++r)
          s += a[r * cols + support[i]] * a[r * cols + support[j]];
        kkt[i * dim + j] = kkt[j * dim + i] = s;
      }
      for (std::size_t r = 0; r < eq_rows; ++r)
        rhs[i] += a[r * cols + support[i]] * b[r];
      std::size_t y1 = support[i] / n2;
      kkt[i * dim + k + y1] = kkt[(k + y1) * dim + i] = 1.0;
    }
    for (std::size_t y1 = 0; y1 < n1; ++y1) rhs[k + y1] = 1.0;
    auto sol = solve_dense(std::move(kkt), std::move(rhs));
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i)
      if (sol[i] < -1e-12) ok = false;
    // every row needs at least one support entry for the constraint to hold
    std::vector<bool> covered(n1, false);
    for (std::size_t c : support) covered[c / n2] = true;
    for (bool cvr : covered) ok = ok && cvr;
    if (ok) {
      std::fill(d.begin(), d.end(), 0.0);
      for (std::size_t i = 0; i < k; ++i) d[support[i]] = std::max(0.0, sol[i]);
    }
  }

  // restore exact row-stochasticity, then judge by the true residual
  for (std::size_t y1 = 0; y1 < n1; ++y1) {
    double sum = 0.0;
    for (std::size_t y2 = 0; y2 < n2; ++y2) sum += d[y1 * n2 + y2];
    if (sum <= 0.0) {
      for (std::size_t y2 = 0; y2 < n2; ++y2) d[y1 * n2 + y2] = 1.0 / n2;
    } else {
      for (std::size_t y2 = 0; y2 < n2; ++y2) d[y1 * n2 + y2] /= sum;
    }
  }

  DegradednessResult result{false, DiscreteChannel(n1, n2, d), 0.0};
  result.residual = frobenius_residual(strong, weak, d, n1, n2);
  result.feasible = result.residual <= tolerance;
  return result;
}

}  // namespace secrecy
