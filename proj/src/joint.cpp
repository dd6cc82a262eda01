#include "secrecy/joint.hpp"

#include <algorithm>
#include <cmath>

#include "secrecy/errors.hpp"

namespace secrecy {

JointDistribution::JointDistribution(std::vector<std::string> axes,
                                     std::vector<std::size_t> dims,
                                     std::vector<double> mass)
    : axes_(std::move(axes)), dims_(std::move(dims)), mass_(std::move(mass)) {
  if (axes_.size() != dims_.size())
    throw ValidationError("JointDistribution: axes/dims mismatch");
  std::size_t total = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw ValidationError("JointDistribution: empty axis");
    total *= d;
  }
  if (mass_.size() != total)
    throw ValidationError("JointDistribution: tensor size mismatch");
  double sum = 0.0;
  for (double p : mass_) {
    if (!(p >= 0.0)) throw ValidationError("JointDistribution: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTolerance)
    throw ValidationError("JointDistribution: total mass not 1");
  for (std::size_t i = 0; i < axes_.size(); ++i)
    for (std::size_t j = i + 1; j < axes_.size(); ++j)
      if (axes_[i] == axes_[j])
        throw UsageError("JointDistribution: duplicate axis name " + axes_[i]);
}

std::size_t JointDistribution::axis_index(const std::string& name) const {
  auto it = std::find(axes_.begin(), axes_.end(), name);
  if (it == axes_.end()) throw UsageError("unknown axis: " + name);
  return static_cast<std::size_t>(it - axes_.begin());
}

JointDistribution JointDistribution::marginal(const std::vector<std::string>& keep) const {
  std::vector<std::size_t> keep_idx;
  std::vector<std::size_t> keep_dims;
  for (const auto& name : keep) {
    keep_idx.push_back(axis_index(name));
    keep_dims.push_back(dims_[keep_idx.back()]);
  }
  std::size_t out_size = 1;
  for (std::size_t d : keep_dims) out_size *= d;
  std::vector<double> out(out_size, 0.0);

  std::vector<std::size_t> strides(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;) strides[i - 1] = strides[i] * dims_[i];

  for (std::size_t flat = 0; flat < mass_.size(); ++flat) {
    std::size_t out_flat = 0;
    for (std::size_t k = 0; k < keep_idx.size(); ++k) {
      std::size_t coord = (flat / strides[keep_idx[k]]) % dims_[keep_idx[k]];
      out_flat = out_flat * keep_dims[k] + coord;
    }
    out[out_flat] += mass_[flat];
  }
  return JointDistribution(keep, keep_dims, std::move(out));
}

double entropy(const JointDistribution& joint) {
  double h = 0.0;
  for (double p : joint.mass())
    if (p > 0.0) h -= p * std::log2(p);
  return h < 0.0 ? 0.0 : h;
}

namespace {

void check_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) throw UsageError("axis sets overlap on " + x);
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

double mutual_information(const JointDistribution& joint,
                          const std::vector<std::string>& axes_a,
                          const std::vector<std::string>& axes_b) {
  check_disjoint(axes_a, axes_b);
  auto ab = joint.marginal(concat(axes_a, axes_b));
  auto a = ab.marginal(axes_a);
  auto b = ab.marginal(axes_b);
  std::size_t nb = 1;
  for (std::size_t i = axes_a.size(); i < ab.dims().size(); ++i) nb *= ab.dims()[i];
  double mi = 0.0;
  for (std::size_t flat = 0; flat < ab.size(); ++flat) {
    double p = ab.mass()[flat];
    if (p <= 0.0) continue;
    double pa = a.mass()[flat / nb];
    double pb = b.mass()[flat % nb];
    mi += p * std::log2(p / (pa * pb));
  }
  return mi < 0.0 ? 0.0 : mi;
}

double conditional_mutual_information(const JointDistribution& joint,
                                      const std::vector<std::string>& axes_a,
                                      const std::vector<std::string>& axes_b,
                                      const std::vector<std::string>& axes_c) {
  check_disjoint(axes_a, axes_b);
  check_disjoint(axes_a, axes_c);
  check_disjoint(axes_b, axes_c);
  // order: C, A, B so conditional slices are contiguous blocks
  auto cab = joint.marginal(concat(concat(axes_c, axes_a), axes_b));
  std::size_t nc = 1, na = 1, nb = 1;
  std::size_t i = 0;
  for (; i < axes_c.size(); ++i) nc *= cab.dims()[i];
  for (; i < axes_c.size() + axes_a.size(); ++i) na *= cab.dims()[i];
  for (; i < cab.dims().size(); ++i) nb *= cab.dims()[i];

  double total = 0.0;
  std::vector<double> slice(na * nb);
  for (std::size_t c = 0; c < nc; ++c) {
    double pc = 0.0;
    for (std::size_t k = 0; k < na * nb; ++k) {
      slice[k] = cab.mass()[c * na * nb + k];
      pc += slice[k];
    }
    if (pc <= 0.0) continue;  // zero-probability slice contributes 0
    std::vector<double> pa(na, 0.0), pb(nb, 0.0);
    for (std::size_t ai = 0; ai < na; ++ai)
      for (std::size_t bi = 0; bi < nb; ++bi) {
        pa[ai] += slice[ai * nb + bi];
        pb[bi] += slice[ai * nb + bi];
      }
    double mi = 0.0;
    for (std::size_t ai = 0; ai < na; ++ai)
      for (std::size_t bi = 0; bi < nb; ++bi) {
        double p = slice[ai * nb + bi];
        if (p > 0.0) mi += p * std::log2(p * pc / (pa[ai] * pb[bi]));
      }
    total += mi;
  }
  return total < 0.0 ? 0.0 : total;
}

}  // namespace secrecy
