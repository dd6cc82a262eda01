#include "secrecy/region_general.hpp"

#include <algorithm>
#include <cmath>

#include "secrecy/errors.hpp"
#include "secrecy/joint.hpp"
#include "secrecy/rng.hpp"

namespace secrecy {

void validate(const InnerBoundDecomposition& dec, std::size_t x_size) {
  if (dec.p_v1v2_given_u.input_size() != dec.p_u.size())
    throw ValidationError("inner decomposition: |U| mismatch");
  if (dec.p_v1v2_given_u.output_size() != dec.v1_size * dec.v2_size)
    throw ValidationError("inner decomposition: |V1 x V2| mismatch");
  if (dec.p_x_given_v1v2.input_size() != dec.v1_size * dec.v2_size)
    throw ValidationError("inner decomposition: pair kernel input mismatch");
  if (dec.p_x_given_v1v2.output_size() != x_size)
    throw ValidationError("inner decomposition: |X| mismatch");
}

namespace {

// Full joint over (U, V1, V2, X) as a JointDistribution; outputs get attached
// per term via the marginal kernels.
JointDistribution base_joint(const InnerBoundDecomposition& dec) {
  std::size_t nu = dec.p_u.size(), n1 = dec.v1_size, n2 = dec.v2_size;
  std::size_t nx = dec.p_x_given_v1v2.output_size();
  std::vector<double> mass(nu * n1 * n2 * nx, 0.0);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v1 = 0; v1 < n1; ++v1)
      for (std::size_t v2 = 0; v2 < n2; ++v2) {
        double base = dec.p_u[u] * dec.p_v1v2_given_u(u, v1 * n2 + v2);
        if (base == 0.0) continue;
        for (std::size_t x = 0; x < nx; ++x)
          mass[((u * n1 + v1) * n2 + v2) * nx + x] =
              base * dec.p_x_given_v1v2(v1 * n2 + v2, x);
      }
  return JointDistribution({"u", "v1", "v2", "x"}, {nu, n1, n2, nx}, std::move(mass));
}

JointDistribution attach_output(const JointDistribution& base, const DiscreteChannel& out,
                                const std::string& name) {
  auto dims = base.dims();
  std::size_t nx = dims.back();
  std::size_t ny = out.output_size();
  std::vector<double> mass(base.size() * ny, 0.0);
  for (std::size_t flat = 0; flat < base.size(); ++flat) {
    double p = base.mass()[flat];
    if (p == 0.0) continue;
    std::size_t x = flat % nx;
    for (std::size_t y = 0; y < ny; ++y) mass[flat * ny + y] = p * out(x, y);
  }
  auto axes = base.axes();
  axes.push_back(name);
  dims.push_back(ny);
  return JointDistribution(std::move(axes), std::move(dims), std::move(mass));
}

}  // namespace

InnerBounds evaluate_inner_bound(const BceChannel& bce,
                                 const InnerBoundDecomposition& dec) {
  validate(dec, bce.input_size());
  auto base = base_joint(dec);
  auto with_y1 = attach_output(base, bce.y1(), "y1");
  auto with_y2 = attach_output(base, bce.y2(), "y2");
  auto with_z = attach_output(base, bce.z(), "z");

  double i_u_y1 = mutual_information(with_y1, {"u"}, {"y1"});
  double i_u_y2 = mutual_information(with_y2, {"u"}, {"y2"});
  double i_u_z = mutual_information(with_z, {"u"}, {"z"});
  double i_v1_y1 = conditional_mutual_information(with_y1, {"v1"}, {"y1"}, {"u"});
  double i_v2_y2 = conditional_mutual_information(with_y2, {"v2"}, {"y2"}, {"u"});
  double i_v1_z = conditional_mutual_information(with_z, {"v1"}, {"z"}, {"u"});
  double i_v2_z = conditional_mutual_information(with_z, {"v2"}, {"z"}, {"u"});
  double i_v12_z = conditional_mutual_information(with_z, {"v1", "v2"}, {"z"}, {"u"});
  double i_v1_v2 = conditional_mutual_information(base, {"v1"}, {"v2"}, {"u"});

  double common = std::min(i_u_y1, i_u_y2) - i_u_z;
  InnerBounds b{};
  b.raw0 = common;
  b.raw1 = i_v1_y1 - i_v1_z + common;
  b.raw2 = i_v2_y2 - i_v2_z + common;
  b.raw12 = i_v1_y1 + i_v2_y2 - i_v12_z - i_v1_v2 + common;
  b.b0 = std::max(0.0, b.raw0);
  b.b1 = std::max(0.0, b.raw1);
  b.b2 = std::max(0.0, b.raw2);
  b.b12 = std::max(0.0, b.raw12);
  return b;
}

bool membership(const InnerBounds& b, const RateTriple& t) {
  if (t.r0 < 0.0 || t.r1 < 0.0 || t.r2 < 0.0) return false;
  return t.r0 <= b.b0 && t.r0 + t.r1 <= b.b1 && t.r0 + t.r2 <= b.b2 &&
         t.r0 + t.r1 + t.r2 <= b.b12;
}

bool membership(const BceChannel& bce, const InnerBoundDecomposition& dec,
                const RateTriple& triple) {
  return membership(evaluate_inner_bound(bce, dec), triple);
}

std::vector<RateTriple> bound_vertices(const InnerBounds& b) {
  std::vector<RateTriple> verts;
  auto add = [&](double r0, double r1, double r2) {
    r1 = std::max(0.0, r1);
    r2 = std::max(0.0, r2);
    verts.push_back({r0, r1, r2});
  };
  for (double r0 : {0.0, b.b0}) {
    double c1 = b.b1 - r0, c2 = b.b2 - r0, c12 = b.b12 - r0;
    if (c1 < 0.0 || c2 < 0.0 || c12 < 0.0) continue;
    add(r0, 0.0, 0.0);
    add(r0, std::min(c1, c12), 0.0);
    add(r0, 0.0, std::min(c2, c12));
    if (c1 + c2 > c12) {
      if (c12 - c2 >= 0.0) add(r0, c12 - c2, c2);
      if (c12 - c1 >= 0.0) add(r0, c1, c12 - c1);
    } else {
      add(r0, c1, c2);
    }
  }
  return verts;
}

InnerBoundDecomposition sample_decomposition(const InnerRegionCaps& caps,
                                             std::size_t x_size, Rng& rng) {
  std::size_t pair = caps.v1 * caps.v2;
  std::vector<double> kernel_uv;
  for (std::size_t u = 0; u < caps.u; ++u) {
    auto row = rng.dirichlet(pair);
    kernel_uv.insert(kernel_uv.end(), row.begin(), row.end());
  }
  std::vector<double> kernel_x;
  for (std::size_t p = 0; p < pair; ++p) {
    auto row = rng.dirichlet(x_size);
    kernel_x.insert(kernel_x.end(), row.begin(), row.end());
  }
  return InnerBoundDecomposition{Pmf(rng.dirichlet(caps.u)), caps.v1, caps.v2,
                                 DiscreteChannel(caps.u, pair, std::move(kernel_uv)),
                                 DiscreteChannel(pair, x_size, std::move(kernel_x))};
}

std::vector<RateTriple> sample_inner_region(const BceChannel& bce,
                                            const InnerRegionCaps& caps,
                                            std::size_t samples, std::uint64_t seed) {
  if (caps.u < 2 || caps.v1 < 2 || caps.v2 < 2)
    throw ValidationError("sample_inner_region: caps must be >= 2");
  if (caps.u * caps.v1 * caps.v2 > 64)
    throw BudgetError("sample_inner_region: |U|*|V1|*|V2| exceeds 64");
  Rng rng(seed);
  std::vector<RateTriple> out;
  for (std::size_t i = 0; i < samples; ++i) {
    auto dec = sample_decomposition(caps, bce.input_size(), rng);
    auto bounds = evaluate_inner_bound(bce, dec);
    auto verts = bound_vertices(bounds);
    out.insert(out.end(), verts.begin(), verts.end());
  }
  return out;
}

}  // namespace secrecy
