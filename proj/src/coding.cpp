#include "secrecy/coding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "secrecy/errors.hpp"
#include "secrecy/joint.hpp"
#include "secrecy/region_degraded.hpp"
#include "secrecy/rng.hpp"

namespace secrecy {

namespace {

JointDistribution full_joint(const InnerBoundDecomposition& dec) {
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

JointDistribution with_output(const JointDistribution& base, const DiscreteChannel& out,
                              const std::string& name) {
  auto dims = base.dims();
  std::size_t nx = dims.back(), ny = out.output_size();
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

std::size_t pow_size(std::size_t base, int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= base;
  return v;
}

}  // namespace

std::size_t realized_size(int n, double rate) {
  if (rate <= 0.0) return 1;
  double raw = std::exp2(static_cast<double>(n) * rate);
  if (raw > 1e15) throw BudgetError("realized_size: structure size overflows");
  auto size = static_cast<std::size_t>(std::llround(raw));
  return std::max<std::size_t>(1, size);
}

BinningPlan plan_binning(const BceChannel& bce, const InnerBoundDecomposition& dec,
                         int n, const RateTargets& targets) {
  validate(dec, bce.input_size());
  if (n < 1) throw ValidationError("plan_binning: block length must be >= 1");
  auto base = full_joint(dec);
  auto j_y1 = with_output(base, bce.y1(), "y1");
  auto j_y2 = with_output(base, bce.y2(), "y2");
  auto j_z = with_output(base, bce.z(), "z");

  BinningPlan plan;
  plan.n = n;
  plan.targets = targets;
  plan.u_size = dec.p_u.size();
  plan.v1_size = dec.v1_size;
  plan.v2_size = dec.v2_size;
  plan.x_size = bce.input_size();

  plan.l11 = conditional_mutual_information(j_y1, {"v1"}, {"y1"}, {"u"}) -
             conditional_mutual_information(j_z, {"v1"}, {"v2", "z"}, {"u"});
  plan.l12 = conditional_mutual_information(j_z, {"v1"}, {"z"}, {"u", "v2"});
  plan.l21 = conditional_mutual_information(j_z, {"v2"}, {"z"}, {"u", "v1"});
  plan.l22 = conditional_mutual_information(j_y2, {"v2"}, {"y2"}, {"u"}) -
             conditional_mutual_information(j_z, {"v2"}, {"v1", "z"}, {"u"});
  plan.l3 = conditional_mutual_information(base, {"v1"}, {"v2"}, {"u"});
  plan.cloud_randomization = mutual_information(j_z, {"u"}, {"z"});

  plan.m0 = realized_size(n, targets.r0);
  plan.m10 = realized_size(n, targets.r10);
  plan.m11 = realized_size(n, targets.r11);
  plan.m20 = realized_size(n, targets.r20);
  plan.m22 = realized_size(n, targets.r22);
  plan.cloud_bin = realized_size(n, plan.cloud_randomization);
  plan.b1 = realized_size(n, plan.l11);
  plan.s1 = realized_size(n, plan.l12);
  plan.w1 = realized_size(n, plan.l3);
  plan.b2 = realized_size(n, plan.l22);
  plan.s2 = realized_size(n, plan.l21);
  plan.w2 = realized_size(n, plan.l3);
  plan.realized_r11 = std::log2(static_cast<double>(plan.m11)) / n;
  plan.realized_r22 = std::log2(static_cast<double>(plan.m22)) / n;
  plan.valid = targets.r11 >= plan.l11 - 1e-12 && targets.r22 >= plan.l22 - 1e-12 &&
               plan.l11 >= 0.0 && plan.l22 >= 0.0;
  return plan;
}

BinningPlan plan_binning_degraded(const BceChannel& bce,
                                  const AuxiliaryDecomposition& aux, int n, double r1,
                                  double r2) {
  std::size_t nu = aux.p_u.size(), nx = bce.input_size();
  std::vector<double> pair_kernel;
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t x = 0; x < nx; ++x) pair_kernel.push_back(aux.p_x_given_u(u, x));
  InnerBoundDecomposition dec{aux.p_u, nx, 1,
                              DiscreteChannel(nu, nx, std::move(pair_kernel)),
                              DiscreteChannel::identity(nx)};
  RateTargets targets;
  targets.r11 = r1;
  targets.r20 = r2;
  return plan_binning(bce, dec, n, targets);
}

std::vector<std::size_t> layer_candidates(std::size_t messages, std::size_t bins,
                                          std::size_t subbins, std::size_t within,
                                          std::size_t message) {
  if (message >= messages) throw UsageError("layer_candidates: message out of range");
  std::vector<std::size_t> out;
  if (messages <= bins) {
    // the message owns every bin congruent to it; full sub-bin and within
    // freedom is encoder randomization
    for (std::size_t b = message; b < bins; b += messages)
      for (std::size_t s = 0; s < subbins; ++s)
        for (std::size_t w = 0; w < within; ++w)
          out.push_back((b * subbins + s) * within + w);
  } else {
    std::size_t b = message % bins;  // overloaded bins: defined but not secret
    for (std::size_t s = 0; s < subbins; ++s)
      for (std::size_t w = 0; w < within; ++w)
        out.push_back((b * subbins + s) * within + w);
  }
  return out;
}

const std::vector<std::uint8_t>& WiretapCodebook::x_of(std::size_t u_idx,
                                                       std::size_t t1_idx,
                                                       std::size_t t2_idx) const {
  return x_seqs[(u_idx * t1() + t1_idx) * t2() + t2_idx];
}

std::vector<std::size_t> WiretapCodebook::encoder_candidates(std::size_t w0,
                                                             std::size_t w10,
                                                             std::size_t w11,
                                                             std::size_t w20,
                                                             std::size_t w22) const {
  if (w0 >= plan.m0 || w10 >= plan.m10 || w11 >= plan.m11 || w20 >= plan.m20 ||
      w22 >= plan.m22)
    throw UsageError("encoder_candidates: message out of range");
  std::size_t cloud = (w0 * plan.m10 + w10) * plan.m20 + w20;
  auto cand1 = layer_candidates(plan.m11, plan.b1, plan.s1, 1, w11);
  auto cand2 = layer_candidates(plan.m22, plan.b2, plan.s2, 1, w22);
  std::size_t n1 = dec.v1_size, n2 = dec.v2_size;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < plan.cloud_bin; ++j) {
    std::size_t u_idx = cloud * plan.cloud_bin + j;
    const auto& u_seq = u_seqs[u_idx];
    for (std::size_t c1 : cand1)
      for (std::size_t c2 : cand2) {
        // pick the within-pair with the largest joint likelihood given u
        std::size_t best1 = 0, best2 = 0;
        if (max_joint_pairing) {
          double best = -1e300;
          for (std::size_t i3 = 0; i3 < plan.w1; ++i3)
            for (std::size_t j3 = 0; j3 < plan.w2; ++j3) {
              const auto& v1 = v1_seqs[u_idx * t1() + c1 * plan.w1 + i3];
              const auto& v2 = v2_seqs[u_idx * t2() + c2 * plan.w2 + j3];
              double score = 0.0;
              for (std::size_t i = 0; i < u_seq.size(); ++i) {
                double p = dec.p_v1v2_given_u(u_seq[i], v1[i] * n2 + v2[i]);
                score += p > 0.0 ? std::log(p) : -1e6;
              }
              if (score > best + 1e-12) {
                best = score;
                best1 = i3;
                best2 = j3;
              }
            }
        }
        out.push_back((u_idx * t1() + c1 * plan.w1 + best1) * t2() + c2 * plan.w2 +
                      best2);
      }
  }
  return out;
}

WiretapCodebook generate_codebook(const BinningPlan& plan,
                                  const InnerBoundDecomposition& dec,
                                  std::uint64_t seed) {
  WiretapCodebook code;
  code.plan = plan;
  code.dec = dec;
  code.seed = seed;
  code.common_count = plan.m0 * plan.m10 * plan.m20;
  code.max_joint_pairing = plan.w1 > 1 || plan.w2 > 1;

  std::size_t u_count = code.common_count * plan.cloud_bin;
  std::size_t t1 = code.t1(), t2 = code.t2();
  std::size_t total = u_count * (1 + t1 + t2 + t1 * t2);
  if (total > kCodebookBudget)
    throw BudgetError("generate_codebook: " + std::to_string(total) +
                      " sequences exceed the codebook budget");

  std::size_t nu = dec.p_u.size(), n1 = dec.v1_size, n2 = dec.v2_size;
  // per-u conditionals for the satellite layers
  std::vector<std::vector<double>> p_v1_u(nu, std::vector<double>(n1, 0.0));
  std::vector<std::vector<double>> p_v2_u(nu, std::vector<double>(n2, 0.0));
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v1 = 0; v1 < n1; ++v1)
      for (std::size_t v2 = 0; v2 < n2; ++v2) {
        double p = dec.p_v1v2_given_u(u, v1 * n2 + v2);
        p_v1_u[u][v1] += p;
        p_v2_u[u][v2] += p;
      }
  std::vector<double> p_u(nu);
  for (std::size_t u = 0; u < nu; ++u) p_u[u] = dec.p_u[u];

  Rng rng(seed);
  auto n = static_cast<std::size_t>(plan.n);
  for (std::size_t ui = 0; ui < u_count; ++ui) {
    std::vector<std::uint8_t> u_seq(n);
    for (std::size_t i = 0; i < n; ++i)
      u_seq[i] = static_cast<std::uint8_t>(rng.sample(p_u));
    for (std::size_t c = 0; c < t1; ++c) {
      std::vector<std::uint8_t> v1(n);
      for (std::size_t i = 0; i < n; ++i)
        v1[i] = static_cast<std::uint8_t>(rng.sample(p_v1_u[u_seq[i]]));
      code.v1_seqs.push_back(std::move(v1));
    }
    for (std::size_t c = 0; c < t2; ++c) {
      std::vector<std::uint8_t> v2(n);
      for (std::size_t i = 0; i < n; ++i)
        v2[i] = static_cast<std::uint8_t>(rng.sample(p_v2_u[u_seq[i]]));
      code.v2_seqs.push_back(std::move(v2));
    }
    // one x draw per (v1, v2) pair
    for (std::size_t c1 = 0; c1 < t1; ++c1)
      for (std::size_t c2 = 0; c2 < t2; ++c2) {
        const auto& v1 = code.v1_seqs[ui * t1 + c1];
        const auto& v2 = code.v2_seqs[ui * t2 + c2];
        std::vector<std::uint8_t> x(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t pair = v1[i] * n2 + v2[i];
          std::vector<double> row(dec.p_x_given_v1v2.output_size());
          for (std::size_t xs = 0; xs < row.size(); ++xs)
            row[xs] = dec.p_x_given_v1v2(pair, xs);
          x[i] = static_cast<std::uint8_t>(rng.sample(row));
        }
        code.x_seqs.push_back(std::move(x));
      }
    code.u_seqs.push_back(std::move(u_seq));
  }
  return code;
}

namespace {

// Sparse encoder distribution over x-sequence indices for one message, with
// the common index w0 (and the cloud / sub-bin randomization) marginalized.
using XWeights = std::map<std::size_t, double>;

double seq_likelihood(const std::vector<std::uint8_t>& x, const DiscreteChannel& ch,
                      std::size_t out_flat, std::size_t out_size) {
  double p = 1.0;
  for (std::size_t i = x.size(); i-- > 0;) {
    p *= ch(x[i], out_flat % out_size);
    out_flat /= out_size;
  }
  return p;
}

}  // namespace

ExactSecrecyReport exact_equivocation(const WiretapCodebook& code,
                                      const BceChannel& bce) {
  const auto& plan = code.plan;
  int n = plan.n;
  std::size_t nz = bce.z().output_size();
  if (n * std::log2(static_cast<double>(nz)) > kZEnumerationBudgetBits + 1e-9)
    throw BudgetError("exact_equivocation: z enumeration exceeds the budget");
  std::size_t z_count = pow_size(nz, n);

  std::size_t m1 = plan.m10 * plan.m11, m2 = plan.m20 * plan.m22;
  std::vector<XWeights> weights(m1 * m2);
  for (std::size_t w0 = 0; w0 < plan.m0; ++w0)
    for (std::size_t w10 = 0; w10 < plan.m10; ++w10)
      for (std::size_t w11 = 0; w11 < plan.m11; ++w11)
        for (std::size_t w20 = 0; w20 < plan.m20; ++w20)
          for (std::size_t w22 = 0; w22 < plan.m22; ++w22) {
            auto cands = code.encoder_candidates(w0, w10, w11, w20, w22);
            double w = 1.0 / (static_cast<double>(plan.m0) *
                              static_cast<double>(cands.size()));
            auto& dst = weights[(w10 * plan.m11 + w11) * m2 + w20 * plan.m22 + w22];
            for (std::size_t c : cands) dst[c] += w;
          }

  std::size_t entries = 0;
  for (const auto& w : weights) entries += w.size();
  if (entries > kEnumerationWorkBudget / std::max<std::size_t>(z_count, 1))
    throw BudgetError("exact_equivocation: posterior enumeration work exceeds the budget");

  double h_z = 0.0, h_w1z = 0.0, h_w2z = 0.0, h_w12z = 0.0;
  double prior = 1.0 / (static_cast<double>(m1) * static_cast<double>(m2));
  std::vector<double> q(m1 * m2), q1(m1), q2(m2);
  std::map<std::size_t, double> px;
  for (std::size_t z = 0; z < z_count; ++z) {
    px.clear();
    std::fill(q1.begin(), q1.end(), 0.0);
    std::fill(q2.begin(), q2.end(), 0.0);
    double pz = 0.0;
    for (std::size_t m = 0; m < q.size(); ++m) {
      double acc = 0.0;
      for (const auto& [xi, w] : weights[m]) {
        auto it = px.find(xi);
        if (it == px.end())
          it = px.emplace(xi, seq_likelihood(code.x_seqs[xi], bce.z(), z, nz)).first;
        acc += w * it->second;
      }
      q[m] = prior * acc;
      q1[m / m2] += q[m];
      q2[m % m2] += q[m];
      pz += q[m];
      if (q[m] > 0.0) h_w12z -= q[m] * std::log2(q[m]);
    }
    if (pz > 0.0) h_z -= pz * std::log2(pz);
    for (double p : q1)
      if (p > 0.0) h_w1z -= p * std::log2(p);
    for (double p : q2)
      if (p > 0.0) h_w2z -= p * std::log2(p);
  }

  ExactSecrecyReport report;
  report.enumeration_size = z_count;
  report.re1 = (h_w1z - h_z) / n;
  report.re2 = (h_w2z - h_z) / n;
  report.re12 = (h_w12z - h_z) / n;
  report.realized_rate1 = std::log2(static_cast<double>(m1)) / n;
  report.realized_rate2 = std::log2(static_cast<double>(m2)) / n;
  return report;
}

double exact_error_probability(const WiretapCodebook& code, const BceChannel& bce) {
  const auto& plan = code.plan;
  int n = plan.n;
  std::size_t ny1 = bce.y1().output_size(), ny2 = bce.y2().output_size();
  if (n * std::log2(static_cast<double>(std::max(ny1, ny2))) >
      kZEnumerationBudgetBits + 1e-9)
    throw BudgetError("exact_error_probability: output enumeration exceeds the budget");
  std::size_t y1_count = pow_size(ny1, n), y2_count = pow_size(ny2, n);

  // decoded indices: a1 = (w0, w10, w11), a2 = (w0, w20, w22)
  std::size_t a1_count = plan.m0 * plan.m10 * plan.m11;
  std::size_t a2_count = plan.m0 * plan.m20 * plan.m22;
  std::size_t total = plan.m0 * plan.m10 * plan.m11 * plan.m20 * plan.m22;
  double prior = 1.0 / static_cast<double>(total);

  struct Msg {
    std::size_t a1, a2;
    std::vector<std::size_t> cands;
  };
  std::vector<Msg> msgs;
  std::vector<XWeights> wd1(a1_count), wd2(a2_count);
  for (std::size_t w0 = 0; w0 < plan.m0; ++w0)
    for (std::size_t w10 = 0; w10 < plan.m10; ++w10)
      for (std::size_t w11 = 0; w11 < plan.m11; ++w11)
        for (std::size_t w20 = 0; w20 < plan.m20; ++w20)
          for (std::size_t w22 = 0; w22 < plan.m22; ++w22) {
            Msg m;
            m.a1 = (w0 * plan.m10 + w10) * plan.m11 + w11;
            m.a2 = (w0 * plan.m20 + w20) * plan.m22 + w22;
            m.cands = code.encoder_candidates(w0, w10, w11, w20, w22);
            double w = prior / static_cast<double>(m.cands.size());
            for (std::size_t c : m.cands) {
              wd1[m.a1][c] += w;
              wd2[m.a2][c] += w;
            }
            msgs.push_back(std::move(m));
          }

  std::size_t entries = 0;
  for (const auto& w : wd1) entries += w.size();
  for (const auto& w : wd2) entries += w.size();
  std::size_t out_total = std::max(y1_count, y2_count);
  if (entries > kEnumerationWorkBudget / std::max<std::size_t>(out_total, 1))
    throw BudgetError(
        "exact_error_probability: decoding enumeration work exceeds the budget");

  auto decode_table = [&](const DiscreteChannel& ch, std::size_t out_size,
                          std::size_t out_count, const std::vector<XWeights>& wd) {
    std::vector<std::size_t> g(out_count, 0);
    for (std::size_t y = 0; y < out_count; ++y) {
      std::map<std::size_t, double> px;
      double best = -1.0;
      std::size_t arg = 0;
      for (std::size_t a = 0; a < wd.size(); ++a) {
        double score = 0.0;
        for (const auto& [xi, w] : wd[a]) {
          auto it = px.find(xi);
          if (it == px.end())
            it = px.emplace(xi, seq_likelihood(code.x_seqs[xi], ch, y, out_size)).first;
          score += w * it->second;
        }
        if (score > best + 1e-15) {  // ties toward the lowest index
          best = score;
          arg = a;
        }
      }
      g[y] = arg;
    }
    return g;
  };
  auto g1 = decode_table(bce.y1(), ny1, y1_count, wd1);
  auto g2 = decode_table(bce.y2(), ny2, y2_count, wd2);

  // per x-sequence mass landing in each decoded index
  std::map<std::size_t, std::vector<double>> acc1, acc2;
  for (const auto& m : msgs)
    for (std::size_t c : m.cands) {
      acc1.emplace(c, std::vector<double>());
      acc2.emplace(c, std::vector<double>());
    }
  for (auto& [xi, v] : acc1) {
    v.assign(a1_count, 0.0);
    for (std::size_t y = 0; y < y1_count; ++y)
      v[g1[y]] += seq_likelihood(code.x_seqs[xi], bce.y1(), y, ny1);
  }
  for (auto& [xi, v] : acc2) {
    v.assign(a2_count, 0.0);
    for (std::size_t y = 0; y < y2_count; ++y)
      v[g2[y]] += seq_likelihood(code.x_seqs[xi], bce.y2(), y, ny2);
  }

  double correct = 0.0;
  for (const auto& m : msgs) {
    double w = prior / static_cast<double>(m.cands.size());
    for (std::size_t c : m.cands)
      correct += w * acc1.at(c)[m.a1] * acc2.at(c)[m.a2];
  }
  return std::clamp(1.0 - correct, 0.0, 1.0);
}

std::vector<TrendRow> secrecy_trend(const BceChannel& bce,
                                    const InnerBoundDecomposition& dec,
                                    const RateTargets& targets,
                                    const std::vector<int>& n_list,
                                    const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw UsageError("secrecy_trend: need at least one seed");
  std::vector<TrendRow> rows;
  for (int n : n_list) {
    auto plan = plan_binning(bce, dec, n, targets);
    TrendRow row;
    row.n = n;
    KahanSum gap, pe;
    for (std::uint64_t seed : seeds) {
      auto code = generate_codebook(plan, dec, seed);
      auto report = exact_equivocation(code, bce);
      gap.add(report.realized_rate1 + report.realized_rate2 - report.re12);
      pe.add(exact_error_probability(code, bce));
    }
    row.mean_gap = gap.value() / static_cast<double>(seeds.size());
    row.mean_pe = pe.value() / static_cast<double>(seeds.size());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace secrecy
