#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/region_general.hpp"

namespace secrecy {

inline constexpr double kZEnumerationBudgetBits = 24.0;  // n log2|alphabet|
inline constexpr std::size_t kCodebookBudget = 1u << 16; // total sequences
// output sequences x posterior table entries; keeps exact enumeration seconds-scale
inline constexpr std::size_t kEnumerationWorkBudget = std::size_t{1} << 24;

struct RateTargets {
  double r0 = 0.0, r10 = 0.0, r11 = 0.0, r20 = 0.0, r22 = 0.0;
};

/// Binning rates and realized integer structure sizes for one block length.
struct BinningPlan {
  int n = 0;
  RateTargets targets;
  // binning rates in bits/use
  double l11 = 0.0, l12 = 0.0, l21 = 0.0, l22 = 0.0, l3 = 0.0;
  double cloud_randomization = 0.0;  // I(U;Z)
  std::size_t u_size = 0, v1_size = 0, v2_size = 0, x_size = 0;
  // realized sizes, 2^(n*rate) rounded to nearest, minimum 1
  std::size_t m0 = 1, m10 = 1, m11 = 1, m20 = 1, m22 = 1;  // message spaces
  std::size_t cloud_bin = 1;                               // codewords per cloud bin
  std::size_t b1 = 1, s1 = 1, w1 = 1;                      // layer-1 bins/sub-bins/within
  std::size_t b2 = 1, s2 = 1, w2 = 1;                      // layer-2
  bool valid = false;  // Eq.-style achievability flag: R11 >= L11 and R22 >= L22
  // realized rates log2(size)/n, reported alongside targets
  double realized_r11 = 0.0, realized_r22 = 0.0;
};

std::size_t realized_size(int n, double rate);

/// Compute the binning plan for a decomposition over a given channel.
BinningPlan plan_binning(const BceChannel& bce, const InnerBoundDecomposition& dec,
                         int n, const RateTargets& targets);

/// Degraded two-layer convenience: U cloud, X satellite (V1 = X, V2 constant),
/// message w2 rides the cloud index with I(U;Z) worth of cloud randomization.
BinningPlan plan_binning_degraded(const BceChannel& bce,
                                  const struct AuxiliaryDecomposition& dec, int n,
                                  double r1, double r2);

/// Explicit superposition codebook with double-binned satellites and a
/// materialized uniform encoder randomization. Deterministic under (plan, seed).
struct WiretapCodebook {
  BinningPlan plan;
  InnerBoundDecomposition dec;
  std::uint64_t seed = 0;
  std::size_t common_count = 1;  // m0*m10*m20 cloud bins
  // sequences, each of length n, symbols as alphabet indices
  std::vector<std::vector<std::uint8_t>> u_seqs;   // [common_count*cloud_bin]
  std::vector<std::vector<std::uint8_t>> v1_seqs;  // per u-seq: b1*s1*w1
  std::vector<std::vector<std::uint8_t>> v2_seqs;  // per u-seq: b2*s2*w2
  std::vector<std::vector<std::uint8_t>> x_seqs;   // per (u-seq, t1, t2)
  bool max_joint_pairing = false;  // pair selection mode used

  std::size_t t1() const { return plan.b1 * plan.s1 * plan.w1; }
  std::size_t t2() const { return plan.b2 * plan.s2 * plan.w2; }
  std::size_t message_count_w1() const { return plan.m10 * plan.m11; }
  std::size_t message_count_w2() const { return plan.m20 * plan.m22; }
  const std::vector<std::uint8_t>& x_of(std::size_t u_idx, std::size_t t1_idx,
                                        std::size_t t2_idx) const;
  /// Encoder candidate x-sequences for a full message (w0,w10,w11,w20,w22),
  /// uniform over the materialized randomization.
  std::vector<std::size_t> encoder_candidates(std::size_t w0, std::size_t w10,
                                              std::size_t w11, std::size_t w20,
                                              std::size_t w22) const;
};

WiretapCodebook generate_codebook(const BinningPlan& plan,
                                  const InnerBoundDecomposition& dec,
                                  std::uint64_t seed);

/// Candidate (sub,within)-style index sets realizing the even-mapping rule for
/// one layer; exposed for counting tests. Returns flat indices into B*S*W.
std::vector<std::size_t> layer_candidates(std::size_t messages, std::size_t bins,
                                          std::size_t subbins, std::size_t within,
                                          std::size_t message);

struct ExactSecrecyReport {
  double re1 = 0.0, re2 = 0.0, re12 = 0.0;  // bits/use
  double pe = 0.0;
  std::size_t enumeration_size = 0;
  double realized_rate1 = 0.0, realized_rate2 = 0.0;  // bits/use incl. common parts
};

/// H(W1|Z^n), H(W2|Z^n), H(W1,W2|Z^n) per symbol, by exact summation over all
/// z^n with the encoder randomization marginalized. Uniform message prior.
ExactSecrecyReport exact_equivocation(const WiretapCodebook& code, const BceChannel& bce);

/// Exact average error probability under per-receiver marginal MAP decoding,
/// ties broken toward the lowest message index.
double exact_error_probability(const WiretapCodebook& code, const BceChannel& bce);

struct TrendRow {
  int n = 0;
  double mean_gap = 0.0;  // mean over seeds of (R1+R2 - Re12), realized rates
  double mean_pe = 0.0;
};

std::vector<TrendRow> secrecy_trend(const BceChannel& bce,
                                    const InnerBoundDecomposition& dec,
                                    const RateTargets& targets,
                                    const std::vector<int>& n_list,
                                    const std::vector<std::uint64_t>& seeds);

}  // namespace secrecy
