#pragma once

#include <cstddef>
#include <vector>

namespace secrecy {

inline constexpr double kProbTolerance = 1e-12;

/// Probability mass function over a finite alphabet. Validated on
/// construction; never silently renormalized.
class Pmf {
 public:
  Pmf() : probs_{1.0} {}  // trivial one-symbol mass
  explicit Pmf(std::vector<double> probs);

  static Pmf uniform(std::size_t n);
  static Pmf point_mass(std::size_t n, std::size_t index);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const Pmf& p);

/// log2 with the 0 log 0 convention applied by callers; plain helper.
double log2_safe(double x);

}  // namespace secrecy
