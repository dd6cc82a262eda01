#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace secrecy {

// Seeded generator with platform-independent floating point draws.
// std::mt19937_64 output is fully specified; only the double conversion
// is done by hand to avoid distribution-object implementation differences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % n);
  }

  // Dirichlet(1,...,1): normalized standard exponentials.
  std::vector<double> dirichlet(std::size_t k) {
    std::vector<double> v(k);
    double sum = 0.0;
    for (auto& x : v) {
      x = -std::log(1.0 - uniform());
      sum += x;
    }
    for (auto& x : v) x /= sum;
    return v;
  }

  // Sample an index from a discrete distribution given as probabilities.
  std::size_t sample(const std::vector<double>& probs) {
    double r = uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (r < acc) return i;
    }
    return probs.size() - 1;
  }

 private:
  std::mt19937_64 gen_;
};

// Compensated (Kahan) accumulator for order-robust reductions.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace secrecy
