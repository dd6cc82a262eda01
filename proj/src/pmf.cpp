#include "secrecy/pmf.hpp"

#include <cmath>
#include <string>

#include "secrecy/errors.hpp"

namespace secrecy {

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("Pmf: empty alphabet");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw ValidationError("Pmf: negative or NaN entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTolerance)
    throw ValidationError("Pmf: mass sums to " + std::to_string(sum));
}

Pmf Pmf::uniform(std::size_t n) {
  return Pmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::point_mass(std::size_t n, std::size_t index) {
  std::vector<double> v(n, 0.0);
  v.at(index) = 1.0;
  return Pmf(std::move(v));
}

double log2_safe(double x) { return std::log2(x); }

double entropy(const Pmf& p) {
  double h = 0.0;
  for (double q : p.probs())
    if (q > 0.0) h -= q * std::log2(q);
  return h < 0.0 ? 0.0 : h;
}

}  // namespace secrecy
