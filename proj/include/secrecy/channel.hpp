#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secrecy/pmf.hpp"

namespace secrecy {

/// Row-stochastic transition kernel on finite alphabets.
/// Rows are indexed by input symbol, columns by output symbol.
class DiscreteChannel {
 public:
  DiscreteChannel() : in_(1), out_(1), kernel_{1.0} {}  // trivial 1x1 kernel
  DiscreteChannel(std::size_t input_size, std::size_t output_size,
                  std::vector<double> kernel);

  static DiscreteChannel identity(std::size_t n);
  static DiscreteChannel bsc(double crossover);
  /// Output distribution is `out` for every input (input carries nothing).
  static DiscreteChannel constant(std::size_t input_size, const Pmf& out);

  std::size_t input_size() const { return in_; }
  std::size_t output_size() const { return out_; }
  double operator()(std::size_t x, std::size_t y) const {
    return kernel_[x * out_ + y];
  }
  const std::vector<double>& kernel() const { return kernel_; }
  Pmf row(std::size_t x) const;

  /// Output distribution induced by an input distribution.
  Pmf push_forward(const Pmf& input) const;

 private:
  std::size_t in_, out_;
  std::vector<double> kernel_;
};

/// Cascade: first, then second. Output alphabet of `first` must match the
/// input alphabet of `second`.
DiscreteChannel compose(const DiscreteChannel& first, const DiscreteChannel& second);

/// Broadcast channel with an eavesdropper, stored as the three conditional
/// marginals (all rate and simulation computations consume only these).
/// An optional full joint kernel P(y1,y2,z|x) may be attached; it is checked
/// against the marginals at construction and otherwise ignored.
class BceChannel {
 public:
  BceChannel(DiscreteChannel y1, DiscreteChannel y2, DiscreteChannel z,
             std::optional<std::vector<double>> joint = std::nullopt);

  const DiscreteChannel& y1() const { return y1_; }
  const DiscreteChannel& y2() const { return y2_; }
  const DiscreteChannel& z() const { return z_; }
  std::size_t input_size() const { return y1_.input_size(); }
  bool has_joint() const { return joint_.has_value(); }
  /// Flattened P(y1,y2,z|x), index ((x*|Y1|+y1)*|Y2|+y2)*|Z|+z.
  const std::vector<double>& joint() const { return *joint_; }

 private:
  DiscreteChannel y1_, y2_, z_;
  std::optional<std::vector<double>> joint_;
};

// JSON (de)serialization. Channel files carry input_size/output_size/rows;
// BCE files carry y1/y2/z kernels and an optional joint tensor.
std::string to_json(const DiscreteChannel& c);
DiscreteChannel channel_from_json(const std::string& text);
std::string to_json(const BceChannel& c);
BceChannel bce_from_json(const std::string& text);
BceChannel bce_from_file(const std::string& path);

}  // namespace secrecy
