#pragma once

#include <string>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/pmf.hpp"

namespace secrecy {

/// Dense probability tensor over a tuple of finite variables with named axes.
/// Axis order is the storage order (last axis fastest).
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> axes, std::vector<std::size_t> dims,
                    std::vector<double> mass);

  const std::vector<std::string>& axes() const { return axes_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<double>& mass() const { return mass_; }
  std::size_t axis_index(const std::string& name) const;
  std::size_t size() const { return mass_.size(); }

  /// Marginal over the named axes, in the order given.
  JointDistribution marginal(const std::vector<std::string>& keep) const;

 private:
  std::vector<std::string> axes_;
  std::vector<std::size_t> dims_;
  std::vector<double> mass_;
};

/// Joint entropy in bits.
double entropy(const JointDistribution& joint);

/// I(A;B) in bits. Axis sets must be disjoint.
double mutual_information(const JointDistribution& joint,
                          const std::vector<std::string>& axes_a,
                          const std::vector<std::string>& axes_b);

/// I(A;B|C) in bits, as the C-weighted average of per-slice I(A;B).
/// Zero-probability conditioning slices contribute 0.
double conditional_mutual_information(const JointDistribution& joint,
                                      const std::vector<std::string>& axes_a,
                                      const std::vector<std::string>& axes_b,
                                      const std::vector<std::string>& axes_c);

}  // namespace secrecy
