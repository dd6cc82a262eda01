#include "secrecy/channel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "secrecy/errors.hpp"

namespace secrecy {

DiscreteChannel::DiscreteChannel(std::size_t input_size, std::size_t output_size,
                                 std::vector<double> kernel)
    : in_(input_size), out_(output_size), kernel_(std::move(kernel)) {
  if (in_ == 0 || out_ == 0) throw ValidationError("DiscreteChannel: empty alphabet");
  if (kernel_.size() != in_ * out_)
    throw ValidationError("DiscreteChannel: kernel size mismatch");
  for (std::size_t x = 0; x < in_; ++x) {
    double sum = 0.0;
    for (std::size_t y = 0; y < out_; ++y) {
      double p = kernel_[x * out_ + y];
      if (!(p >= 0.0)) throw ValidationError("DiscreteChannel: negative entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbTolerance)
      throw ValidationError("DiscreteChannel: row not stochastic");
  }
}

DiscreteChannel DiscreteChannel::identity(std::size_t n) {
  std::vector<double> k(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) k[i * n + i] = 1.0;
  return DiscreteChannel(n, n, std::move(k));
}

DiscreteChannel DiscreteChannel::bsc(double crossover) {
  if (crossover < 0.0 || crossover > 1.0)
    throw ValidationError("bsc: crossover outside [0,1]");
  return DiscreteChannel(2, 2, {1.0 - crossover, crossover, crossover, 1.0 - crossover});
}

DiscreteChannel DiscreteChannel::constant(std::size_t input_size, const Pmf& out) {
  std::vector<double> k;
  k.reserve(input_size * out.size());
  for (std::size_t x = 0; x < input_size; ++x)
    k.insert(k.end(), out.probs().begin(), out.probs().end());
  return DiscreteChannel(input_size, out.size(), std::move(k));
}

Pmf DiscreteChannel::row(std::size_t x) const {
  return Pmf(std::vector<double>(kernel_.begin() + x * out_,
                                 kernel_.begin() + (x + 1) * out_));
}

Pmf DiscreteChannel::push_forward(const Pmf& input) const {
  if (input.size() != in_) throw ValidationError("push_forward: alphabet mismatch");
  std::vector<double> out(out_, 0.0);
  for (std::size_t x = 0; x < in_; ++x)
    for (std::size_t y = 0; y < out_; ++y) out[y] += input[x] * kernel_[x * out_ + y];
  // guard against accumulated rounding before Pmf validation
  double sum = 0.0;
  for (double p : out) sum += p;
  for (double& p : out) p /= sum;
  return Pmf(std::move(out));
}

DiscreteChannel compose(const DiscreteChannel& first, const DiscreteChannel& second) {
  if (first.output_size() != second.input_size())
    throw ValidationError("compose: alphabet mismatch");
  std::size_t in = first.input_size(), mid = first.output_size(),
              out = second.output_size();
  std::vector<double> k(in * out, 0.0);
  for (std::size_t x = 0; x < in; ++x)
    for (std::size_t m = 0; m < mid; ++m) {
      double p = first(x, m);
      if (p == 0.0) continue;
      for (std::size_t y = 0; y < out; ++y) k[x * out + y] += p * second(m, y);
    }
  return DiscreteChannel(in, out, std::move(k));
}

BceChannel::BceChannel(DiscreteChannel y1, DiscreteChannel y2, DiscreteChannel z,
                       std::optional<std::vector<double>> joint)
    : y1_(std::move(y1)), y2_(std::move(y2)), z_(std::move(z)), joint_(std::move(joint)) {
  std::size_t n = y1_.input_size();
  if (y2_.input_size() != n || z_.input_size() != n)
    throw ValidationError("BceChannel: marginals disagree on the input alphabet");
  if (joint_) {
    std::size_t n1 = y1_.output_size(), n2 = y2_.output_size(), n3 = z_.output_size();
    if (joint_->size() != n * n1 * n2 * n3)
      throw ValidationError("BceChannel: joint kernel size mismatch");
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<double> m1(n1, 0.0), m2(n2, 0.0), m3(n3, 0.0);
      for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
          for (std::size_t c = 0; c < n3; ++c) {
            double p = (*joint_)[((x * n1 + a) * n2 + b) * n3 + c];
            if (!(p >= 0.0)) throw ValidationError("BceChannel: negative joint entry");
            m1[a] += p;
            m2[b] += p;
            m3[c] += p;
          }
      for (std::size_t a = 0; a < n1; ++a)
        if (std::abs(m1[a] - y1_(x, a)) > kProbTolerance)
          throw ValidationError("BceChannel: joint does not marginalize to y1");
      for (std::size_t b = 0; b < n2; ++b)
        if (std::abs(m2[b] - y2_(x, b)) > kProbTolerance)
          throw ValidationError("BceChannel: joint does not marginalize to y2");
      for (std::size_t c = 0; c < n3; ++c)
        if (std::abs(m3[c] - z_(x, c)) > kProbTolerance)
          throw ValidationError("BceChannel: joint does not marginalize to z");
    }
  }
}

namespace {

nlohmann::json channel_to_jobj(const DiscreteChannel& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t x = 0; x < c.input_size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < c.output_size(); ++y) row.push_back(c(x, y));
    rows.push_back(row);
  }
  return {{"input_size", c.input_size()},
          {"output_size", c.output_size()},
          {"rows", rows}};
}

DiscreteChannel channel_from_jobj(const nlohmann::json& j) {
  std::size_t in = j.at("input_size").get<std::size_t>();
  std::size_t out = j.at("output_size").get<std::size_t>();
  std::vector<double> k;
  k.reserve(in * out);
  for (const auto& row : j.at("rows"))
    for (const auto& p : row) k.push_back(p.get<double>());
  return DiscreteChannel(in, out, std::move(k));
}

}  // namespace

std::string to_json(const DiscreteChannel& c) { return channel_to_jobj(c).dump(2); }

DiscreteChannel channel_from_json(const std::string& text) {
  return channel_from_jobj(nlohmann::json::parse(text));
}

std::string to_json(const BceChannel& c) {
  nlohmann::json j = {{"y1", channel_to_jobj(c.y1())},
                      {"y2", channel_to_jobj(c.y2())},
                      {"z", channel_to_jobj(c.z())}};
  if (c.has_joint()) j["joint"] = c.joint();
  return j.dump(2);
}

BceChannel bce_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::optional<std::vector<double>> joint;
  if (j.contains("joint")) joint = j.at("joint").get<std::vector<double>>();
  return BceChannel(channel_from_jobj(j.at("y1")), channel_from_jobj(j.at("y2")),
                    channel_from_jobj(j.at("z")), std::move(joint));
}

BceChannel bce_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open channel file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return bce_from_json(ss.str());
}

}  // namespace secrecy
