#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/coding.hpp"
#include "secrecy/degraded_check.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/fading.hpp"
#include "secrecy/region_degraded.hpp"
#include "secrecy/region_gaussian.hpp"
#include "secrecy/region_general.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kLn2 = 0.6931471805599453;

using nlohmann::json;

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct RunMetadata {
  std::string subcommand;
  std::map<std::string, std::string> config;
  std::vector<std::uint64_t> seeds;
  double wall_clock_ms = 0.0;

  json to_json() const {
    json j;
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["config"] = config;
    j["seeds"] = seeds;
    j["wall_clock_ms"] = wall_clock_ms;
    j["tolerances"] = {{"probability", secrecy::kProbTolerance},
                       {"degradedness", secrecy::kDegradednessTolerance},
                       {"quadrature", 1e-9}};
    return j;
  }

  void write_csv_header(std::ostream& os) const {
    os << "# version: " << kVersion << "\n";
    os << "# subcommand: " << subcommand << "\n";
    for (const auto& [k, v] : config) os << "# config " << k << ": " << v << "\n";
    for (auto s : seeds) os << "# seed: " << s << "\n";
    os << "# wall_clock_ms: " << fmt12(wall_clock_ms) << "\n";
  }
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw secrecy::UsageError("cannot open output file: " + path);
  return os;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  auto range = text.find("..");
  if (range != std::string::npos) {
    std::uint64_t lo = std::stoull(text.substr(0, range));
    std::uint64_t hi = std::stoull(text.substr(range + 2));
    if (hi < lo) throw secrecy::UsageError("seed range is empty: " + text);
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) seeds.push_back(std::stoull(tok));
  if (seeds.empty()) throw secrecy::UsageError("no seeds given");
  return seeds;
}

json channel_to_jobj(const secrecy::DiscreteChannel& c) {
  json rows = json::array();
  for (std::size_t x = 0; x < c.input_size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < c.output_size(); ++y) row.push_back(c(x, y));
    rows.push_back(row);
  }
  return {{"input_size", c.input_size()},
          {"output_size", c.output_size()},
          {"rows", rows}};
}

secrecy::DiscreteChannel jobj_to_channel(const json& j) {
  std::size_t in = j.at("input_size"), out = j.at("output_size");
  std::vector<double> kernel;
  for (const auto& row : j.at("rows"))
    for (const auto& v : row) kernel.push_back(v.get<double>());
  return secrecy::DiscreteChannel(in, out, std::move(kernel));
}

secrecy::InnerBoundDecomposition dec_from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw secrecy::UsageError("cannot open distribution file: " + path);
  json j = json::parse(is);
  std::vector<double> p_u = j.at("p_u").get<std::vector<double>>();
  return secrecy::InnerBoundDecomposition{
      secrecy::Pmf(std::move(p_u)), j.at("v1_size").get<std::size_t>(),
      j.at("v2_size").get<std::size_t>(), jobj_to_channel(j.at("p_v1v2_given_u")),
      jobj_to_channel(j.at("p_x_given_v1v2"))};
}

// ---------------------------------------------------------------------------

int run_region_gaussian(double power, const std::vector<double>& sigmas,
                        std::size_t points, const std::string& out,
                        const std::string& format, bool nats) {
  Timer timer;
  if (sigmas.size() != 3)
    throw secrecy::UsageError("--sigmas expects three comma-separated variances");
  secrecy::GaussianBceParams params{power, sigmas[0], sigmas[1], sigmas[2]};
  auto boundary = secrecy::region_boundary(params, points);
  double scale = nats ? kLn2 : 1.0;

  RunMetadata meta;
  meta.subcommand = "region gaussian";
  meta.config = {{"power", fmt12(power)},
                 {"sigma1_sq", fmt12(sigmas[0])},
                 {"sigma2_sq", fmt12(sigmas[1])},
                 {"sigma3_sq", fmt12(sigmas[2])},
                 {"points", std::to_string(points)},
                 {"units", nats ? "nats" : "bits"},
                 {"format", format}};
  meta.wall_clock_ms = timer.ms();

  auto os = open_out(out);
  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < boundary.alphas.size(); ++i)
      rows.push_back({{"alpha", boundary.alphas[i]},
                      {"R1_secret", boundary.secret[i].r1 * scale},
                      {"R2_secret", boundary.secret[i].r2 * scale},
                      {"R1_nonsecret", boundary.nonsecret[i].r1 * scale},
                      {"R2_nonsecret", boundary.nonsecret[i].r2 * scale}});
    json j = {{"metadata", meta.to_json()}, {"boundary", rows}};
    os << j.dump(2) << "\n";
  } else {
    meta.write_csv_header(os);
    os << "alpha,R1_secret,R2_secret,R1_nonsecret,R2_nonsecret\n";
    for (std::size_t i = 0; i < boundary.alphas.size(); ++i)
      os << fmt12(boundary.alphas[i]) << ',' << fmt12(boundary.secret[i].r1 * scale)
         << ',' << fmt12(boundary.secret[i].r2 * scale) << ','
         << fmt12(boundary.nonsecret[i].r1 * scale) << ','
         << fmt12(boundary.nonsecret[i].r2 * scale) << "\n";
  }
  return 0;
}

int run_region_degraded(const std::string& channel_path,
                        const std::vector<double>& mu_grid, int grid, int samples,
                        std::uint64_t seed, const std::string& out,
                        const std::string& format, bool nats) {
  Timer timer;
  auto bce = secrecy::bce_from_file(channel_path);
  secrecy::SearchConfig config;
  if (!mu_grid.empty()) config.mu_grid = mu_grid;
  config.grid_resolution = grid;
  config.random_samples = samples;
  config.seed = seed;
  auto region = secrecy::search_degraded_region(bce, config);
  double scale = nats ? kLn2 : 1.0;

  RunMetadata meta;
  meta.subcommand = "region degraded";
  meta.config = {{"channel", channel_path},
                 {"grid", std::to_string(grid)},
                 {"samples", std::to_string(samples)},
                 {"units", nats ? "nats" : "bits"},
                 {"format", format},
                 {"degradedness_verified", region.degradedness_verified ? "true" : "false"},
                 {"effective_grid_resolution",
                  std::to_string(region.effective_grid_resolution)}};
  if (!region.warning.empty()) meta.config["warning"] = region.warning;
  meta.seeds = {seed};
  meta.wall_clock_ms = timer.ms();

  json certs = json::array();
  for (const auto& point : region.frontier) {
    certs.push_back({{"p_u", point.certificate.p_u.probs()},
                     {"p_x_given_u", channel_to_jobj(point.certificate.p_x_given_u)}});
  }

  auto os = open_out(out);
  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < region.frontier.size(); ++i)
      rows.push_back({{"mu", region.frontier[i].mu},
                      {"R1", region.frontier[i].rate.r1 * scale},
                      {"R2", region.frontier[i].rate.r2 * scale},
                      {"certificate_id", i}});
    json j = {{"metadata", meta.to_json()},
              {"frontier", rows},
              {"certificates", certs}};
    os << j.dump(2) << "\n";
  } else {
    meta.write_csv_header(os);
    os << "mu,R1,R2,certificate_id\n";
    for (std::size_t i = 0; i < region.frontier.size(); ++i)
      os << fmt12(region.frontier[i].mu) << ','
         << fmt12(region.frontier[i].rate.r1 * scale) << ','
         << fmt12(region.frontier[i].rate.r2 * scale) << ',' << i << "\n";
    auto cs = open_out(out + ".certs.json");
    json j = {{"metadata", meta.to_json()}, {"certificates", certs}};
    cs << j.dump(2) << "\n";
  }
  return 0;
}

int run_region_inner(const std::string& channel_path,
                     const std::vector<std::size_t>& caps, std::size_t samples,
                     std::uint64_t seed, const std::string& out,
                     const std::string& format, bool nats) {
  Timer timer;
  if (caps.size() != 3)
    throw secrecy::UsageError("--caps expects |U|,|V1|,|V2|");
  auto bce = secrecy::bce_from_file(channel_path);
  auto triples =
      secrecy::sample_inner_region(bce, {caps[0], caps[1], caps[2]}, samples, seed);
  double scale = nats ? kLn2 : 1.0;

  RunMetadata meta;
  meta.subcommand = "region inner";
  meta.config = {{"channel", channel_path},
                 {"caps", std::to_string(caps[0]) + "," + std::to_string(caps[1]) + "," +
                              std::to_string(caps[2])},
                 {"samples", std::to_string(samples)},
                 {"units", nats ? "nats" : "bits"},
                 {"format", format}};
  meta.seeds = {seed};
  meta.wall_clock_ms = timer.ms();

  auto os = open_out(out);
  if (format == "json") {
    json rows = json::array();
    for (const auto& t : triples)
      rows.push_back({{"R0", t.r0 * scale}, {"R1", t.r1 * scale}, {"R2", t.r2 * scale}});
    json j = {{"metadata", meta.to_json()}, {"triples", rows}};
    os << j.dump(2) << "\n";
  } else {
    meta.write_csv_header(os);
    os << "R0,R1,R2\n";
    for (const auto& t : triples)
      os << fmt12(t.r0 * scale) << ',' << fmt12(t.r1 * scale) << ','
         << fmt12(t.r2 * scale) << "\n";
  }
  return 0;
}

secrecy::FadingSpec make_fading(const std::string& family, double s_prime,
                                double power) {
  if (family != "rayleigh")
    throw secrecy::UsageError("only the rayleigh family is available on the CLI");
  secrecy::FadingSpec spec;
  spec.family = secrecy::FadingSpec::Family::Rayleigh;
  spec.s_prime = s_prime;
  spec.power = power;
  return spec;
}

void write_profile(std::ostream& os, const RunMetadata& meta,
                   const secrecy::PowerProfile& profile, const std::string& format,
                   const json& extra) {
  if (format == "json") {
    json j = {{"metadata", meta.to_json()},
              {"profile",
               {{"s", profile.grid},
                {"I", profile.interference},
                {"rho", profile.density},
                {"s_prime", profile.s_prime},
                {"power", profile.power}}}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    os << j.dump(2) << "\n";
  } else {
    meta.write_csv_header(os);
    for (const auto& [k, v] : extra.items())
      os << "# " << k << ": " << fmt12(v.get<double>()) << "\n";
    os << "s,I,rho\n";
    for (std::size_t i = 0; i < profile.grid.size(); ++i)
      os << fmt12(profile.grid[i]) << ',' << fmt12(profile.interference[i]) << ','
         << fmt12(profile.density[i]) << "\n";
  }
}

int run_fading_closed_form(const std::string& family, double s_prime, double power,
                           std::size_t points, const std::string& out,
                           const std::string& format, bool nats) {
  Timer timer;
  auto spec = make_fading(family, s_prime, power);
  auto profile = secrecy::closed_form_profile(spec, points);
  double avg = secrecy::average_rate(spec, profile) * (nats ? kLn2 : 1.0);

  RunMetadata meta;
  meta.subcommand = "fading closed-form";
  meta.config = {{"family", family},        {"s_prime", fmt12(s_prime)},
                 {"power", fmt12(power)},   {"points", std::to_string(points)},
                 {"units", nats ? "nats" : "bits"}, {"format", format}};
  meta.wall_clock_ms = timer.ms();

  auto os = open_out(out);
  write_profile(os, meta, profile, format, json{{"average_rate", avg}});
  return 0;
}

int run_fading_optimize(const std::string& family, double s_prime, double power,
                        std::size_t layers, const std::string& out,
                        const std::string& format, bool nats) {
  Timer timer;
  auto spec = make_fading(family, s_prime, power);
  auto result = secrecy::optimize_profile_numerical(spec, layers);
  double scale = nats ? kLn2 : 1.0;

  RunMetadata meta;
  meta.subcommand = "fading optimize";
  meta.config = {{"family", family},        {"s_prime", fmt12(s_prime)},
                 {"power", fmt12(power)},   {"layers", std::to_string(layers)},
                 {"units", nats ? "nats" : "bits"}, {"format", format}};
  meta.wall_clock_ms = timer.ms();

  json extra = {{"objective", result.objective * scale},
                {"iterations", static_cast<double>(result.iterations)},
                {"converged", static_cast<double>(result.converged)}};
  auto os = open_out(out);
  write_profile(os, meta, result.profile, format, extra);
  return 0;
}

int run_simulate(const std::string& channel_path, const std::string& dist_path, int n,
                 const std::vector<double>& rates, const std::string& seeds_text,
                 const std::string& out, bool nats) {
  Timer timer;
  auto bce = secrecy::bce_from_file(channel_path);
  auto dec = dec_from_file(dist_path);
  if (rates.size() != 5)
    throw secrecy::UsageError("--rates expects r0,r10,r11,r20,r22");
  auto seeds = parse_seeds(seeds_text);
  secrecy::RateTargets targets{rates[0], rates[1], rates[2], rates[3], rates[4]};
  auto plan = secrecy::plan_binning(bce, dec, n, targets);
  double scale = nats ? kLn2 : 1.0;

  json per_seed = json::array();
  for (auto seed : seeds) {
    auto code = secrecy::generate_codebook(plan, dec, seed);
    auto report = secrecy::exact_equivocation(code, bce);
    double pe = secrecy::exact_error_probability(code, bce);
    per_seed.push_back({{"seed", seed},
                        {"Re1", report.re1 * scale},
                        {"Re2", report.re2 * scale},
                        {"Re12", report.re12 * scale},
                        {"Pe", pe},
                        {"realized_rate1", report.realized_rate1 * scale},
                        {"realized_rate2", report.realized_rate2 * scale},
                        {"enumeration_size", report.enumeration_size}});
  }

  RunMetadata meta;
  meta.subcommand = "simulate";
  meta.config = {{"channel", channel_path}, {"dist", dist_path},
                 {"n", std::to_string(n)},  {"rates", fmt12(rates[0]) + "," +
                  fmt12(rates[1]) + "," + fmt12(rates[2]) + "," + fmt12(rates[3]) +
                  "," + fmt12(rates[4])},
                 {"units", nats ? "nats" : "bits"}};
  meta.seeds = seeds;
  meta.wall_clock_ms = timer.ms();

  json plan_j = {{"n", plan.n},
                 {"L11", plan.l11 * scale},
                 {"L12", plan.l12 * scale},
                 {"L21", plan.l21 * scale},
                 {"L22", plan.l22 * scale},
                 {"L3", plan.l3 * scale},
                 {"cloud_randomization", plan.cloud_randomization * scale},
                 {"m0", plan.m0},
                 {"m10", plan.m10},
                 {"m11", plan.m11},
                 {"m20", plan.m20},
                 {"m22", plan.m22},
                 {"cloud_bin", plan.cloud_bin},
                 {"bins1", plan.b1},
                 {"subbins1", plan.s1},
                 {"within1", plan.w1},
                 {"bins2", plan.b2},
                 {"subbins2", plan.s2},
                 {"within2", plan.w2},
                 {"valid", plan.valid},
                 {"realized_r11", plan.realized_r11 * scale},
                 {"realized_r22", plan.realized_r22 * scale}};
  json budgets = {{"z_enumeration_bits", secrecy::kZEnumerationBudgetBits},
                  {"codebook_sequences", secrecy::kCodebookBudget}};
  json j = {{"metadata", meta.to_json()},
            {"plan", plan_j},
            {"budgets", budgets},
            {"results", per_seed}};
  auto os = open_out(out);
  os << j.dump(2) << "\n";
  return 0;
}

int run_check_degraded(const std::string& channel_path, const std::string& out) {
  Timer timer;
  auto bce = secrecy::bce_from_file(channel_path);
  auto y1_to_y2 = secrecy::check_stochastically_degraded(bce.y1(), bce.y2());
  auto y2_to_z = secrecy::check_stochastically_degraded(bce.y2(), bce.z());
  auto y1_to_z = secrecy::check_stochastically_degraded(bce.y1(), bce.z());

  RunMetadata meta;
  meta.subcommand = "check degraded";
  meta.config = {{"channel", channel_path}};
  meta.wall_clock_ms = timer.ms();

  auto pair_j = [](const secrecy::DegradednessResult& r) {
    return json{{"feasible", r.feasible},
                {"residual", r.residual},
                {"kernel", channel_to_jobj(r.degrading_kernel)}};
  };
  json j = {{"metadata", meta.to_json()},
            {"y1_to_y2", pair_j(y1_to_y2)},
            {"y2_to_z", pair_j(y2_to_z)},
            {"y1_to_z", pair_j(y1_to_z)},
            {"markov_chain_feasible", y1_to_y2.feasible && y2_to_z.feasible}};
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    auto os = open_out(out);
    os << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy rate regions, fading power allocation, and exact small-block "
               "wiretap coding simulations"};
  app.set_config("--config", "", "TOML config file (flags take precedence)");
  app.require_subcommand(1);
  bool nats = false;
  int workers = 1;
  app.add_flag("--nats", nats, "report rates in nats instead of bits");
  app.add_option("--workers", workers, "worker count (results are independent of it)")
      ->check(CLI::PositiveNumber);
  std::string format = "csv";

  // region ------------------------------------------------------------------
  auto* region = app.add_subcommand("region", "rate region computations");
  region->require_subcommand(1);

  auto* gauss = region->add_subcommand("gaussian", "scalar Gaussian boundary sweep");
  double g_power = 1.0;
  std::vector<double> g_sigmas;
  std::size_t g_points = 101;
  std::string g_out;
  gauss->add_option("--power", g_power, "transmit power")->required();
  gauss->add_option("--sigmas", g_sigmas, "sigma1^2,sigma2^2,sigma3^2")
      ->required()
      ->delimiter(',');
  gauss->add_option("--points", g_points, "alpha sweep points");
  gauss->add_option("--out", g_out, "output path")->required();
  gauss->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* degraded = region->add_subcommand("degraded", "degraded DM region search");
  std::string d_channel, d_out;
  std::vector<double> d_mu;
  int d_grid = 16, d_samples = 2000;
  std::uint64_t d_seed = 0;
  degraded->add_option("--channel", d_channel, "BCE channel JSON")->required();
  degraded->add_option("--mu-grid", d_mu, "trade-off weights")->delimiter(',');
  degraded->add_option("--grid", d_grid, "simplex grid resolution");
  degraded->add_option("--samples", d_samples, "random decompositions");
  degraded->add_option("--seed", d_seed, "search seed");
  degraded->add_option("--out", d_out, "output path")->required();
  degraded->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* inner = region->add_subcommand("inner", "general inner bound sampling");
  std::string i_channel, i_out;
  std::vector<std::size_t> i_caps = {2, 2, 2};
  std::size_t i_samples = 5000;
  std::uint64_t i_seed = 0;
  inner->add_option("--channel", i_channel, "BCE channel JSON")->required();
  inner->add_option("--caps", i_caps, "|U|,|V1|,|V2|")->delimiter(',');
  inner->add_option("--samples", i_samples, "sampled decompositions");
  inner->add_option("--seed", i_seed, "sampling seed");
  inner->add_option("--out", i_out, "output path")->required();
  inner->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // fading ------------------------------------------------------------------
  auto* fading = app.add_subcommand("fading", "broadcast-strategy power allocation");
  fading->require_subcommand(1);

  auto* closed = fading->add_subcommand("closed-form", "closed-form profile");
  std::string f_family = "rayleigh", f_out;
  double f_sprime = 0.0, f_power = 1.0;
  std::size_t f_points = 512;
  closed->add_option("--family", f_family, "fading family");
  closed->add_option("--s-prime", f_sprime, "eavesdropper power gain");
  closed->add_option("--power", f_power, "power budget")->required();
  closed->add_option("--points", f_points, "profile grid points");
  closed->add_option("--out", f_out, "output path")->required();
  closed->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* optimize = fading->add_subcommand("optimize", "numerical layer optimization");
  std::string o_family = "rayleigh", o_out;
  double o_sprime = 0.0, o_power = 1.0;
  std::size_t o_layers = 400;
  optimize->add_option("--family", o_family, "fading family");
  optimize->add_option("--s-prime", o_sprime, "eavesdropper power gain");
  optimize->add_option("--power", o_power, "power budget")->required();
  optimize->add_option("--layers", o_layers, "layer count");
  optimize->add_option("--out", o_out, "output path")->required();
  optimize->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // simulate ----------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "exact wiretap codebook simulation");
  std::string s_channel, s_dist, s_seeds = "0", s_out;
  int s_n = 4;
  std::vector<double> s_rates;
  simulate->add_option("--channel", s_channel, "BCE channel JSON")->required();
  simulate->add_option("--dist", s_dist, "decomposition JSON")->required();
  simulate->add_option("--n", s_n, "block length")->required();
  simulate->add_option("--rates", s_rates, "r0,r10,r11,r20,r22")
      ->required()
      ->delimiter(',');
  simulate->add_option("--seeds", s_seeds, "seed list 'a,b,c' or range 'a..b'");
  simulate->add_option("--out", s_out, "report JSON path")->required();

  // check -------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "structural checks");
  check->require_subcommand(1);
  auto* check_deg = check->add_subcommand("degraded", "stochastic degradedness");
  std::string c_channel, c_out;
  check_deg->add_option("--channel", c_channel, "BCE channel JSON")->required();
  check_deg->add_option("--out", c_out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gauss->parsed())
      return run_region_gaussian(g_power, g_sigmas, g_points, g_out, format, nats);
    if (degraded->parsed())
      return run_region_degraded(d_channel, d_mu, d_grid, d_samples, d_seed, d_out,
                                 format, nats);
    if (inner->parsed())
      return run_region_inner(i_channel, i_caps, i_samples, i_seed, i_out, format,
                              nats);
    if (closed->parsed())
      return run_fading_closed_form(f_family, f_sprime, f_power, f_points, f_out,
                                    format, nats);
    if (optimize->parsed())
      return run_fading_optimize(o_family, o_sprime, o_power, o_layers, o_out, format,
                                 nats);
    if (simulate->parsed())
      return run_simulate(s_channel, s_dist, s_n, s_rates, s_seeds, s_out, nats);
    if (check_deg->parsed()) return run_check_degraded(c_channel, c_out);
    std::cerr << "no subcommand selected\n";
    return 1;
  } catch (const secrecy::BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const secrecy::NumericalError& e) {
    std::cerr << "numerical refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
