// poisson: command-line front end for the Poisson wavelet library.
//
// Exit codes: 0 success, 1 verification failures, 2 unknown command,
// 3 invalid configuration, 4 I/O failure, 5 numerical failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "poisson/asymptotics.hpp"
#include "poisson/coefficients.hpp"
#include "poisson/error.hpp"
#include "poisson/parallel.hpp"
#include "poisson/transform.hpp"
#include "poisson/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace poisson;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kOutDirEnv = "POISSON_OUT_DIR";

enum ExitCode { kOk = 0, kChecksFailed = 1, kUnknownCommand = 2, kInvalidConfig = 3, kIoFailure = 4, kNumeric = 5 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ output

struct OutputOptions {
  std::string output;   // file path, "-" for stdout, empty for the default
  std::string out_dir;  // overrides POISSON_OUT_DIR
};

fs::path output_dir(const OutputOptions& o) {
  if (!o.out_dir.empty()) return o.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return ".";
}

// Writes text to the chosen destination and reports the path on stderr.
void emit(const OutputOptions& o, const std::string& default_name, const std::string& text,
          const std::string& explicit_path = {}) {
  std::string target = explicit_path.empty() ? o.output : explicit_path;
  if (target == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  fs::path path = target.empty() ? output_dir(o) / default_name : fs::path(target);
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
  std::cerr << "wrote " << path.string() << '\n';
}

std::string num(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }
  void row(const std::vector<double>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << num(cells[i]);
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------- validation

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

SphereContext sphere(int n) {
  require(n >= 2, "--n must be at least 2 (got " + std::to_string(n) + ")");
  return SphereContext(n);
}

Flavor flavor_arg(const std::string& name) {
  try {
    return parse_flavor(name);
  } catch (const DomainError&) {
    throw ConfigError("--flavor must be raw, bilinear or linear (got '" + name + "')");
  }
}

std::vector<double> theta_grid(int count) {
  require(count >= 2, "--theta-grid needs at least 2 points");
  return uniform_thetas(count);
}

json bigint(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

// ---------------------------------------------------------------- commands

struct EvalConfig {
  int n = 0, m = 0;
  double a = 0.0;
  int theta_count = 100;
  std::string repr = "closed";
  std::string flavor = "raw";
};

int run_eval(const EvalConfig& c, const OutputOptions& o, int threads) {
  const SphereContext ctx = sphere(c.n);
  require(c.m >= 1, "--m must be at least 1");
  require(c.a > 0.0, "--a must be positive");
  const bool all = c.repr == "all";
  Representation repr = Representation::closed;
  if (!all) {
    try {
      repr = parse_representation(c.repr);
    } catch (const DomainError&) {
      throw ConfigError("--repr must be series, closed, continuation, multipole or all (got '" + c.repr + "')");
    }
  }
  const PoissonWavelet g(WaveletSpec(ctx, c.m, c.a, flavor_arg(c.flavor)));
  const std::vector<double> thetas = theta_grid(c.theta_count);

  std::vector<RepresentationRow> rows(thetas.size());
  parallel_for(thetas.size(), threads, [&](std::size_t i) {
    if (all) {
      rows[i] = compare_representations(g, std::span<const double>(&thetas[i], 1)).front();
    } else {
      rows[i].theta = thetas[i];
      rows[i].values[0] = g.evaluate(Colatitude::from_angle(thetas[i]), repr);
    }
  });
  if (all) {
    Csv csv({"theta", "value", "series", "closed", "continuation", "multipole", "max_pairwise_rel_err"});
    for (const RepresentationRow& r : rows)
      csv.row(std::vector<double>{r.theta, r.values[1], r.values[0], r.values[1], r.values[2], r.values[3], r.max_pairwise});
    emit(o, "eval.csv", csv.str());
  } else {
    Csv csv({"theta", "value"});
    for (const RepresentationRow& r : rows) csv.row(std::vector<double>{r.theta, r.values[0]});
    emit(o, "eval.csv", csv.str());
  }
  return kOk;
}

struct CoeffsConfig {
  int m = 0;
  int n = 0;
  bool symbolic = false;
};

json r_rows(const RTable& table, int n) {
  json rows = json::array();
  for (int k = 0; k <= table.order(); ++k) {
    json coeffs = json::array();
    for (const IntPolynomial& p : table.coefficients(k)) {
      if (n == 0)
        coeffs.push_back(p.to_string());
      else
        coeffs.push_back(bigint(p.evaluate(n)));
    }
    rows.push_back({{"k", k}, {"coeffs", coeffs}, {"parity", RTable::parity(k)}});
  }
  return rows;
}

int run_coeffs(const CoeffsConfig& c, const OutputOptions& o) {
  require(c.m >= 1 && c.m <= 40, "--m must lie in 1..40");
  require(c.symbolic != (c.n != 0), "give exactly one of --n and --symbolic-n");
  if (!c.symbolic) sphere(c.n);

  const AlphaTable alpha = build_alpha_table(c.m);
  json alpha_rows = json::array();
  for (int m = 0; m <= c.m; ++m) {
    json row = json::array();
    for (const BigInt& v : alpha.row(m)) row.push_back(bigint(v));
    alpha_rows.push_back(row);
  }
  const int n = c.symbolic ? 0 : c.n;
  json lower = json::array();
  RTable table = build_r_table(1);
  for (int m = 1; m < c.m; ++m) {
    lower.push_back({{"m", m}, {"R", r_rows(table, n)}});
    table = build_r_table(m + 1);
  }
  const json doc = {{"schema_version", kSchemaVersion},
                    {"m", c.m},
                    {"n", c.symbolic ? json(nullptr) : json(c.n)},
                    {"symbolic_n", c.symbolic},
                    {"alpha", alpha_rows},
                    {"R", r_rows(table, n)},
                    {"lower_orders", lower}};
  emit(o, "coeffs.json", dump(doc));
  return kOk;
}

struct FunctionConfig {
  std::string input;
  int n = 0;
  int band_limit = 10;
  std::uint64_t seed = 20240917;
};

struct TransformConfig {
  FunctionConfig function;
  int m = 1;
  std::string flavor = "bilinear";
  double a_min = 1e-4, a_max = 50.0;
  int a_count = 400;
  int theta_count = 33;
  std::string path = "spectral";
  int quad_count = 0;  // 0: band limit + 1
};

struct LoadedFunction {
  ZonalFunction f;
  json source;
};

LoadedFunction load_function(const FunctionConfig& c) {
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw IoError("cannot read " + c.input);
    json doc;
    try {
      in >> doc;
    } catch (const json::parse_error& e) {
      throw ConfigError("invalid JSON in " + c.input + ": " + e.what());
    }
    require(doc.is_object() && doc.contains("n") && doc.contains("coeffs"),
            "input function needs {\"n\": ..., \"coeffs\": [...]}");
    require(doc["n"].is_number_integer(), "input field n must be an integer");
    require(doc["coeffs"].is_array() && !doc["coeffs"].empty(), "input field coeffs must be a non-empty array");
    std::vector<double> coeffs;
    for (const json& v : doc["coeffs"]) {
      require(v.is_number(), "input coefficients must be numbers");
      coeffs.push_back(v.get<double>());
    }
    return {ZonalFunction{sphere(doc["n"].get<int>()), coeffs}, {{"kind", "file"}, {"path", c.input}}};
  }
  require(c.n != 0, "give --input or --n (with --band-limit and --seed)");
  require(c.band_limit >= 1 && c.band_limit <= 2000, "--band-limit must lie in 1..2000");
  return {ZonalFunction::random(sphere(c.n), c.band_limit, c.seed),
          {{"kind", "random"}, {"band_limit", c.band_limit}, {"seed", c.seed}}};
}

ScaleGrid scale_grid(const TransformConfig& c) {
  require(c.a_min > 0.0 && c.a_max > c.a_min, "need 0 < --a-min < --a-max");
  require(c.a_count >= 2, "--a-count must be at least 2");
  return log_scale_grid(c.a_min, c.a_max, c.a_count);
}

void validate_transform(const TransformConfig& c) {
  require(c.m >= 1 && c.m <= 20, "--m must lie in 1..20");
  require(c.path == "spectral" || c.path == "spatial", "--path must be spectral or spatial");
  require(c.quad_count >= 0, "--quad-count must be non-negative");
}

int run_transform(const TransformConfig& c, const OutputOptions& o, int threads) {
  validate_transform(c);
  const LoadedFunction input = load_function(c.function);
  const ZonalFunction& f = input.f;
  const ScaleGrid grid = scale_grid(c);
  const Flavor flavor = flavor_arg(c.flavor);
  const std::vector<double> thetas = theta_grid(c.theta_count);
  std::vector<double> cosines(thetas.size());
  for (std::size_t j = 0; j < thetas.size(); ++j) cosines[j] = std::cos(thetas[j]);

  Eigen::MatrixXd values(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(thetas.size()));
  if (c.path == "spectral") {
    TransformField field = forward_spectral(f, WaveletSpec(f.ctx, c.m, 1.0, flavor), grid);
    field.render(cosines);
    values = *field.spatial;
  } else {
    const int count = c.quad_count > 0 ? c.quad_count : f.band_limit() + 1;
    const QuadratureRule rule = gauss_gegenbauer(f.ctx.lambda(), count);
    const std::vector<double> samples = f.sample(rule.nodes);
    const PoissonWavelet base(WaveletSpec(f.ctx, c.m, 1.0, flavor));
    std::vector<std::optional<std::string>> warnings(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
      const SpatialConvolution conv =
          forward_spatial(f.ctx, samples, rule, base.at_scale(grid.nodes[i]), cosines, f.band_limit());
      for (std::size_t j = 0; j < cosines.size(); ++j)
        values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = conv.values[j];
      warnings[i] = conv.warning;
    });
    if (warnings.front()) std::cerr << "warning: " << *warnings.front() << '\n';
  }
  Csv csv({"a", "theta", "value"});
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < thetas.size(); ++j)
      csv.row(std::vector<double>{grid.nodes[i], thetas[j],
                                  values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
  emit(o, "transform.csv", csv.str());
  return kOk;
}

int run_invert(const TransformConfig& c, const OutputOptions& o) {
  validate_transform(c);
  const LoadedFunction input = load_function(c.function);
  const ZonalFunction& f = input.f;
  const ScaleGrid grid = scale_grid(c);
  const Flavor flavor = flavor_arg(c.flavor);
  TransformField field = forward_spectral(f, WaveletSpec(f.ctx, c.m, 1.0, flavor), grid);

  std::optional<QuadratureRule> rule;
  if (c.path == "spatial") {
    const int count = c.quad_count > 0 ? c.quad_count : f.band_limit() + 1;
    require(count > f.band_limit(), "--quad-count must exceed the band limit for spatial inversion");
    rule = gauss_gegenbauer(f.ctx.lambda(), count);
    field.render(rule->nodes);
    field.spectral.reset();
  }
  const QuadratureRule* rule_ptr = rule ? &*rule : nullptr;
  const bool linear = flavor == Flavor::linear;
  const Reconstruction rec =
      linear ? invert_linear(field, rule_ptr, f.band_limit()) : invert_bilinear(field, rule_ptr, f.band_limit());
  const Flavor prediction = linear ? Flavor::linear : Flavor::bilinear;
  const ReconstructionReport report = reconstruction_report(f, rec, grid, c.m, prediction);

  json ratios = json::array();
  for (const auto& r : report.per_degree_ratio) ratios.push_back(r ? json(*r) : json(nullptr));
  const json doc = {{"schema_version", kSchemaVersion},
                    {"n", f.ctx.dimension()},
                    {"m", c.m},
                    {"flavor", std::string(to_string(flavor))},
                    {"inversion", linear ? "linear" : "bilinear"},
                    {"path", rec.path},
                    {"function", input.source},
                    {"grid", {{"a_min", grid.a_min}, {"a_max", grid.a_max}, {"a_count", grid.size()}}},
                    {"original_coeffs", f.coeffs},
                    {"reconstructed_coeffs", rec.function.coeffs},
                    {"per_degree_ratio", ratios},
                    {"predicted_ratio", report.predicted_ratio},
                    {"l2_error", report.l2_error},
                    {"predicted_residual", report.predicted_residual},
                    {"dropped_degree0", report.dropped_degree0}};
  emit(o, "invert.json", dump(doc));
  return kOk;
}

struct EuclidConfig {
  int n = 0, m = 0;
  std::vector<double> scales{0.04, 0.02, 0.01, 0.005};
  double s_max = 20.0;
  int s_count = 401;
  bool localization = false;
  std::string profile;  // CSV destination
};

json statistic(const StatisticSeries& s) {
  return {{"exponent", s.exponent},
          {"values", s.values},
          {"spread", s.spread},
          {"grows_as_scale_shrinks", s.grows_as_scale_shrinks}};
}

int run_euclid(const EuclidConfig& c, const OutputOptions& o) {
  const SphereContext ctx = sphere(c.n);
  require(c.m >= 1 && c.m <= 20, "--m must lie in 1..20");
  require(!c.scales.empty(), "--scales must not be empty");
  for (std::size_t i = 0; i < c.scales.size(); ++i) {
    require(c.scales[i] >= 1e-3, "--scales must be at least 1e-3");
    require(i == 0 || c.scales[i] < c.scales[i - 1], "--scales must be strictly decreasing");
  }
  require(c.s_max > 0.0 && c.s_count >= 2, "need --s-max > 0 and --s-count >= 2");
  std::vector<double> s_grid(static_cast<std::size_t>(c.s_count));
  for (int i = 0; i < c.s_count; ++i) s_grid[static_cast<std::size_t>(i)] = c.s_max * i / (c.s_count - 1);

  const EuclideanConvergenceReport conv = euclidean_convergence_report(ctx, c.m, c.scales, s_grid);
  const ZeroMeanReport zero = zero_mean_check(ctx, c.m);
  const EuclideanProfile profile{ctx, c.m};

  json doc = {{"schema_version", kSchemaVersion},
              {"n", c.n},
              {"m", c.m},
              {"projection", "theta = 2 arctan(s/2)"},
              {"scales", conv.scales},
              {"profile_peak", conv.profile_peak},
              {"errors", conv.primary.errors},
              {"monotone", conv.primary.monotone},
              {"empirical_order", conv.empirical_order},
              {"decay_degree", profile.decay_degree()},
              {"decay_slope", decay_slope(ctx, c.m)},
              {"zero_mean",
               {{"dnu_ratio", zero.ratio},
                {"dnu_integral", zero.integral},
                {"flat_ratio", zero.flat_ratio},
                {"flat_integral", zero.flat_integral},
                {"measure_mass", zero.measure_mass},
                {"measure_mass_expected", zero.measure_mass_expected}}}};
  if (conv.alternate) doc["alternate_projection_errors"] = conv.alternate->errors;
  if (c.localization) {
    const LocalizationReport loc = localization_report(ctx, c.m);
    doc["localization"] = {{"scales", loc.scales},
                           {"probe_scales", loc.probe_scales},
                           {"envelope", statistic(loc.envelope)},
                           {"envelope_probe", statistic(loc.envelope_probe)},
                           {"scaling", statistic(loc.scaling)},
                           {"scaling_probe", statistic(loc.scaling_probe)},
                           {"uniform", statistic(loc.uniform)}};
  }

  Csv csv({"s", "g"});
  for (double s : s_grid) csv.row(std::vector<double>{s, profile(s)});
  emit(o, "euclid.json", dump(doc));
  if (o.output != "-") emit(o, "euclid_profile.csv", csv.str(), c.profile);
  return kOk;
}

struct VerifyConfig {
  std::vector<int> dimensions;
  std::vector<int> orders;
  bool fast = false;
  std::uint64_t seed = 20240917;
  std::vector<std::string> suites;
};

int run_verify(const VerifyConfig& c, const OutputOptions& o, int threads) {
  VerifyOptions options;
  options.fast = c.fast;
  options.threads = threads;
  options.seed = c.seed;
  if (!c.dimensions.empty()) options.dimensions = c.dimensions;
  if (!c.orders.empty()) options.orders = c.orders;
  for (int n : options.dimensions) require(n >= 2 && n <= 12, "--n values must lie in 2..12");
  for (int m : options.orders) require(m >= 1 && m <= 8, "--m values must lie in 1..8");
  const std::vector<std::string> known = suite_names();
  for (const std::string& s : c.suites)
    require(std::find(known.begin(), known.end(), s) != known.end(), "unknown suite '" + s + "'");

  std::vector<SuiteResult> results;
  if (c.suites.empty()) {
    results = run_all_suites(options);
  } else {
    results.resize(c.suites.size());
    parallel_for(c.suites.size(), threads, [&](std::size_t i) { results[i] = run_suite(c.suites[i], options); });
  }

  bool all = true;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    json checks = json::array();
    for (const CheckResult& k : r.checks)
      checks.push_back({{"name", k.name},
                        {"passed", k.passed},
                        {"measured", k.measured},
                        {"tolerance", k.tolerance},
                        {"detail", k.detail}});
    suites.push_back({{"module", r.module}, {"passed", r.passed()}, {"checks", checks}});
    all = all && r.passed();
    std::fprintf(stderr, "%-18s %s\n", r.module.c_str(), r.passed() ? "ok" : "FAILED");
  }
  const json doc = {{"schema_version", kSchemaVersion},
                    {"passed", all},
                    {"fast", c.fast},
                    {"seed", c.seed},
                    {"dimensions", options.dimensions},
                    {"orders", options.orders},
                    {"suites", suites}};
  emit(o, "verify.json", dump(doc));
  return all ? kOk : kChecksFailed;
}

// -------------------------------------------------------------------- main

const std::vector<std::string> kCommands{"eval", "coeffs", "transform", "invert", "euclid", "verify"};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("-o,--output", o.output, "Output file, '-' for stdout (default: <out-dir>/<command>.<ext>)");
  cmd->add_option("--out-dir", o.out_dir, std::string("Output directory (default: $") + kOutDirEnv + " or .)");
}

void add_function_options(CLI::App* cmd, TransformConfig& c) {
  cmd->add_option("--input", c.function.input, "Zonal function as JSON {\"n\": ..., \"coeffs\": [...]}");
  cmd->add_option("--n", c.function.n, "Sphere dimension for a random function");
  cmd->add_option("--band-limit", c.function.band_limit, "Band limit L of a random function");
  cmd->add_option("--seed", c.function.seed, "Seed of a random function");
  cmd->add_option("--m", c.m, "Wavelet order");
  cmd->add_option("--flavor", c.flavor, "raw, bilinear or linear");
  cmd->add_option("--a-min", c.a_min, "Smallest scale");
  cmd->add_option("--a-max", c.a_max, "Largest scale");
  cmd->add_option("--a-count", c.a_count, "Number of log-spaced scales");
  cmd->add_option("--path", c.path, "spectral or spatial");
  cmd->add_option("--quad-count", c.quad_count, "Gauss-Gegenbauer nodes for spatial sampling");
}

int run(int argc, char** argv) {
  if (argc >= 2 && argv[1][0] != '-' &&
      std::find(kCommands.begin(), kCommands.end(), std::string(argv[1])) == kCommands.end()) {
    std::cerr << "poisson: unknown command '" << argv[1] << "' (expected eval, coeffs, transform, invert, euclid, verify)\n";
    return kUnknownCommand;
  }

  CLI::App app{"Poisson wavelets on spheres"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);

  OutputOptions out;
  EvalConfig eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a wavelet on a colatitude grid (CSV)");
  eval_cmd->add_option("--n", eval.n, "Sphere dimension")->required();
  eval_cmd->add_option("--m", eval.m, "Wavelet order")->required();
  eval_cmd->add_option("--a", eval.a, "Scale")->required();
  eval_cmd->add_option("--theta-grid", eval.theta_count, "Number of uniform colatitudes on [0, pi]");
  eval_cmd->add_option("--repr", eval.repr, "series, closed, continuation, multipole or all");
  eval_cmd->add_option("--flavor", eval.flavor, "raw, bilinear or linear");
  eval_cmd->add_option("--threads", threads, "Worker threads");
  add_output_options(eval_cmd, out);

  CoeffsConfig coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Dump the alpha and R coefficient tables (JSON)");
  coeffs_cmd->add_option("--m", coeffs.m, "Order")->required();
  coeffs_cmd->add_option("--n", coeffs.n, "Sphere dimension");
  coeffs_cmd->add_flag("--symbolic-n", coeffs.symbolic, "Keep the R coefficients as polynomials in n");
  add_output_options(coeffs_cmd, out);

  TransformConfig transform;
  auto* transform_cmd = app.add_subcommand("transform", "Wavelet transform of a zonal function (CSV a, theta, value)");
  add_function_options(transform_cmd, transform);
  transform_cmd->add_option("--theta-grid", transform.theta_count, "Number of uniform colatitudes on [0, pi]");
  transform_cmd->add_option("--threads", threads, "Worker threads");
  add_output_options(transform_cmd, out);

  TransformConfig invert;
  auto* invert_cmd = app.add_subcommand("invert", "Transform and reconstruct a zonal function (JSON report)");
  add_function_options(invert_cmd, invert);
  invert_cmd->add_option("--threads", threads, "Worker threads");
  add_output_options(invert_cmd, out);

  EuclidConfig euclid;
  auto* euclid_cmd = app.add_subcommand("euclid", "Euclidean limit and localization report (JSON, profile CSV)");
  euclid_cmd->add_option("--n", euclid.n, "Sphere dimension")->required();
  euclid_cmd->add_option("--m", euclid.m, "Wavelet order")->required();
  euclid_cmd->add_option("--scales", euclid.scales, "Decreasing scales")->delimiter(',');
  euclid_cmd->add_option("--s-max", euclid.s_max, "Largest radius of the profile grid");
  euclid_cmd->add_option("--s-count", euclid.s_count, "Points of the profile grid");
  euclid_cmd->add_flag("--localization", euclid.localization, "Include the localization statistics");
  euclid_cmd->add_option("--profile", euclid.profile, "Profile CSV destination");
  add_output_options(euclid_cmd, out);

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites (JSON summary)");
  verify_cmd->add_option("--n", verify.dimensions, "Dimensions")->delimiter(',');
  verify_cmd->add_option("--m", verify.orders, "Orders")->delimiter(',');
  verify_cmd->add_flag("--fast", verify.fast, "Thin the grids");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random test functions");
  verify_cmd->add_option("--suite", verify.suites, "Restrict to these suites")->delimiter(',');
  verify_cmd->add_option("--threads", threads, "Worker threads");
  add_output_options(verify_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }
  require(threads >= 0, "--threads must be non-negative");

  if (*eval_cmd) return run_eval(eval, out, threads);
  if (*coeffs_cmd) return run_coeffs(coeffs, out);
  if (*transform_cmd) return run_transform(transform, out, threads);
  if (*invert_cmd) return run_invert(invert, out);
  if (*euclid_cmd) return run_euclid(euclid, out);
  return run_verify(verify, out, threads);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "poisson: invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const IoError& e) {
    std::cerr << "poisson: I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const NumericError& e) {
    std::cerr << "poisson: numerical failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const SingularityError& e) {
    std::cerr << "poisson: numerical failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const OverflowError& e) {
    std::cerr << "poisson: numerical failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const poisson::Error& e) {
    // Remaining library errors (domain, context, flavor) stem from the inputs.
    std::cerr << "poisson: invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "poisson: I/O error: " << e.what() << '\n';
    return kIoFailure;
  }
}
