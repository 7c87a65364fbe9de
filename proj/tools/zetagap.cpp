// Command-line front end: evaluate the gap functional, optimize its weight
// polynomial, locate critical crossings, run the discrete finite-T oracle,
// and emit machine-readable JSON/CSV results.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetagap/arith.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/functional.hpp"
#include "zetagap/optimizer.hpp"
#include "zetagap/oracle.hpp"
#include "zetagap/parallel.hpp"
#include "zetagap/report.hpp"

namespace {

using namespace zetagap;

constexpr int kExitValidation = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitIo = 4;
constexpr int kExitReproduce = 5;

class reproduce_failure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& name) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw param_error(name + ": cannot parse number from '" + text + "'");
  }
}

std::vector<double> parse_list(const std::string& text, const std::string& name) {
  std::vector<double> values;
  // lo:hi:step expands to an inclusive grid
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string lo_s, hi_s, step_s;
    if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
        !std::getline(ss, step_s))
      throw param_error(name + ": range syntax is lo:hi:step, got '" + text + "'");
    const double lo = parse_number(lo_s, name);
    const double hi = parse_number(hi_s, name);
    const double step = parse_number(step_s, name);
    if (!(step > 0.0) || hi < lo)
      throw param_error(name + ": need lo <= hi and step > 0 in '" + text + "'");
    for (double v = lo; v <= hi + 1e-12 * step; v += step) values.push_back(v);
    return values;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_number(item, name));
  if (values.empty()) throw param_error(name + ": empty list");
  return values;
}

GapMode parse_mode(const std::string& text) {
  if (text == "large") return GapMode::large_gaps;
  if (text == "small") return GapMode::small_gaps;
  throw param_error("mode: expected 'large' or 'small', got '" + text + "'");
}

nlohmann::json coeffs_json(const std::vector<double>& coeffs) {
  return nlohmann::json(coeffs);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("output: cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw io_error("output: write to '" + path + "' failed");
}

struct GlobalOptions {
  std::string format;  // "", "json" or "csv"
  std::string output;
  std::string engine = "both";
  unsigned threads = 0;
};

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void require_json_format(const GlobalOptions& global, const char* command) {
  if (!global.format.empty() && global.format != "json")
    throw param_error(std::string("format: ") + command + " emits JSON only");
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  double c = 0.0;
  double r = 1.0;
  std::string mode;
  std::string coeffs;
};

int run_eval(const EvalArgs& args, const GlobalOptions& global) {
  require_json_format(global, "eval");
  Timer timer;
  const GapMode mode = parse_mode(args.mode);
  const std::vector<double> coeffs = parse_list(args.coeffs, "coeffs");
  const FunctionalParams params(args.c, args.r, mode);
  const PolynomialF f(coeffs);
  const QuadratureSpec quad;

  report::ResultRecord record("eval");
  record.set_parameter("c", args.c);
  record.set_parameter("r", args.r);
  record.set_parameter("mode", mode_name(mode));
  record.set_parameter("coeffs", coeffs_json(coeffs));
  record.set_parameter("engine", global.engine);

  std::optional<double> hq, hs;
  if (global.engine == "quadrature" || global.engine == "both")
    hq = eval_h_quadrature(params, f, quad);
  if (global.engine == "series" || global.engine == "both") hs = eval_h_series(params, f);
  if (!hq && !hs) throw param_error("engine: expected quadrature|series|both");

  const double h = hq ? *hq : *hs;
  record.set_output("h", h);
  if (hq) record.set_output("h_quadrature", *hq);
  if (hs) record.set_output("h_series", *hs);
  record.set_output("side", h < 1.0 ? "h<1" : "h>1");
  record.set_diagnostic("outer_nodes", quad.outer_nodes);
  record.set_diagnostic("inner_nodes", quad.inner_nodes);
  record.set_diagnostic("refinement_tolerance", quad.tolerance);
  if (hq && hs) {
    const double residual = std::abs(*hq - *hs);
    record.set_diagnostic("engine_residual", residual);
    if (residual > 1e-8)
      throw accuracy_error("eval: engine residual " + std::to_string(residual) +
                           " exceeds 1e-8");
  }
  record.set_wall_time(timer.seconds());
  write_text(global.output, record.dump());
  return 0;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeArgs {
  double c = 0.0;
  int degree = 2;
  std::string mode;
  double r_min = 1.0;
  double r_max = 4.0;
};

nlohmann::json result_json(const optimizer::OptimizationResult& res) {
  nlohmann::json j;
  j["c"] = res.c;
  j["r"] = res.r;
  j["mode"] = mode_name(res.mode);
  j["h"] = res.h_value;
  j["coeffs"] = res.coeffs;
  j["gauge_unit_norm"] = res.gauge_unit_norm;
  j["engine_agreement"] = res.engine_agreement;
  return j;
}

int run_optimize(const OptimizeArgs& args, const GlobalOptions& global) {
  require_json_format(global, "optimize");
  Timer timer;
  const GapMode mode = parse_mode(args.mode);
  const auto res =
      optimizer::optimize_r(args.c, args.degree, mode, optimizer::RBounds(args.r_min, args.r_max));

  report::ResultRecord record("optimize");
  record.set_parameter("c", args.c);
  record.set_parameter("degree", args.degree);
  record.set_parameter("mode", mode_name(mode));
  record.set_parameter("r_bounds", std::vector<double>{args.r_min, args.r_max});
  record.set_output("r", res.r);
  record.set_output("h", res.h_value);
  record.set_output("coeffs", coeffs_json(res.coeffs));
  record.set_diagnostic("engine_agreement", res.engine_agreement);
  record.set_diagnostic("gauge_unit_norm", res.gauge_unit_norm);
  record.set_wall_time(timer.seconds());
  write_text(global.output, record.dump());
  return 0;
}

// ---------------------------------------------------------------------------
// critical-c

struct CriticalArgs {
  int degree = 2;
  std::string mode;
  double r_min = 1.0;
  double r_max = 4.0;
  double c_min = 0.0;
  double c_max = 0.0;
  double step = 0.05;
  double resolution = 1e-4;
};

int run_critical(const CriticalArgs& args, const GlobalOptions& global) {
  require_json_format(global, "critical-c");
  Timer timer;
  const GapMode mode = parse_mode(args.mode);
  optimizer::SearchOptions opts;
  opts.c_lo = args.c_min;
  opts.c_hi = args.c_max;
  opts.step = args.step;
  opts.resolution = args.resolution;
  const auto res =
      optimizer::find_critical_c(args.degree, mode, optimizer::RBounds(args.r_min, args.r_max), opts);

  report::ResultRecord record("critical-c");
  record.set_parameter("degree", args.degree);
  record.set_parameter("mode", mode_name(mode));
  record.set_parameter("r_bounds", std::vector<double>{args.r_min, args.r_max});
  record.set_parameter("step", args.step);
  record.set_parameter("resolution", args.resolution);
  record.set_output("c_star", res.c_star);
  record.set_output("witness", result_json(res.witness));
  nlohmann::json scan = nlohmann::json::array();
  for (const auto& row : res.scan) scan.push_back({{"c", row.c}, {"h_opt", row.h_opt}});
  record.set_diagnostic("scan", scan);
  record.set_wall_time(timer.seconds());
  write_text(global.output, record.dump());
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string T = "1e4,1e5,1e6";
  double r = 1.0;
  double c = 1.0;
  std::string mode = "large";
  std::string coeffs = "1";
  std::int64_t sieve_limit = 0;        // 0 = size to max K
  std::int64_t max_sieve = 10'000'000;  // desk-scale default; sieve cost is 4 bytes/entry
};

int run_oracle(const OracleArgs& args, const GlobalOptions& global) {
  Timer timer;
  const GapMode mode = parse_mode(args.mode);
  const std::vector<double> T_list = parse_list(args.T, "T");
  const PolynomialF f(parse_list(args.coeffs, "coeffs"));

  std::int64_t max_k = 0;
  for (double T : T_list)
    max_k = std::max(max_k, oracle::OracleParams::make(T, args.r, args.c, mode).K);
  std::int64_t limit = args.sieve_limit > 0 ? args.sieve_limit : std::max<std::int64_t>(max_k, 2);
  if (limit > args.max_sieve)
    throw param_error("sieve-limit: required sieve " + std::to_string(limit) +
                      " exceeds the memory guard cap " + std::to_string(args.max_sieve) +
                      " (raise --max-sieve only if the machine can hold it)");
  if (limit < max_k)
    throw param_error("sieve-limit: " + std::to_string(limit) + " is below the largest K = " +
                      std::to_string(max_k));

  const arith::SieveTables tables = arith::build_sieve(limit);
  const auto rows =
      oracle::convergence_study(T_list, args.r, mode, args.c, f, tables, global.threads);

  if (global.format == "csv") {
    std::string text = report::csv_line({"T", "K", "discrete_h", "asymptotic_h", "abs_error"});
    for (const auto& row : rows)
      text += report::csv_line({report::format_double(row.T), std::to_string(row.K),
                                report::format_double(row.discrete_h),
                                report::format_double(row.asymptotic_h),
                                report::format_double(row.abs_error)});
    write_text(global.output, text);
    return 0;
  }

  report::ResultRecord record("oracle");
  record.set_parameter("T", nlohmann::json(T_list));
  record.set_parameter("r", args.r);
  record.set_parameter("c", args.c);
  record.set_parameter("mode", mode_name(mode));
  record.set_parameter("coeffs", coeffs_json(f.coeffs()));
  record.set_parameter("sieve_limit", limit);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows)
    table.push_back({{"T", row.T},
                     {"K", row.K},
                     {"discrete_h", row.discrete_h},
                     {"asymptotic_h", row.asymptotic_h},
                     {"abs_error", row.abs_error}});
  record.set_output("table", table);
  record.set_wall_time(timer.seconds());
  write_text(global.output, record.dump());
  return 0;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::string c;
  std::string r;
  std::string mode = "both";
  std::string degrees = "2";
};

int run_scan(const ScanArgs& args, const GlobalOptions& global) {
  if (!global.format.empty() && global.format != "csv")
    throw param_error("format: scan emits CSV only");
  const std::vector<double> c_values = parse_list(args.c, "c");
  const std::vector<double> r_values = parse_list(args.r, "r");
  std::vector<GapMode> modes;
  if (args.mode == "both")
    modes = {GapMode::large_gaps, GapMode::small_gaps};
  else
    modes = {parse_mode(args.mode)};

  std::vector<int> degrees;
  for (double d : parse_list(args.degrees, "degree")) {
    const int degree = static_cast<int>(d);
    if (degree < 0 || degree > PolynomialF::kMaxDegree || degree != d)
      throw param_error("degree: must be an integer in [0, 6], got " + std::to_string(d));
    degrees.push_back(degree);
  }

  struct Point {
    GapMode mode;
    double r, c;
    int degree;
  };
  std::vector<Point> grid;
  for (GapMode mode : modes)  // lexicographic by (mode, r, c, degree)
    for (double r : r_values)
      for (double c : c_values)
        for (int degree : degrees) grid.push_back({mode, r, c, degree});
  std::stable_sort(grid.begin(), grid.end(), [](const Point& a, const Point& b) {
    if (a.mode != b.mode) return a.mode == GapMode::large_gaps;
    if (a.r != b.r) return a.r < b.r;
    if (a.c != b.c) return a.c < b.c;
    return a.degree < b.degree;
  });

  const int max_degree = *std::max_element(degrees.begin(), degrees.end());
  std::vector<std::string> header{"c", "r", "mode", "degree", "h_opt"};
  for (int i = 0; i <= max_degree; ++i) header.push_back("a" + std::to_string(i));
  std::string text = report::csv_line(header);

  // grid points are independent; results land by index so the output order
  // (and bytes) never depend on scheduling
  std::vector<optimizer::OptimalF> results(grid.size());
  const unsigned workers =
      std::min<std::size_t>(parallel::resolve_threads(global.threads), grid.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      results[i] = optimizer::optimal_f_eigen(grid[i].c, grid[i].r, grid[i].degree, grid[i].mode);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
          results[i] =
              optimizer::optimal_f_eigen(grid[i].c, grid[i].r, grid[i].degree, grid[i].mode);
      }));
    for (auto& fut : futures) fut.get();
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> cells{report::format_double(grid[i].c),
                                   report::format_double(grid[i].r), mode_name(grid[i].mode),
                                   std::to_string(grid[i].degree),
                                   report::format_double(results[i].h_value)};
    for (int k = 0; k <= max_degree; ++k)
      cells.push_back(k < static_cast<int>(results[i].coeffs.size())
                          ? report::format_double(results[i].coeffs[k])
                          : "");
    text += report::csv_line(cells);
  }
  write_text(global.output, text);
  return 0;
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceArgs {
  std::vector<std::string> overrides;
};

struct Checkpoint {
  std::string label;
  double c;
  double r;  // 0 marks the symmetric r=1 form
  std::vector<double> coeffs;
  GapMode mode;
  bool expect_below_one;
};

int run_reproduce(const ReproduceArgs& args, const GlobalOptions& global) {
  require_json_format(global, "reproduce");
  Timer timer;
  std::vector<Checkpoint> checks{
      {"large gaps, degree-2 weight", 2.69, 3.1, {1.0, 10.0, 39.0}, GapMode::large_gaps, true},
      {"small gaps, degree-2 weight", 0.5155, 1.23, {1.0, 0.99, -0.42}, GapMode::small_gaps,
       false},
      {"small gaps, symmetric r=1 form", 0.5179, 0.0, {1.0, 0.46526, -0.46526},
       GapMode::small_gaps, false},
      {"large gaps, symmetric r=1 form", 1.97, 0.0, {1.0, 17.9426, -17.9426},
       GapMode::large_gaps, true},
      {"large gaps, constant weight", 2.337, 2.2, {1.0}, GapMode::large_gaps, true},
      {"small gaps, constant weight", 0.5172, 1.1, {1.0}, GapMode::small_gaps, false},
  };

  // test hook: replace a checkpoint's polynomial ("IDX=c0,c1,...")
  for (const std::string& text : args.overrides) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw param_error("override: expected IDX=c0,c1,..., got '" + text + "'");
    const int idx = static_cast<int>(parse_number(text.substr(0, eq), "override index"));
    if (idx < 1 || idx > static_cast<int>(checks.size()))
      throw param_error("override: index must be in [1, 6], got " + std::to_string(idx));
    checks[idx - 1].coeffs = parse_list(text.substr(eq + 1), "override coeffs");
    checks[idx - 1].label += " (override)";
  }

  report::ResultRecord record("reproduce");
  record.set_parameter("engine", global.engine);
  nlohmann::json lines = nlohmann::json::array();
  int passed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& cp = checks[i];
    const PolynomialF f(cp.coeffs);
    std::optional<double> hq, hs;
    if (global.engine == "quadrature" || global.engine == "both") {
      hq = cp.r == 0.0 ? eval_h_r1(cp.c, f, cp.mode)
                       : eval_h_quadrature(FunctionalParams(cp.c, cp.r, cp.mode), f);
    }
    if (global.engine == "series" || global.engine == "both") {
      // the symmetric form reduces to r = 1, which the series engine covers
      const double r_eff = cp.r == 0.0 ? 1.0 : cp.r;
      hs = eval_h_series(FunctionalParams(cp.c, r_eff, cp.mode), f);
    }
    if (!hq && !hs) throw param_error("engine: expected quadrature|series|both");
    if (hq && hs && std::abs(*hq - *hs) > 1e-8)
      throw accuracy_error("reproduce: engine residual " + std::to_string(std::abs(*hq - *hs)) +
                           " exceeds 1e-8 on checkpoint " + std::to_string(i + 1));
    const double h = hq ? *hq : *hs;
    const bool ok = cp.expect_below_one ? h < 1.0 : h > 1.0;
    passed += ok ? 1 : 0;

    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " " << (i + 1) << "/6 " << cp.label << ": h(" << cp.c
         << ") = " << report::format_double(h) << (cp.expect_below_one ? " expected < 1"
                                                                       : " expected > 1");
    std::cout << line.str() << "\n";
    lines.push_back({{"index", i + 1},
                     {"label", cp.label},
                     {"c", cp.c},
                     {"h", h},
                     {"expected", cp.expect_below_one ? "h<1" : "h>1"},
                     {"pass", ok}});
  }
  std::cout << passed << "/6 checkpoints passed\n";

  record.set_output("checkpoints", lines);
  record.set_output("passed", passed);
  record.set_wall_time(timer.seconds());
  if (!global.output.empty()) write_text(global.output, record.dump());
  if (passed != static_cast<int>(checks.size()))
    throw reproduce_failure("reproduce: " + std::to_string(6 - passed) +
                            " checkpoint(s) failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for zero-gap functional bounds"};
  app.set_config("--config", "", "Read options from a key=value config file");
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: json|csv (command-dependent)");
  app.add_option("--output", global.output, "Write the result to this path instead of stdout");
  app.add_option("--engine", global.engine,
                 "Evaluation engine: quadrature|series|both (default both)");
  app.add_option("--threads", global.threads, "Worker thread cap (0 = logical cores)");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate h(c) for explicit parameters");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--c", eval_args.c, "Gap length in average spacings")->required();
  eval_cmd->add_option("--r", eval_args.r, "Divisor power r in [1, 6]")->required();
  eval_cmd->add_option("--mode", eval_args.mode, "large|small")->required();
  eval_cmd->add_option("--coeffs", eval_args.coeffs, "Weight polynomial a0,a1,...")->required();

  OptimizeArgs opt_args;
  auto* opt_cmd = app.add_subcommand("optimize", "Best weight polynomial and r at fixed c");
  opt_cmd->fallthrough();
  opt_cmd->add_option("--c", opt_args.c, "Gap length")->required();
  opt_cmd->add_option("--degree", opt_args.degree, "Polynomial degree (<= 6)");
  opt_cmd->add_option("--mode", opt_args.mode, "large|small")->required();
  opt_cmd->add_option("--r-min", opt_args.r_min, "Lower r bound");
  opt_cmd->add_option("--r-max", opt_args.r_max, "Upper r bound");

  CriticalArgs crit_args;
  auto* crit_cmd = app.add_subcommand("critical-c", "Locate the h = 1 crossing");
  crit_cmd->fallthrough();
  crit_cmd->add_option("--degree", crit_args.degree, "Polynomial degree (<= 6)");
  crit_cmd->add_option("--mode", crit_args.mode, "large|small")->required();
  crit_cmd->add_option("--r-min", crit_args.r_min, "Lower r bound");
  crit_cmd->add_option("--r-max", crit_args.r_max, "Upper r bound");
  crit_cmd->add_option("--c-min", crit_args.c_min, "Scan start (0 = mode default)");
  crit_cmd->add_option("--c-max", crit_args.c_max, "Scan end (0 = mode default)");
  crit_cmd->add_option("--step", crit_args.step, "Scan step");
  crit_cmd->add_option("--resolution", crit_args.resolution, "Bisection resolution");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Discrete finite-T study against the asymptotics");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("--T", oracle_args.T, "Heights, e.g. 1e4,1e5,1e6");
  oracle_cmd->add_option("--r", oracle_args.r, "Divisor power r >= 1");
  oracle_cmd->add_option("--c", oracle_args.c, "Gap length");
  oracle_cmd->add_option("--mode", oracle_args.mode, "large|small");
  oracle_cmd->add_option("--coeffs", oracle_args.coeffs, "Weight polynomial a0,a1,...");
  oracle_cmd->add_option("--sieve-limit", oracle_args.sieve_limit,
                         "Sieve size (default: largest K)");
  oracle_cmd->add_option("--max-sieve", oracle_args.max_sieve,
                         "Memory guard cap on the sieve size");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Optimized h over a (c, r) grid, CSV output");
  scan_cmd->fallthrough();
  scan_cmd->add_option("--c", scan_args.c, "c values: list a,b,c or range lo:hi:step")
      ->required();
  scan_cmd->add_option("--r", scan_args.r, "r values: list or range")->required();
  scan_cmd->add_option("--mode", scan_args.mode, "large|small|both");
  scan_cmd->add_option("--degree", scan_args.degrees, "Degree list, e.g. 2 or 0,2,4");

  ReproduceArgs repro_args;
  auto* repro_cmd =
      app.add_subcommand("reproduce", "Re-check the six published h(c) inequalities");
  repro_cmd->fallthrough();
  repro_cmd->add_option("--override", repro_args.overrides,
                        "Replace checkpoint IDX's polynomial: IDX=c0,c1,... (testing aid)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*eval_cmd) return run_eval(eval_args, global);
    if (*opt_cmd) return run_optimize(opt_args, global);
    if (*crit_cmd) return run_critical(crit_args, global);
    if (*oracle_cmd) return run_oracle(oracle_args, global);
    if (*scan_cmd) return run_scan(scan_args, global);
    if (*repro_cmd) return run_reproduce(repro_args, global);
    std::cerr << "no command given\n";
    return kExitValidation;
  } catch (const param_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const branch_error& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const search_error& e) {
    std::cerr << "search error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const conditioning_error& e) {
    std::cerr << "conditioning error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const io_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const reproduce_failure& e) {
    std::cerr << e.what() << "\n";
    return kExitReproduce;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
