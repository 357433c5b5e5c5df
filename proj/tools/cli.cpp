#include "cli.hpp"

#include "coulomb_sharp/figures.hpp"
#include "coulomb_sharp/optima.hpp"
#include "coulomb_sharp/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace coulomb_sharp::cli {

namespace {

using verification::Json;

constexpr int kDecimalDigits = 15;

// Usage errors raised after CLI11 parsing succeeded.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BigRational rational_arg(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": not a rational number: " + text);
  }
}

BigRational rational_field(const Json& value, const std::string& name) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return BigRational(value.get<long>());
  throw std::invalid_argument(name + ": expected a rational given as string or integer");
}

Json exact_and_decimal(const BigRational& v) {
  return Json{{"exact", to_string(v)}, {"decimal", to_decimal(v, kDecimalDigits)}};
}

Json bracket_json(const RootBracket& b) {
  return Json{{"lower", exact_and_decimal(b.lower)}, {"upper", exact_and_decimal(b.upper)}};
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_atomically(path, contents);
  }
}

// spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  int d = 0;
  std::string eta;
  std::string format = "text";
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const BigRational eta = rational_arg(args.eta, "eta");
  spectrum::SpectrumParams params = [&] {
    try {
      return spectrum::SpectrumParams(args.d, eta);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto levels = spectrum::levels(params);
  const BigInt count = spectrum::counting_function(params);
  if (args.format == "json") {
    Json list = Json::array();
    for (const auto& level : levels)
      list.push_back(Json{{"j", level.j},
                          {"multiplicity", to_string(level.multiplicity)},
                          {"energy", exact_and_decimal(level.energy)}});
    out << Json{{"d", args.d}, {"eta", to_string(eta)}, {"levels", list}, {"count", to_string(count)}}.dump(2)
        << '\n';
    return kSuccess;
  }
  out << "d = " << args.d << ", eta = " << to_string(eta) << " (units Lambda = 1)\n";
  if (levels.empty()) {
    out << "empty spectrum\n";
  } else {
    out << "j\tmultiplicity\tenergy\tenergy_decimal\n";
    for (const auto& level : levels)
      out << level.j << '\t' << to_string(level.multiplicity) << '\t' << to_string(level.energy) << '\t'
          << to_decimal(level.energy, kDecimalDigits) << '\n';
  }
  out << "N = " << to_string(count) << '\n';
  return kSuccess;
}

// constants --------------------------------------------------------------

struct ConstantsArgs {
  int d = 0;
  std::string which;
  std::string tol = "1/1000";
  int precision = 30;
};

int cmd_constants(const ConstantsArgs& args, std::ostream& out) {
  if (args.d < 3) throw UsageError("--d must be at least 3");
  const BigRational tol = rational_arg(args.tol, "tol");
  if (tol <= 0) throw UsageError("--tol must be positive");
  Json result{{"d", args.d}, {"which", args.which}};
  if (args.which == "t-star") {
    const RootBracket b = optima::locate_t_star(args.d, tol);
    const auto [lower, upper] = optima::maximizer_bounds(args.d);
    result["bracket"] = bracket_json(b);
    result["bounds"] = Json{{"lower", exact_and_decimal(lower)}, {"upper", exact_and_decimal(upper)}};
  } else {
    const bool q = args.which == "q-star";
    const optima::StarResult s = q ? optima::q_star(args.d, tol) : optima::a_star(args.d, tol);
    if (s.value) {
      result["value"] = to_string(*s.value);
      result["value_decimal"] = to_decimal(*s.value, kDecimalDigits);
    } else {
      const HighPrecisionReal root = evaluate_validated(
          std::max(args.precision, kDecimalDigits), [&](mpfr_prec_t bits) { return sqrt(Real(s.value_squared, bits)); });
      result["value_decimal"] = root.value.to_decimal(kDecimalDigits);
    }
    result["value_squared"] = to_string(s.value_squared);
    result["argmax_ell"] = s.argmax_ell;
    result["window"] = Json::array({s.candidate_window.lower, s.candidate_window.upper});
    result["tie"] = s.tie;
    if (s.maximizer_bracket) result["maximizer_bracket"] = bracket_json(*s.maximizer_bracket);
  }
  out << result.dump(2) << '\n';
  return kSuccess;
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string d_range;
  std::string out;
  std::string config;
  std::string gamma;
  std::string eta_start, eta_stop, eta_step;
  std::optional<int> precision;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_verify(const VerifyArgs& args, int threads, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  if (!args.config.empty()) {
    try {
      config = parse_sweep_config(read_file(args.config));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
  }
  if (!args.suites.empty()) config.suites = args.suites;
  if (!args.d_range.empty()) config.d_values = parse_d_range(args.d_range);
  if (!args.out.empty()) config.output_path = args.out;
  if (!args.gamma.empty()) config.gamma = rational_arg(args.gamma, "gamma");
  if (!args.eta_start.empty() || !args.eta_stop.empty() || !args.eta_step.empty()) {
    if (args.eta_start.empty() || args.eta_stop.empty() || args.eta_step.empty())
      throw UsageError("--eta-start, --eta-stop and --eta-step go together");
    config.eta_grid = verification::EtaGrid{rational_arg(args.eta_start, "eta-start"),
                                            rational_arg(args.eta_stop, "eta-stop"),
                                            rational_arg(args.eta_step, "eta-step")};
  }
  if (config.eta_grid && (config.eta_grid->step <= 0 || config.eta_grid->start >= config.eta_grid->stop))
    throw UsageError("eta grid requires step > 0 and start < stop");
  if (config.suites.empty()) config.suites = {"all"};
  for (const auto& suite : config.suites)
    if (!verification::is_suite(suite)) throw UsageError("unknown suite: " + suite);

  verification::SuiteOptions options;
  options.d_values = config.d_values;
  options.eta_grid = config.eta_grid;
  options.gamma = config.gamma;
  options.precision = args.precision.value_or(config.precision.value_or(default_precision()));
  options.threads = threads;
  if (options.gamma && *options.gamma < 1) throw UsageError("--gamma: theorem range is gamma >= 1");

  std::string report;
  int passed = 0, failed = 0, skipped = 0, inconclusive = 0;
  for (const auto& suite : config.suites) {
    for (const auto& record : verification::run_suite(suite, options)) {
      report += record.to_json_line();
      report += '\n';
      switch (record.verdict) {
        case verification::Verdict::pass: ++passed; break;
        case verification::Verdict::fail: ++failed; break;
        case verification::Verdict::skipped: ++skipped; break;
        case verification::Verdict::inconclusive: ++inconclusive; break;
      }
    }
  }
  emit(config.output_path, report, out);
  err << passed + failed + skipped + inconclusive << " records: " << passed << " pass, " << failed << " fail, "
      << skipped << " skipped, " << inconclusive << " inconclusive\n";
  return failed + inconclusive == 0 ? kSuccess : kFailure;
}

// figure -----------------------------------------------------------------

struct FigureArgs {
  std::string which;
  std::string out;
  std::string start, stop, step;
};

int cmd_figure(const FigureArgs& args, int threads, std::ostream& out, std::ostream& err) {
  std::optional<figures::Grid> grid;
  if (!args.start.empty() || !args.stop.empty() || !args.step.empty()) {
    if (args.start.empty() || args.stop.empty() || args.step.empty())
      throw UsageError("--start, --stop and --step go together");
    grid = figures::Grid{rational_arg(args.start, "start"), rational_arg(args.stop, "stop"),
                         rational_arg(args.step, "step")};
    if (grid->step <= 0 || grid->start >= grid->stop) throw UsageError("grid requires step > 0 and start < stop");
  }
  const figures::FigureDataset data = figures::make_figure(args.which, grid, threads);
  emit(args.out, data.to_csv(), out);
  err << data.figure_id << ": " << data.rows.size() << " rows; " << data.description << '\n';
  return kSuccess;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  SweepConfig config;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& value = it.value();
    if (key == "d_values") {
      if (!value.is_array()) throw std::invalid_argument("d_values: expected an array");
      for (const auto& d : value) {
        if (!d.is_number_integer()) throw std::invalid_argument("d_values: expected integers");
        config.d_values.push_back(d.get<int>());
      }
    } else if (key == "eta_grid") {
      if (!value.is_object() || !value.contains("start") || !value.contains("stop") || !value.contains("step"))
        throw std::invalid_argument("eta_grid: expected {start, stop, step}");
      verification::EtaGrid grid{rational_field(value["start"], "eta_grid.start"),
                                 rational_field(value["stop"], "eta_grid.stop"),
                                 rational_field(value["step"], "eta_grid.step")};
      if (grid.step <= 0) throw std::invalid_argument("eta_grid: step must be positive");
      if (grid.start >= grid.stop) throw std::invalid_argument("eta_grid: start must be below stop");
      config.eta_grid = grid;
    } else if (key == "gamma") {
      if (!value.is_null()) config.gamma = rational_field(value, "gamma");
    } else if (key == "suites") {
      if (!value.is_array()) throw std::invalid_argument("suites: expected an array");
      for (const auto& s : value) {
        if (!s.is_string()) throw std::invalid_argument("suites: expected strings");
        config.suites.push_back(s.get<std::string>());
      }
    } else if (key == "output_path") {
      if (!value.is_string()) throw std::invalid_argument("output_path: expected a string");
      config.output_path = value.get<std::string>();
    } else if (key == "precision") {
      if (!value.is_number_integer() || value.get<long>() <= 0)
        throw std::invalid_argument("precision: expected a positive integer");
      config.precision = value.get<int>();
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return config;
}

std::vector<int> parse_d_range(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string rest = text.substr(dots + 2);
    hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("--d-range: expected A..B, got " + text);
  }
  if (lo < 3 || lo > hi) throw UsageError("--d-range: requires 3 <= A <= B");
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

int default_precision() {
  const char* env = std::getenv("COULOMB_SHARP_PRECISION");
  if (env == nullptr || *env == '\0') return 30;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value <= 0 || value > 100000)
    throw UsageError(std::string("COULOMB_SHARP_PRECISION: expected a positive integer, got ") + env);
  return static_cast<int>(value);
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + temp.string());
    file << contents;
    file.flush();
    if (!file) throw std::runtime_error("write failed for " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral quantities and sharp constants for shifted Coulomb Hamiltonians", "coulomb_sharp"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Negative eigenvalues and their count");
  spectrum_cmd->add_option("--d", spectrum_args.d, "Dimension (>= 3)")->required();
  spectrum_cmd->add_option("--eta", spectrum_args.eta, "Coupling ratio kappa/sqrt(Lambda), e.g. 11.1 or 111/10")
      ->required();
  spectrum_cmd->add_option("--format", spectrum_args.format)->check(CLI::IsMember({"json", "text"}));

  ConstantsArgs constants_args;
  auto* constants_cmd = app.add_subcommand("constants", "Sharp constants Q_d*, A_d* and the maximizer t*_d");
  constants_cmd->add_option("--d", constants_args.d, "Dimension (>= 3)")->required();
  constants_cmd->add_option("--which", constants_args.which)
      ->required()
      ->check(CLI::IsMember({"q-star", "a-star", "t-star"}));
  constants_cmd->add_option("--tol", constants_args.tol, "Bracket width for the real maximizer");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and write a JSON-lines report");
  verify_cmd->add_option("--suite", verify_args.suites, "lt-gamma1, d3-envelopes, coefficients, identities, "
                                                        "asymptotics, clr or all (repeatable)");
  verify_cmd->add_option("--d-range", verify_args.d_range, "Dimensions A..B");
  verify_cmd->add_option("--out", verify_args.out, "Report path (stdout if omitted)");
  verify_cmd->add_option("--config", verify_args.config, "JSON sweep configuration");
  verify_cmd->add_option("--gamma", verify_args.gamma, "Also check the general-gamma bound on the lt-gamma1 grid");
  verify_cmd->add_option("--eta-start", verify_args.eta_start);
  verify_cmd->add_option("--eta-stop", verify_args.eta_stop);
  verify_cmd->add_option("--eta-step", verify_args.eta_step);
  verify_cmd->add_option("--precision", verify_args.precision, "Significant digits")->check(CLI::PositiveNumber);

  FigureArgs figure_args;
  auto* figure_cmd = app.add_subcommand("figure", "Export figure data as CSV");
  figure_cmd->add_option("--which", figure_args.which)->required()->check(CLI::IsMember(figures::figure_ids()));
  figure_cmd->add_option("--out", figure_args.out, "CSV path (stdout if omitted)");
  figure_cmd->add_option("--start", figure_args.start);
  figure_cmd->add_option("--stop", figure_args.stop);
  figure_cmd->add_option("--step", figure_args.step);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(spectrum_args, out);
    if (*constants_cmd) {
      constants_args.precision = default_precision();
      return cmd_constants(constants_args, out);
    }
    if (*verify_cmd) return cmd_verify(verify_args, threads, out, err);
    if (*figure_cmd) return cmd_figure(figure_args, threads, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace coulomb_sharp::cli
