#include "freefid/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "freefid/errors.hpp"
#include "freefid/oracle_check.hpp"
#include "freefid/records.hpp"

namespace freefid {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorCode::ConfigError, "malformed " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

GridRange parse_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw Error(ErrorCode::ConfigError, "range '" + text + "' is not of the form min:max:steps");
  }
  GridRange r;
  r.lo = parse_number(text.substr(0, first), "range minimum");
  r.hi = parse_number(text.substr(first + 1, second - first - 1), "range maximum");
  const double steps = parse_number(text.substr(second + 1), "range step count");
  if (steps < 1 || steps != static_cast<int>(steps)) {
    throw Error(ErrorCode::ConfigError, "range '" + text + "' needs a positive integer step count");
  }
  r.steps = static_cast<int>(steps);
  if (r.steps > 1 && !(r.hi > r.lo)) {
    throw Error(ErrorCode::ConfigError, "range '" + text + "' needs max > min");
  }
  return r;
}

CliRequest parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Ground-state fidelity sweeps for quadratic fermionic Hamiltonians", "freefid"};
  app.set_config("--config", "", "key = value configuration file; explicit flags take precedence");
  app.allow_config_extras(false);

  CliRequest req;
  SweepConfig& cfg = req.config;
  std::string mu_text = "-2:4:61";
  std::string gamma_text = "-2.5:2.5:51";
  std::string format_text = "csv";
  double tol_sing = -1.0;
  bool boundary = false;
  bool oracle = false;

  app.add_option("--model", cfg.model, "Hamiltonian family (complete-graph)")->capture_default_str();
  app.add_option("--size", cfg.size, "Number of fermionic modes L (even)")->capture_default_str();
  app.add_option("--mu", mu_text, "mu grid as min:max:steps")->capture_default_str();
  app.add_option("--gamma", gamma_text, "gamma grid as min:max:steps")->capture_default_str();
  app.add_option("--delta-mu", cfg.delta_mu, "Forward step in mu")->capture_default_str();
  app.add_option("--delta-gamma", cfg.delta_gamma, "Forward step in gamma")->capture_default_str();
  app.add_option("--tol-sing", tol_sing, "Absolute singular-value threshold (default: relative 1e-12)");
  app.add_option("--format", format_text, "Output format: csv or json")->capture_default_str();
  app.add_option("--out", cfg.output_path, "Output file (default: standard output)");
  app.add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  app.add_flag("--boundary", boundary, "Trace the first-order (det T sign flip) boundary instead of a sweep");
  app.add_flag("--oracle-check", oracle, "Run the exact-diagonalization oracle suite (L <= 8) and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    req.mode = CliMode::Help;
    req.help_text = app.help();
    return req;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }

  cfg.mu = parse_range(mu_text);
  cfg.gamma = parse_range(gamma_text);
  if (format_text == "csv") {
    cfg.format = OutputFormat::Csv;
  } else if (format_text == "json") {
    cfg.format = OutputFormat::Json;
  } else {
    throw Error(ErrorCode::ConfigError, "unknown format '" + format_text + "' (csv or json)");
  }
  if (app.count("--tol-sing") > 0) cfg.tol_sing = tol_sing;
  if (cfg.size < 2 || cfg.size % 2 != 0) {
    throw Error(ErrorCode::ConfigError, "OddSize: --size must be an even integer >= 2, got " +
                                            std::to_string(cfg.size));
  }
  if (!(cfg.delta_mu > 0.0) || !(cfg.delta_gamma > 0.0)) {
    throw Error(ErrorCode::ConfigError, "--delta-mu and --delta-gamma must be positive");
  }
  validate(cfg);
  if (boundary && oracle) throw Error(ErrorCode::ConfigError, "--boundary and --oracle-check are exclusive");
  req.mode = oracle ? CliMode::OracleCheck : boundary ? CliMode::Boundary : CliMode::Sweep;
  return req;
}

CliRequest parse_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_cli(args);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliRequest req;
  try {
    req = parse_cli(argc, argv);
  } catch (const Error& e) {
    err << "freefid: " << e.what() << "\nRun with --help for usage.\n";
    return 1;
  }

  try {
    switch (req.mode) {
      case CliMode::Help:
        out << req.help_text;
        return 0;
      case CliMode::OracleCheck: {
        const OracleCheckReport report = run_oracle_check();
        print_report(report, out);
        return report.passed() ? 0 : 2;
      }
      case CliMode::Boundary: {
        const SweepConfig& cfg = req.config;
        const auto points = first_order_boundary(cfg.size, cfg.mu, cfg.gamma, cfg.workers);
        const std::string text = format_boundary(points, cfg.size, cfg.format);
        if (cfg.output_path.empty()) {
          out << text;
        } else {
          write_text(text, cfg.output_path);
        }
        return 0;
      }
      case CliMode::Sweep: {
        const SweepConfig& cfg = req.config;
        const auto records = run_sweep(cfg);
        if (cfg.output_path.empty()) {
          out << format_records(records, cfg.format);
        } else {
          emit_records(records, cfg.format, cfg.output_path);
        }
        return 0;
      }
    }
  } catch (const Error& e) {
    err << "freefid: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace freefid
