#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "freefid/sweep.hpp"

namespace freefid {

enum class CliMode { Sweep, Boundary, OracleCheck, Help };

struct CliRequest {
  CliMode mode = CliMode::Sweep;
  SweepConfig config;
  std::string help_text;
};

/// "a:b:n" -> GridRange. Throws ConfigError.
GridRange parse_range(const std::string& text);

/// Throws Error(ConfigError) with a usage message on malformed input.
CliRequest parse_cli(const std::vector<std::string>& args);
CliRequest parse_cli(int argc, const char* const* argv);

/// Exit codes: 0 success, 1 usage or I/O error, 2 oracle-check failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freefid
