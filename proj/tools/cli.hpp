#pragma once

// Command-line front end: spectrum, constants, verify and figure.

#include "coulomb_sharp/exact/rational.hpp"
#include "coulomb_sharp/verification.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coulomb_sharp::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct SweepConfig {
  std::vector<int> d_values;
  std::optional<verification::EtaGrid> eta_grid;
  std::optional<BigRational> gamma;
  std::vector<std::string> suites;
  std::string output_path;
  std::optional<int> precision;
};

/// Reads a JSON object with any of the keys d_values, eta_grid {start, stop,
/// step}, gamma, suites, output_path, precision. Rationals are given as strings
/// ("11.1", "1/100") or integers. Throws std::invalid_argument on unknown keys,
/// malformed values or an invalid grid.
SweepConfig parse_sweep_config(const std::string& json_text);

/// "A..B" with A <= B.
std::vector<int> parse_d_range(const std::string& text);

/// COULOMB_SHARP_PRECISION if set (must be a positive integer), else 30.
int default_precision();

/// Writes to a temporary file next to `path` and renames it into place.
void write_atomically(const std::string& path, const std::string& contents);

/// Runs the command line; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coulomb_sharp::cli
