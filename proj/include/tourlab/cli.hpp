#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tourlab/core.hpp"

namespace tourlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfigError = 2,
  kExitParseError = 3,
  kExitRunAborted = 4,
};

/// Parses "euclidean", "manhattan", "wmanhattan:wx,wy" or "wchebyshev:wx,wy".
/// Throws ConfigError on anything else.
Metric parse_metric(const std::string& spec);

/// Entry point of the `tourlab` command: subcommands solve, bench, compare
/// and oracle. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourlab
