#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourlab/core.hpp"

namespace tourlab {

/// Outcome of one solver invocation.
struct RunResult {
  Tour best_tour = Tour::identity(1);
  double best_length = 0.0;
  /// Generations (GA) or hill-climbing steps summed over runs (HC).
  std::size_t iterations = 0;
  std::uint64_t fitness_evaluations = 0;
  double wall_time_ms = 0.0;
  /// Hill-climbing runs performed; 1 for the GA.
  std::size_t runs = 1;
  /// Runs that stopped immediately on an already visited start.
  std::size_t early_outs = 0;
  /// Best-so-far length after each generation (GA) or each run (HC).
  std::vector<double> progress;
};

}  // namespace tourlab
