#pragma once

/// @file bench.hpp
/// Repeated-trial experiments: per-trial seeding, a worker pool whose output
/// does not depend on the number of workers, and summary statistics.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tourlab/core.hpp"
#include "tourlab/ga.hpp"
#include "tourlab/hillclimb.hpp"
#include "tourlab/result.hpp"

namespace tourlab {

using SolverConfig = std::variant<GaConfig, HcConfig>;

/// "ga/baseline", "hc/modified", ...; a non-default GA selection scheme is
/// appended ("ga/baseline/length-proportional").
std::string describe(const SolverConfig& solver);

/// Validates the configuration (throws ConfigError).
void validate(const SolverConfig& solver);

/// Runs the solver once with its own seed.
RunResult run_solver(const Instance& instance, const SolverConfig& solver);

/// Copy of `solver` with its seed replaced.
SolverConfig with_seed(SolverConfig solver, std::uint64_t seed);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// mix64(mix64(experiment_seed) + (trial_id + 1) * 0x9e3779b97f4a7c15).
/// Injective in trial_id for a fixed experiment seed.
std::uint64_t derive_trial_seed(std::uint64_t experiment_seed, std::uint64_t trial_id);

struct TrialRecord {
  std::size_t trial_id;
  std::uint64_t seed;
  double tour_length;
  double wall_time_ms;
  std::uint64_t fitness_evaluations;
  std::size_t iterations;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Mean, sample standard deviation (n - 1) and inclusive linearly
/// interpolated quartiles. A single sample reports std = 0 and sets
/// `degenerate`.
struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  bool degenerate = false;
};

/// Throws std::invalid_argument on an empty sample.
Summary summarize(std::span<const double> values);

/// Quantile at p in [0, 1] of already sorted values, interpolating linearly
/// between order statistics at position p * (n - 1).
double quantile_sorted(std::span<const double> sorted, double p);

struct ExperimentStats {
  std::string instance_name;
  std::string solver;
  std::uint64_t experiment_seed = 0;
  std::vector<TrialRecord> trials;
  /// Over tour_length.
  Summary lengths;
  double mean_wall_time_ms = 0.0;
  /// Best tour over all trials (lowest trial id on ties).
  Tour best_tour = Tour::identity(1);
  double best_length = 0.0;
};

/// Runs `trials` independent trials seeded by derive_trial_seed. Records are
/// ordered by trial id and identical for every parallelism level.
/// Configuration errors are raised before any trial runs.
ExperimentStats run_experiment(const Instance& instance, const SolverConfig& solver,
                               std::size_t trials, std::uint64_t experiment_seed,
                               std::size_t parallelism = 1);

struct Comparison {
  ExperimentStats a;
  ExperimentStats b;
  /// mean(b) / mean(a).
  double mean_ratio;
  /// (mean(a) - mean(b)) / mean(a).
  double improvement;
};

/// Both arms draw their trial seeds from the same experiment seed, so trial
/// k of each arm starts from the same seed.
Comparison compare(const Instance& instance, const SolverConfig& solver_a,
                   const SolverConfig& solver_b, std::size_t trials,
                   std::uint64_t experiment_seed, std::size_t parallelism = 1);

}  // namespace tourlab
