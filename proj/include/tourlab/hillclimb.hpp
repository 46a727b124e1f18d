#pragma once

/// @file hillclimb.hpp
/// Steepest-descent hill climbing on the transposition graph.
///
/// The baseline climber moves to the shortest neighbor while it is strictly
/// shorter and restarts from a fresh random tour at a local minimum. The
/// modified climber may take one non-improving step out of a local minimum,
/// never re-enters a permutation it has already visited, and stops a restart
/// at once when it starts from a visited state. Visited states are shared by
/// all runs of one run_hc call.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tourlab/core.hpp"
#include "tourlab/result.hpp"

namespace tourlab {

enum class HcVariant { Baseline, Modified };

std::string_view to_string(HcVariant variant);

/// How often the modified climber may step out of a local minimum.
enum class DownhillAllowance {
  /// Restored once the length falls strictly below the local minimum that
  /// last used it.
  Replenishing,
  /// One non-improving step per run.
  OncePerRun,
};

struct HcConfig {
  static constexpr std::size_t kDefaultMaxSteps = 1'000'000;
  static constexpr std::size_t kDefaultVisitedCapacity = 10'000'000;

  /// Random starts beyond the first.
  std::size_t restarts = 0;
  HcVariant variant = HcVariant::Baseline;
  std::size_t max_steps_per_run = kDefaultMaxSteps;
  std::uint64_t seed = 0;
  DownhillAllowance allowance = DownhillAllowance::Replenishing;
  std::size_t visited_capacity = kDefaultVisitedCapacity;

  /// Throws ConfigError.
  void validate() const;
};

/// Exact membership over permutations. Insertion stops silently once
/// `capacity` entries are stored.
class VisitedSet {
 public:
  explicit VisitedSet(std::size_t capacity = HcConfig::kDefaultVisitedCapacity)
      : capacity_(capacity) {}

  /// Returns true when the tour was newly recorded.
  bool insert(const Tour& tour);
  bool contains(const Tour& tour) const;
  bool contains(const std::vector<City>& order) const { return states_.count(order) != 0; }

  std::size_t size() const { return states_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool saturated() const { return states_.size() >= capacity_; }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<City>& v) const { return TourHash{}(v); }
  };

  std::size_t capacity_;
  std::unordered_set<std::vector<City>, Hash> states_;
};

struct Step {
  Tour tour;
  double length;
};

/// Scans all n(n-1)/2 transposition neighbors in lexicographic (i, j)
/// order, skipping members of `forbidden`, and returns the shortest (first
/// one wins ties). Empty when every neighbor is forbidden. `evaluations`, if
/// given, is incremented by the number of neighbor lengths computed.
std::optional<Step> steepest_step(const Instance& instance, const Tour& tour,
                                  const VisitedSet* forbidden = nullptr,
                                  std::uint64_t* evaluations = nullptr);

struct ClimbOptions {
  std::size_t max_steps = HcConfig::kDefaultMaxSteps;
  DownhillAllowance allowance = DownhillAllowance::Replenishing;
  /// Keep every visited tour in ClimbResult::path.
  bool record_path = false;
};

struct ClimbResult {
  /// Best tour seen during the run.
  Tour tour;
  double length;
  std::size_t steps = 0;
  std::uint64_t evaluations = 0;
  bool early_out = false;
  /// Lengths of the states occupied, starting with the start tour.
  std::vector<double> path_lengths;
  /// Occupied states, filled only with ClimbOptions::record_path.
  std::vector<Tour> path;
};

/// Thrown when a run exceeds its step cap; carries the best tour so far.
class RunAborted : public std::runtime_error {
 public:
  RunAborted(Tour best, double length, std::size_t steps);

  const Tour& best_tour() const { return best_; }
  double best_length() const { return length_; }
  std::size_t steps() const { return steps_; }

 private:
  Tour best_;
  double length_;
  std::size_t steps_;
};

/// Moves to the steepest neighbor while it is strictly shorter. The result
/// has no strictly shorter transposition neighbor.
ClimbResult hill_climb_baseline(const Instance& instance, const Tour& start,
                                const ClimbOptions& options = {});

/// The modified climber. Returns early_out = true with zero steps when
/// `start` is already in `visited`; otherwise records every occupied state
/// in `visited` and returns the best tour seen.
ClimbResult hill_climb_modified(const Instance& instance, const Tour& start, VisitedSet& visited,
                                const ClimbOptions& options = {});

/// restarts + 1 runs from seed-derived random starts; returns the best tour
/// over all runs. RunAborted propagates only when every run aborts.
RunResult run_hc(const Instance& instance, const HcConfig& config);

}  // namespace tourlab
