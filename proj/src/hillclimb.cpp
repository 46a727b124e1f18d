#include "tourlab/hillclimb.hpp"

#include <chrono>
#include <limits>
#include <string>
#include <utility>

#include "tourlab/errors.hpp"
#include "tourlab/rng.hpp"

namespace tourlab {

std::string_view to_string(HcVariant variant) {
  return variant == HcVariant::Baseline ? "baseline" : "modified";
}

void HcConfig::validate() const {
  if (max_steps_per_run < 1) throw ConfigError("max steps per run must be at least 1");
}

bool VisitedSet::insert(const Tour& tour) {
  if (saturated()) return false;
  return states_.emplace(tour.begin(), tour.end()).second;
}

bool VisitedSet::contains(const Tour& tour) const {
  return contains(std::vector<City>(tour.begin(), tour.end()));
}

RunAborted::RunAborted(Tour best, double length, std::size_t steps)
    : std::runtime_error("hill-climbing run exceeded " + std::to_string(steps) + " steps"),
      best_(std::move(best)),
      length_(length),
      steps_(steps) {}

std::optional<Step> steepest_step(const Instance& instance, const Tour& tour,
                                  const VisitedSet* forbidden, std::uint64_t* evaluations) {
  const std::size_t n = tour.size();
  std::vector<City> scratch(tour.begin(), tour.end());
  double best_length = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  bool found = false;
  std::uint64_t evaluated = 0;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::swap(scratch[i], scratch[j]);
      const double length = tour_length(instance, std::span<const City>(scratch));
      ++evaluated;
      // Membership is only checked for candidates that would win the scan.
      if (length < best_length && !(forbidden && forbidden->contains(scratch))) {
        best_length = length;
        best_i = i;
        best_j = j;
        found = true;
      }
      std::swap(scratch[i], scratch[j]);
    }
  }

  if (evaluations) *evaluations += evaluated;
  if (!found) return std::nullopt;
  return Step{transpose(tour, best_i, best_j), best_length};
}

ClimbResult hill_climb_baseline(const Instance& instance, const Tour& start,
                                const ClimbOptions& options) {
  ClimbResult result{start, tour_length(instance, start), 0, 0, false, {}, {}};
  result.evaluations = 1;
  result.path_lengths.push_back(result.length);
  if (options.record_path) result.path.push_back(start);

  while (true) {
    auto step = steepest_step(instance, result.tour, nullptr, &result.evaluations);
    if (!step || !(step->length < result.length)) break;
    if (result.steps >= options.max_steps) {
      throw RunAborted(result.tour, result.length, result.steps);
    }
    result.tour = std::move(step->tour);
    result.length = step->length;
    ++result.steps;
    result.path_lengths.push_back(result.length);
    if (options.record_path) result.path.push_back(result.tour);
  }
  return result;
}

ClimbResult hill_climb_modified(const Instance& instance, const Tour& start, VisitedSet& visited,
                                const ClimbOptions& options) {
  ClimbResult result{start, tour_length(instance, start), 0, 0, false, {}, {}};
  result.evaluations = 1;
  result.path_lengths.push_back(result.length);
  if (options.record_path) result.path.push_back(start);

  if (visited.contains(start)) {
    result.early_out = true;
    return result;
  }
  visited.insert(start);

  Tour current = start;
  double current_length = result.length;
  bool allowance = true;
  // Length of the local minimum that last used the allowance.
  double trigger = std::numeric_limits<double>::infinity();

  while (true) {
    auto step = steepest_step(instance, current, &visited, &result.evaluations);
    if (!step) break;
    if (step->length < current_length) {
      if (!allowance && options.allowance == DownhillAllowance::Replenishing &&
          step->length < trigger) {
        allowance = true;
      }
    } else if (allowance) {
      allowance = false;
      trigger = current_length;
    } else {
      break;
    }

    if (result.steps >= options.max_steps) {
      throw RunAborted(result.tour, result.length, result.steps);
    }
    current = std::move(step->tour);
    current_length = step->length;
    visited.insert(current);
    ++result.steps;
    result.path_lengths.push_back(current_length);
    if (options.record_path) result.path.push_back(current);
    if (current_length < result.length) {
      result.tour = current;
      result.length = current_length;
    }
  }
  return result;
}

RunResult run_hc(const Instance& instance_in, const HcConfig& config) {
  config.validate();
  if (instance_in.size() < 2) throw ConfigError("hill climbing needs at least 2 locations");

  const auto started = std::chrono::steady_clock::now();
  const Instance instance = instance_in.with_distance_table();
  Rng rng(config.seed);
  ClimbOptions options;
  options.max_steps = config.max_steps_per_run;
  options.allowance = config.allowance;

  std::optional<VisitedSet> visited;
  if (config.variant == HcVariant::Modified) visited.emplace(config.visited_capacity);

  RunResult result;
  result.runs = 0;
  result.best_length = std::numeric_limits<double>::infinity();
  std::size_t aborted = 0;

  auto consider = [&](const Tour& tour, double length) {
    if (length < result.best_length) {
      result.best_tour = tour;
      result.best_length = length;
    }
  };

  for (std::size_t run = 0; run <= config.restarts; ++run) {
    const Tour start = random_tour(instance.size(), rng);
    ++result.runs;
    try {
      ClimbResult climb = config.variant == HcVariant::Baseline
                              ? hill_climb_baseline(instance, start, options)
                              : hill_climb_modified(instance, start, *visited, options);
      result.iterations += climb.steps;
      result.fitness_evaluations += climb.evaluations;
      if (climb.early_out) ++result.early_outs;
      consider(climb.tour, climb.length);
    } catch (const RunAborted& e) {
      ++aborted;
      result.iterations += e.steps();
      consider(e.best_tour(), e.best_length());
    }
    result.progress.push_back(result.best_length);
  }

  if (aborted == result.runs) {
    throw RunAborted(result.best_tour, result.best_length, config.max_steps_per_run);
  }
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace tourlab
