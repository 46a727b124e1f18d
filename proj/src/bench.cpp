#include "tourlab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "tourlab/errors.hpp"

namespace tourlab {

std::string describe(const SolverConfig& solver) {
  if (const auto* ga = std::get_if<GaConfig>(&solver)) {
    std::string name = ga->crossover_variant == CrossoverVariant::Baseline ? "ga/baseline"
                                                                           : "ga/modified";
    if (ga->selection != SelectionScheme::ShiftedRoulette) {
      name += "/" + std::string(to_string(ga->selection));
    }
    return name;
  }
  return "hc/" + std::string(to_string(std::get<HcConfig>(solver).variant));
}

void validate(const SolverConfig& solver) {
  std::visit([](const auto& config) { config.validate(); }, solver);
}

RunResult run_solver(const Instance& instance, const SolverConfig& solver) {
  if (const auto* ga = std::get_if<GaConfig>(&solver)) return run_ga(instance, *ga);
  return run_hc(instance, std::get<HcConfig>(solver));
}

SolverConfig with_seed(SolverConfig solver, std::uint64_t seed) {
  std::visit([seed](auto& config) { config.seed = seed; }, solver);
  return solver;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_trial_seed(std::uint64_t experiment_seed, std::uint64_t trial_id) {
  return mix64(mix64(experiment_seed) + (trial_id + 1) * 0x9e3779b97f4a7c15ULL);
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  Summary s;
  s.count = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count == 1) {
    s.std = 0.0;
    s.degenerate = true;
  } else {
    double squares = 0.0;
    for (double v : values) squares += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(squares / static_cast<double>(s.count - 1));
  }
  s.min = sorted.front();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.max = sorted.back();
  return s;
}

ExperimentStats run_experiment(const Instance& instance_in, const SolverConfig& solver,
                               std::size_t trials, std::uint64_t experiment_seed,
                               std::size_t parallelism) {
  validate(solver);
  if (trials < 1) throw ConfigError("an experiment needs at least one trial");
  if (parallelism < 1) throw ConfigError("parallelism must be at least 1");
  if (instance_in.size() < 2) throw ConfigError("solvers need at least 2 locations");

  const Instance instance = instance_in.with_distance_table();
  std::vector<TrialRecord> records(trials);
  std::vector<std::optional<Tour>> tours(trials);
  std::vector<std::exception_ptr> failures(trials);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t id = next++; id < trials; id = next++) {
      const std::uint64_t seed = derive_trial_seed(experiment_seed, id);
      try {
        RunResult run = run_solver(instance, with_seed(solver, seed));
        records[id] = {id, seed, run.best_length, run.wall_time_ms, run.fitness_evaluations,
                       run.iterations};
        tours[id] = std::move(run.best_tour);
      } catch (...) {
        failures[id] = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::min(parallelism, trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentStats stats;
  stats.instance_name = instance.name();
  stats.solver = describe(solver);
  stats.experiment_seed = experiment_seed;
  stats.trials = std::move(records);

  std::vector<double> lengths;
  lengths.reserve(trials);
  double time_sum = 0.0;
  std::size_t best = 0;
  for (const auto& r : stats.trials) {
    lengths.push_back(r.tour_length);
    time_sum += r.wall_time_ms;
    if (r.tour_length < stats.trials[best].tour_length) best = r.trial_id;
  }
  stats.lengths = summarize(lengths);
  stats.mean_wall_time_ms = time_sum / static_cast<double>(trials);
  stats.best_tour = *tours[best];
  stats.best_length = stats.trials[best].tour_length;
  return stats;
}

Comparison compare(const Instance& instance, const SolverConfig& solver_a,
                   const SolverConfig& solver_b, std::size_t trials,
                   std::uint64_t experiment_seed, std::size_t parallelism) {
  validate(solver_a);
  validate(solver_b);
  Comparison result{run_experiment(instance, solver_a, trials, experiment_seed, parallelism),
                    run_experiment(instance, solver_b, trials, experiment_seed, parallelism), 0.0,
                    0.0};
  const double mean_a = result.a.lengths.mean;
  const double mean_b = result.b.lengths.mean;
  result.mean_ratio = mean_b / mean_a;
  result.improvement = (mean_a - mean_b) / mean_a;
  return result;
}

}  // namespace tourlab
