#include "tourlab/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tourlab/errors.hpp"
#include "tourlab/rng.hpp"

namespace tourlab {

std::string_view to_string(CrossoverVariant variant) {
  return variant == CrossoverVariant::Baseline ? "baseline" : "reversal-invariant";
}

void GaConfig::validate() const {
  if (population_size < 2) throw ConfigError("population size must be at least 2");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ConfigError("mutation rate must lie in [0, 1]");
  }
  if (max_generations < 1) throw ConfigError("max generations must be at least 1");
  if (max_stall_generations && *max_stall_generations < 1) {
    throw ConfigError("stall generations must be at least 1");
  }
}

Population init_population(const Instance& instance, const GaConfig& config, Rng& rng) {
  Population population;
  population.reserve(config.population_size);
  for (std::size_t k = 0; k < config.population_size; ++k) {
    Tour tour = random_tour(instance.size(), rng);
    const double length = tour_length(instance, tour);
    population.push_back({std::move(tour), length});
  }
  return population;
}

std::string_view to_string(SelectionScheme scheme) {
  return scheme == SelectionScheme::ShiftedRoulette ? "shifted-roulette" : "length-proportional";
}

RouletteWheel::RouletteWheel(const Population& population, SelectionScheme scheme) {
  if (population.empty()) throw std::invalid_argument("cannot select from an empty population");
  cumulative_.reserve(population.size());
  double total = 0.0;
  if (scheme == SelectionScheme::LengthProportional) {
    for (const auto& m : population) {
      total += m.length;
      cumulative_.push_back(total);
    }
    return;
  }
  double longest = 0.0;
  for (const auto& m : population) longest = std::max(longest, m.length);
  const double eps = 1e-9 * longest;
  for (const auto& m : population) {
    total += (longest - m.length) + eps;
    cumulative_.push_back(total);
  }
}

double RouletteWheel::weight(std::size_t k) const {
  return k == 0 ? cumulative_[0] : cumulative_[k] - cumulative_[k - 1];
}

std::size_t RouletteWheel::spin(Rng& rng) const {
  const double total = cumulative_.back();
  // Degenerate wheel (all lengths zero): fall back to a uniform pick.
  if (!(total > 0.0)) return rng.uniform_index(cumulative_.size());
  const double ball = rng.uniform_unit() * total;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), ball);
  return std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1);
}

const Tour& select_parent(const Population& population, Rng& rng) {
  return population[RouletteWheel(population).spin(rng)].tour;
}

Tour crossover_baseline(const Tour& first, const Tour& second, std::size_t split) {
  const std::size_t n = first.size();
  if (second.size() != n) throw std::invalid_argument("parents differ in size");
  if (split < 1 || split > n - 1) {
    throw std::invalid_argument("split must lie in 1..n-1, got " + std::to_string(split));
  }
  std::vector<bool> taken(n, false);
  std::vector<City> child;
  child.reserve(n);
  for (std::size_t i = 0; i < split; ++i) {
    child.push_back(first[i]);
    taken[first[i]] = true;
  }
  for (City c : second) {
    if (!taken[c]) child.push_back(c);
  }
  return Tour::trusted(std::move(child));
}

Offspring crossover_reversal_invariant(const Tour& first, const Tour& second, std::size_t split,
                                       const Instance& instance) {
  Tour with_mate = crossover_baseline(first, second, split);
  Tour with_reversed = crossover_baseline(first, reverse(second), split);
  const double mate_length = tour_length(instance, with_mate);
  const double reversed_length = tour_length(instance, with_reversed);
  if (reversed_length < mate_length) return {std::move(with_reversed), reversed_length};
  return {std::move(with_mate), mate_length};
}

Tour mutate(const Tour& tour, double rate, Rng& rng) {
  if (tour.size() < 2 || !rng.bernoulli(rate)) return tour;
  const auto [i, j] = rng.uniform_pair(tour.size());
  return transpose(tour, i, j);
}

RunResult run_ga(const Instance& instance_in, const GaConfig& config) {
  config.validate();
  if (instance_in.size() < 2) throw ConfigError("the genetic algorithm needs at least 2 locations");

  const auto started = std::chrono::steady_clock::now();
  const Instance instance = instance_in.with_distance_table();
  const std::size_t n = instance.size();
  Rng rng(config.seed);

  RunResult result;
  Population population = init_population(instance, config, rng);
  result.fitness_evaluations = population.size();

  auto shortest = [](const Population& pop) {
    return std::min_element(pop.begin(), pop.end(), [](const Member& a, const Member& b) {
      return a.length < b.length;
    });
  };

  {
    const auto best = shortest(population);
    result.best_tour = best->tour;
    result.best_length = best->length;
  }

  std::size_t stall = 0;
  for (std::size_t generation = 0; generation < config.max_generations; ++generation) {
    const RouletteWheel wheel(population, config.selection);
    Population offspring;
    offspring.reserve(config.population_size);

    for (std::size_t k = 0; k < config.population_size; ++k) {
      const Tour& p1 = population[wheel.spin(rng)].tour;
      const Tour& p2 = population[wheel.spin(rng)].tour;
      const std::size_t split = rng.uniform_between(1, n - 1);

      if (config.crossover_variant == CrossoverVariant::Baseline) {
        Tour child = mutate(crossover_baseline(p1, p2, split), config.mutation_rate, rng);
        const double length = tour_length(instance, child);
        ++result.fitness_evaluations;
        offspring.push_back({std::move(child), length});
      } else {
        Offspring child = crossover_reversal_invariant(p1, p2, split, instance);
        result.fitness_evaluations += kReversalInvariantEvaluations;
        Tour mutated = mutate(child.tour, config.mutation_rate, rng);
        if (mutated != child.tour) {
          child.length = tour_length(instance, mutated);
          child.tour = std::move(mutated);
          ++result.fitness_evaluations;
        }
        offspring.push_back({std::move(child.tour), child.length});
      }
    }

    if (config.elitism) {
      const auto incumbent = shortest(population);
      const auto worst = std::max_element(
          offspring.begin(), offspring.end(),
          [](const Member& a, const Member& b) { return a.length < b.length; });
      *worst = *incumbent;
    }

    population = std::move(offspring);
    ++result.iterations;

    const auto best = shortest(population);
    if (best->length < result.best_length) {
      result.best_tour = best->tour;
      result.best_length = best->length;
      stall = 0;
    } else {
      ++stall;
    }
    result.progress.push_back(result.best_length);
    if (stall >= config.stall_limit()) break;
  }

  result.runs = 1;
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace tourlab
