#pragma once

/// @file ga.hpp
/// Generational genetic algorithm over tours.
///
/// Recombination keeps a prefix of the first parent and appends the missing
/// locations in the order they appear in the second parent. The
/// reversal-invariant variant builds that offspring once against the mate and
/// once against the reversed mate (same split) and keeps the shorter one, so
/// two parents that traverse a good route in opposite directions no longer
/// produce a broken child.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tourlab/core.hpp"
#include "tourlab/result.hpp"

namespace tourlab {

class Rng;

enum class CrossoverVariant { Baseline, ReversalInvariant };

std::string_view to_string(CrossoverVariant variant);

/// Parent selection rule.
enum class SelectionScheme {
  /// Roulette over (L_max - length) + eps; favors short tours.
  ShiftedRoulette,
  /// Roulette with probability length / sum(lengths): the rule that results
  /// from normalizing negative fitness values by their sum. Favors long tours
  /// mildly, so progress comes from recombination and best-so-far tracking.
  LengthProportional,
};

std::string_view to_string(SelectionScheme scheme);

struct GaConfig {
  static constexpr std::size_t kDefaultStallGenerations = 10;

  std::size_t population_size = 200;
  double mutation_rate = 0.0;
  std::size_t max_generations = 30;
  /// Stop after this many generations without a strict best-so-far
  /// improvement; kDefaultStallGenerations when unset.
  std::optional<std::size_t> max_stall_generations;
  CrossoverVariant crossover_variant = CrossoverVariant::Baseline;
  SelectionScheme selection = SelectionScheme::ShiftedRoulette;
  /// When set, the previous generation's best member replaces the worst
  /// offspring.
  bool elitism = false;
  std::uint64_t seed = 0;

  std::size_t stall_limit() const {
    return max_stall_generations.value_or(kDefaultStallGenerations);
  }

  /// Throws ConfigError.
  void validate() const;
};

struct Member {
  Tour tour;
  double length;
};

/// Members with their cached tour lengths.
using Population = std::vector<Member>;

Population init_population(const Instance& instance, const GaConfig& config, Rng& rng);

/// Roulette wheel over shifted lengths: weight_k = (L_max - length_k) + eps
/// with eps = 1e-9 * L_max. Shorter tours are strictly more likely; a
/// population of equal lengths is sampled uniformly.
class RouletteWheel {
 public:
  explicit RouletteWheel(const Population& population,
                         SelectionScheme scheme = SelectionScheme::ShiftedRoulette);

  std::size_t spin(Rng& rng) const;
  double weight(std::size_t k) const;
  double total_weight() const { return cumulative_.back(); }
  std::size_t size() const { return cumulative_.size(); }

 private:
  std::vector<double> cumulative_;
};

/// One roulette draw. Builds the wheel on every call; run_ga builds it once
/// per generation instead.
const Tour& select_parent(const Population& population, Rng& rng);

/// Prefix p1[0, split) followed by the remaining locations in p2's order.
/// Requires 1 <= split <= n-1; throws std::invalid_argument otherwise.
Tour crossover_baseline(const Tour& first, const Tour& second, std::size_t split);

struct Offspring {
  Tour tour;
  double length;
};

/// Fitness evaluations spent by one reversal-invariant recombination.
inline constexpr std::size_t kReversalInvariantEvaluations = 2;

/// Evaluates crossover_baseline(p1, p2, split) and
/// crossover_baseline(p1, reverse(p2), split); returns the shorter, the
/// first on a tie.
Offspring crossover_reversal_invariant(const Tour& first, const Tour& second, std::size_t split,
                                       const Instance& instance);

/// With probability `rate` swaps one uniformly random position pair.
Tour mutate(const Tour& tour, double rate, Rng& rng);

/// Throws ConfigError on an invalid configuration or an instance with fewer
/// than two locations.
RunResult run_ga(const Instance& instance, const GaConfig& config);

}  // namespace tourlab
