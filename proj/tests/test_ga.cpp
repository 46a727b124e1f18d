#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tourlab/errors.hpp"
#include "tourlab/ga.hpp"
#include "tourlab/oracle.hpp"

using namespace tourlab;
using tourlab::testing::random_instance;
using tourlab::testing::unit_square;

namespace {

// Points on a circle in index order, so the identity tour is optimal.
Instance octagon() {
  std::vector<Point> pts;
  for (int k = 0; k < 8; ++k) {
    const double a = 2.0 * M_PI * k / 8.0;
    pts.push_back({100.0 * std::cos(a), 100.0 * std::sin(a)});
  }
  return Instance("octagon", std::move(pts));
}

double exhaustive_optimum(const Instance& inst) {
  std::vector<City> order(inst.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<City>(i);
  double best = INFINITY;
  do {
    best = std::min(best, tour_length(inst, std::span<const City>(order)));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("init_population") {
  const Instance inst = unit_square();
  GaConfig cfg;
  cfg.population_size = 5;
  Rng a(3), b(3);
  const auto pop = init_population(inst, cfg, a);
  const auto again = init_population(inst, cfg, b);
  REQUIRE(pop.size() == 5);
  for (std::size_t k = 0; k < pop.size(); ++k) {
    CHECK(is_permutation_of_indices(pop[k].tour.order()));
    CHECK(pop[k].tour.size() == 4);
    CHECK(pop[k].length == tour_length(inst, pop[k].tour));
    CHECK(pop[k].tour == again[k].tour);
  }
}

TEST_CASE("baseline crossover") {
  const Tour p1 = Tour::identity(8);
  const Tour p2 = reverse(p1);
  CHECK(crossover_baseline(p1, p2, 4) == Tour({0, 1, 2, 3, 7, 6, 5, 4}));

  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const Tour a = random_tour(9, rng);
    const Tour b = random_tour(9, rng);
    for (std::size_t k = 1; k <= 8; ++k) {
      CHECK(crossover_baseline(a, a, k) == a);
      const Tour child = crossover_baseline(a, b, k);
      CHECK(is_permutation_of_indices(child.order()));
      CHECK(std::equal(a.begin(), a.begin() + k, child.begin()));
    }
    CHECK(crossover_baseline(a, b, 8) == a);
  }

  CHECK_THROWS_AS(crossover_baseline(p1, p2, 0), std::invalid_argument);
  CHECK_THROWS_AS(crossover_baseline(p1, p2, 8), std::invalid_argument);
  CHECK_THROWS_AS(crossover_baseline(p1, Tour::identity(7), 3), std::invalid_argument);
}

TEST_CASE("reversal-invariant crossover on the mirrored-parent construction") {
  const Instance inst = octagon();
  const Tour p1 = Tour::identity(8);
  const Tour p2 = reverse(p1);
  const double optimum = tour_length(inst, p1);
  for (std::size_t k = 1; k <= 7; ++k) {
    const Offspring child = crossover_reversal_invariant(p1, p2, k, inst);
    // For k = 1 the direct child is p1 traversed backwards, whose sum may
    // round differently; compare routes rather than sequences.
    CHECK(canonical_orientation(child.tour) == p1);
    CHECK(child.length <= optimum);
    CHECK(child.length == doctest::Approx(optimum).epsilon(1e-12));
    CHECK(tour_length(inst, crossover_baseline(p1, p2, k)) >= optimum * (1 - 1e-12));
  }
  // With a mirrored mate the baseline child breaks the route for interior splits.
  CHECK(tour_length(inst, crossover_baseline(p1, p2, 4)) > optimum);

  // Identical parents: both candidates are computed and the result is no
  // worse than the reversed-mate child.
  for (std::size_t k = 1; k <= 7; ++k) {
    const Offspring child = crossover_reversal_invariant(p1, p1, k, inst);
    CHECK(child.length <= tour_length(inst, crossover_baseline(p1, reverse(p1), k)));
  }
}

TEST_CASE("reversal-invariant crossover returns the shorter candidate") {
  Rng rng(21);
  const Instance inst = random_instance(10, rng);
  for (int t = 0; t < 100; ++t) {
    const Tour a = random_tour(10, rng);
    const Tour b = random_tour(10, rng);
    const std::size_t k = rng.uniform_between(1, 9);
    const Tour pi3 = crossover_baseline(a, b, k);
    const Tour pi4 = crossover_baseline(a, reverse(b), k);
    const double l3 = tour_length(inst, pi3);
    const double l4 = tour_length(inst, pi4);
    const Offspring child = crossover_reversal_invariant(a, b, k, inst);
    CHECK(child.length == std::min(l3, l4));
    CHECK(child.tour == (l4 < l3 ? pi4 : pi3));
    CHECK(child.length == tour_length(inst, child.tour));
    CHECK(crossover_reversal_invariant(a, reverse(b), k, inst).length == child.length);
  }
}

TEST_CASE("reversal-invariant crossover prefers the direct mate on ties") {
  const Instance inst = unit_square();
  // Both candidates are the same square tour traversed two ways.
  const Tour a({0, 1, 2, 3});
  const Tour b({0, 3, 2, 1});
  const Offspring child = crossover_reversal_invariant(a, b, 1, inst);
  CHECK(child.tour == crossover_baseline(a, b, 1));
}

TEST_CASE("mutation") {
  Rng rng(4);
  const Tour t = Tour::identity(10);
  for (int k = 0; k < 100; ++k) CHECK(mutate(t, 0.0, rng) == t);
  for (int k = 0; k < 100; ++k) {
    const Tour m = mutate(t, 1.0, rng);
    std::size_t moved = 0;
    for (std::size_t i = 0; i < 10; ++i) moved += m[i] != t[i];
    CHECK(moved == 2);
  }
  constexpr int kTrials = 10000;
  int changed = 0;
  for (int k = 0; k < kTrials; ++k) changed += mutate(t, 0.5, rng) != t;
  CHECK(std::fabs(changed / double(kTrials) - 0.5) <= 0.02);
}

TEST_CASE("roulette weights") {
  const Tour t = Tour::identity(4);
  SUBCASE("identical lengths are sampled uniformly") {
    const Population pop(4, Member{t, 7.0});
    const RouletteWheel wheel(pop);
    for (std::size_t k = 0; k < 4; ++k) CHECK(wheel.weight(k) == doctest::Approx(7e-9));
    Rng rng(1);
    std::vector<int> counts(4, 0);
    constexpr int kDraws = 100000;
    for (int d = 0; d < kDraws; ++d) ++counts[wheel.spin(rng)];
    for (int c : counts) CHECK(std::fabs(c / double(kDraws) - 0.25) <= 0.02 * 0.25);
  }
  SUBCASE("lengths 10 and 30") {
    const Population pop{{t, 10.0}, {t, 30.0}};
    const RouletteWheel wheel(pop);
    CHECK(wheel.weight(0) == doctest::Approx(20.0 + 30e-9));
    CHECK(wheel.weight(1) == doctest::Approx(30e-9));
    Rng rng(2);
    int shorter = 0;
    for (int d = 0; d < 100000; ++d) shorter += wheel.spin(rng) == 0;
    CHECK(shorter >= 99990);
  }
  SUBCASE("empirical frequencies follow the weights") {
    Rng rng(3);
    const Population pop{{t, 10.0}, {t, 20.0}, {t, 25.0}, {t, 40.0}, {t, 12.5}};
    const RouletteWheel wheel(pop);
    double total = 0.0;
    std::vector<double> expected;
    for (const auto& m : pop) {
      const double w = (40.0 - m.length) + 40e-9;
      expected.push_back(w);
      total += w;
    }
    constexpr int kDraws = 100000;
    std::vector<int> counts(pop.size(), 0);
    for (int d = 0; d < kDraws; ++d) ++counts[wheel.spin(rng)];
    for (std::size_t k = 0; k < pop.size(); ++k) {
      const double p = expected[k] / total;
      CHECK(wheel.weight(k) == doctest::Approx(expected[k]));
      if (p > 0.01) CHECK(std::fabs(counts[k] / double(kDraws) - p) <= 0.02 * p);
    }
  }
  SUBCASE("length-proportional scheme") {
    const Population pop{{t, 10.0}, {t, 30.0}};
    const RouletteWheel wheel(pop, SelectionScheme::LengthProportional);
    CHECK(wheel.weight(0) == 10.0);
    CHECK(wheel.weight(1) == 30.0);
    Rng rng(5);
    int longer = 0;
    constexpr int kDraws = 100000;
    for (int d = 0; d < kDraws; ++d) longer += wheel.spin(rng) == 1;
    CHECK(std::fabs(longer / double(kDraws) - 0.75) <= 0.02 * 0.75);
  }
  SUBCASE("select_parent uses the shifted wheel") {
    const Population pop{{Tour({0, 1, 2, 3}), 10.0}, {Tour({3, 2, 1, 0}), 30.0}};
    Rng rng(9);
    for (int d = 0; d < 100; ++d) CHECK(select_parent(pop, rng) == pop[0].tour);
  }
}

TEST_CASE("run_ga solves the unit square") {
  const Instance sq = unit_square();
  CHECK(exhaustive_optimum(sq) == 4.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GaConfig cfg;
    cfg.population_size = 20;
    cfg.max_generations = 30;
    cfg.crossover_variant = CrossoverVariant::ReversalInvariant;
    cfg.seed = seed;
    const auto r = run_ga(sq, cfg);
    CHECK(r.best_length == 4.0);
    CHECK(r.best_tour.size() == 4);
  }
}

TEST_CASE("run_ga bookkeeping") {
  Rng rng(10);
  const Instance inst = random_instance(12, rng);
  for (auto variant : {CrossoverVariant::Baseline, CrossoverVariant::ReversalInvariant}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GaConfig cfg;
      cfg.population_size = 16;
      cfg.max_generations = 25;
      cfg.max_stall_generations = 5;
      cfg.crossover_variant = variant;
      cfg.seed = seed;
      const auto r = run_ga(inst, cfg);
      CHECK(r.best_length == tour_length(inst, r.best_tour));
      CHECK(r.runs == 1);
      CHECK(r.iterations == r.progress.size());
      CHECK(r.iterations <= 25);
      for (std::size_t g = 1; g < r.progress.size(); ++g) CHECK(r.progress[g] <= r.progress[g - 1]);
      CHECK(r.progress.back() == r.best_length);
      // Stopped early only after five generations without strict improvement.
      if (r.iterations < 25) {
        const std::size_t g = r.progress.size();
        REQUIRE(g >= 6);
        CHECK(r.progress[g - 1] == r.progress[g - 6]);
      }
      const std::size_t per_child = variant == CrossoverVariant::Baseline ? 1 : 2;
      CHECK(r.fitness_evaluations == 16 + r.iterations * 16 * per_child);
    }
  }
}

TEST_CASE("run_ga evaluations with mutation") {
  Rng rng(12);
  const Instance inst = random_instance(9, rng);
  GaConfig cfg;
  cfg.population_size = 10;
  cfg.max_generations = 10;
  cfg.max_stall_generations = 10;
  cfg.mutation_rate = 1.0;
  cfg.crossover_variant = CrossoverVariant::ReversalInvariant;
  const auto r = run_ga(inst, cfg);
  // Every child is mutated, which costs one extra evaluation.
  CHECK(r.fitness_evaluations == 10 + r.iterations * 10 * 3);
  cfg.crossover_variant = CrossoverVariant::Baseline;
  const auto b = run_ga(inst, cfg);
  CHECK(b.fitness_evaluations == 10 + b.iterations * 10);
}

TEST_CASE("run_ga is deterministic and never beats the optimum") {
  Rng rng(13);
  const Instance inst = random_instance(8, rng);
  const double optimum = exhaustive_optimum(inst);
  for (auto variant : {CrossoverVariant::Baseline, CrossoverVariant::ReversalInvariant}) {
    for (bool elitism : {false, true}) {
      GaConfig cfg;
      cfg.population_size = 30;
      cfg.crossover_variant = variant;
      cfg.elitism = elitism;
      cfg.mutation_rate = 0.1;
      cfg.seed = 42;
      const auto a = run_ga(inst, cfg);
      const auto b = run_ga(inst, cfg);
      CHECK(a.best_tour == b.best_tour);
      CHECK(a.best_length == b.best_length);
      CHECK(a.fitness_evaluations == b.fitness_evaluations);
      CHECK(a.best_length >= optimum);
    }
  }
}

TEST_CASE("run_ga rejects bad configurations") {
  const Instance sq = unit_square();
  GaConfig cfg;
  cfg.population_size = 1;
  CHECK_THROWS_AS(run_ga(sq, cfg), ConfigError);
  cfg = {};
  cfg.mutation_rate = 1.5;
  CHECK_THROWS_AS(run_ga(sq, cfg), ConfigError);
  cfg = {};
  cfg.max_generations = 0;
  CHECK_THROWS_AS(run_ga(sq, cfg), ConfigError);
  cfg = {};
  cfg.max_stall_generations = 0;
  CHECK_THROWS_AS(run_ga(sq, cfg), ConfigError);
  CHECK(GaConfig{}.stall_limit() == 10);
  CHECK_THROWS_AS(run_ga(Instance("one", {{0, 0}}), GaConfig{}), ConfigError);
}
