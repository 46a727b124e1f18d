#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "tourlab/errors.hpp"
#include "tourlab/ga.hpp"
#include "tourlab/hillclimb.hpp"
#include "tourlab/oracle.hpp"

using namespace tourlab;
using tourlab::testing::random_instance;
using tourlab::testing::route_length;
using tourlab::testing::unit_square;

namespace {

// All tours with 0 first, minimum length, lexicographically first on ties.
Tour enumerate_best(const Instance& inst) {
  std::vector<City> order(inst.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<City>(i);
  std::vector<City> best = order;
  double best_len = INFINITY;
  do {
    if (order.size() > 2 && order[1] > order.back()) continue;
    const double len = tour_length(inst, std::span<const City>(order));
    if (len < best_len) {
      best_len = len;
      best = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return Tour(best);
}

}  // namespace

TEST_CASE("canonical orientation") {
  CHECK(canonical_orientation(Tour({2, 3, 0, 1})) == Tour({0, 1, 2, 3}));
  CHECK(canonical_orientation(Tour({3, 2, 1, 0})) == Tour({0, 1, 2, 3}));
  CHECK(canonical_orientation(Tour({1, 0, 2})) == Tour({0, 1, 2}));
  CHECK(canonical_orientation(Tour({0})) == Tour({0}));
}

TEST_CASE("unit square") {
  const Instance sq = unit_square();
  for (const auto& r : {brute_force(sq), held_karp(sq)}) {
    CHECK(r.optimal_length == 4.0);
    CHECK(r.optimal_tour == Tour({0, 1, 2, 3}));
    CHECK(r.nodes_expanded > 0);
  }
}

TEST_CASE("triangle has a single tour") {
  const Instance tri("tri", {{0, 0}, {3, 0}, {0, 4}});
  CHECK(brute_force(tri).optimal_length == 12.0);
  CHECK(held_karp(tri).optimal_length == 12.0);
  CHECK(brute_force(tri).optimal_tour == Tour({0, 1, 2}));
}

TEST_CASE("two points") {
  const Instance pair("pair", {{0, 0}, {2, 0}});
  CHECK(brute_force(pair).optimal_length == 4.0);
  CHECK(held_karp(pair).optimal_length == 4.0);
}

TEST_CASE("collinear points go out and back") {
  const Instance line("line", {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(brute_force(line).optimal_length == 6.0);
  CHECK(held_karp(line).optimal_length == 6.0);
}

TEST_CASE("ties go to the lexicographically smallest tour") {
  // Under the Chebyshev metric the square's diagonals have length 1, so all
  // three distinct tours have length exactly 4.
  const Instance sq = unit_square().with_metric(Metric::weighted_chebyshev(1, 1));
  const auto r = brute_force(sq);
  CHECK(r.optimal_length == 4.0);
  CHECK(r.optimal_tour == Tour({0, 1, 2, 3}));
  CHECK(held_karp(sq).optimal_length == 4.0);

  // Equilateral triangle with its center: the enumeration oracle decides
  // which of the three tours wins after rounding.
  const double h = std::sqrt(3.0) / 2.0;
  const Instance tri("eq", {{0, 0}, {1, 0}, {0.5, h}, {0.5, h / 3.0}});
  const Tour expected = enumerate_best(tri);
  CHECK(brute_force(tri).optimal_tour == expected);
  CHECK(brute_force(tri).optimal_length == tour_length(tri, expected));
}

TEST_CASE("held_karp agrees with brute_force") {
  Rng rng(50);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 5 + rng.uniform_index(6);
    const Instance inst = random_instance(n, rng);
    const auto bf = brute_force(inst);
    const auto hk = held_karp(inst);
    CHECK(hk.optimal_length == bf.optimal_length);
    CHECK(hk.optimal_tour == bf.optimal_tour);
    CHECK(bf.optimal_tour == enumerate_best(inst));
    CHECK(hk.optimal_length == tour_length(inst, hk.optimal_tour));
    CHECK(bf.optimal_length == tour_length(inst, bf.optimal_tour));
  }
}

TEST_CASE("held_karp with other metrics and larger sizes") {
  Rng rng(51);
  for (const auto& metric : {Metric::manhattan(), Metric::weighted_chebyshev(2, 0.5)}) {
    const Instance inst = random_instance(9, rng, metric);
    CHECK(held_karp(inst).optimal_length == brute_force(inst).optimal_length);
  }
  const Instance big = random_instance(kHeldKarpMaxSize, rng);
  const auto hk = held_karp(big);
  CHECK(is_permutation_of_indices(hk.optimal_tour.order()));
  CHECK(hk.optimal_tour[0] == 0);
  // No random tour or local minimum beats it.
  for (int t = 0; t < 200; ++t) {
    const Tour tour = random_tour(big.size(), rng);
    CHECK(route_length(big, tour) >= route_length(big, hk.optimal_tour));
  }
  for (int t = 0; t < 20; ++t) {
    const auto climb = hill_climb_baseline(big.with_distance_table(), random_tour(big.size(), rng));
    CHECK(route_length(big, climb.tour) >= route_length(big, hk.optimal_tour));
  }
}

TEST_CASE("size limits") {
  Rng rng(52);
  CHECK_THROWS_AS(brute_force(Instance("one", {{0, 0}})), SizeError);
  CHECK_THROWS_AS(held_karp(Instance("one", {{0, 0}})), SizeError);
  CHECK_THROWS_AS(brute_force(random_instance(kBruteForceMaxSize + 1, rng)), SizeError);
  CHECK_THROWS_AS(held_karp(random_instance(kHeldKarpMaxSize + 1, rng)), SizeError);
  CHECK_NOTHROW(brute_force(random_instance(kBruteForceMaxSize, rng)));
}

TEST_CASE("solvers never beat the exact optimum") {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const Instance inst = random_instance(4 + rng.uniform_index(7), rng);
    const auto exact = brute_force(inst);
    const double optimum = route_length(inst, exact.optimal_tour);
    for (auto variant : {CrossoverVariant::Baseline, CrossoverVariant::ReversalInvariant}) {
      GaConfig cfg;
      cfg.population_size = 30;
      cfg.crossover_variant = variant;
      cfg.seed = t;
      CHECK(route_length(inst, run_ga(inst, cfg).best_tour) >= optimum);
    }
    for (auto variant : {HcVariant::Baseline, HcVariant::Modified}) {
      HcConfig cfg;
      cfg.variant = variant;
      cfg.restarts = 3;
      cfg.seed = t;
      CHECK(route_length(inst, run_hc(inst, cfg).best_tour) >= optimum);
    }
  }
}
