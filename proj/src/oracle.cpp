#include "tourlab/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "tourlab/errors.hpp"

namespace tourlab {

namespace {

void require_size(const Instance& instance, std::size_t cap, const char* solver) {
  if (instance.size() < 2 || instance.size() > cap) {
    throw SizeError(std::string(solver) + " handles 2.." + std::to_string(cap) +
                    " locations, got " + std::to_string(instance.size()));
  }
}

}  // namespace

Tour canonical_orientation(const Tour& tour) {
  const std::size_t n = tour.size();
  const auto zero = static_cast<std::size_t>(std::find(tour.begin(), tour.end(), City{0}) - tour.begin());
  std::vector<City> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = tour[(zero + k) % n];
  if (n > 2 && order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());
  return Tour::trusted(std::move(order));
}

ExactResult brute_force(const Instance& instance) {
  require_size(instance, kBruteForceMaxSize, "brute force");
  const std::size_t n = instance.size();
  std::vector<City> order(n);
  std::iota(order.begin(), order.end(), City{0});

  std::vector<City> best = order;
  double best_length = std::numeric_limits<double>::infinity();
  std::uint64_t expanded = 0;
  // next_permutation over positions 1..n-1 walks tours in lexicographic
  // order, so a strict comparison keeps the smallest among equal lengths.
  do {
    if (n > 2 && order[1] > order[n - 1]) continue;
    ++expanded;
    const double length = tour_length(instance, std::span<const City>(order));
    if (length < best_length) {
      best_length = length;
      best = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));

  return {Tour(std::move(best)), best_length, expanded};
}

ExactResult held_karp(const Instance& instance) {
  require_size(instance, kHeldKarpMaxSize, "Held-Karp");
  const std::size_t n = instance.size();
  if (n == 2) {
    Tour tour = Tour::identity(2);
    const double length = tour_length(instance, tour);
    return {std::move(tour), length, 1};
  }

  // Subsets range over locations 1..n-1; bit k stands for location k + 1.
  const std::size_t m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(subsets * m, kInf);
  std::vector<std::uint8_t> parent(subsets * m, 0);
  std::uint64_t expanded = 0;

  for (std::size_t k = 0; k < m; ++k) cost[(std::size_t{1} << k) * m + k] = instance.distance(0, k + 1);

  for (std::size_t set = 1; set < subsets; ++set) {
    for (std::size_t last = 0; last < m; ++last) {
      if (!(set & (std::size_t{1} << last))) continue;
      const std::size_t rest = set & ~(std::size_t{1} << last);
      if (rest == 0) continue;
      double best = kInf;
      std::uint8_t from = 0;
      for (std::size_t prev = 0; prev < m; ++prev) {
        if (!(rest & (std::size_t{1} << prev))) continue;
        ++expanded;
        const double candidate = cost[rest * m + prev] + instance.distance(prev + 1, last + 1);
        if (candidate < best) {
          best = candidate;
          from = static_cast<std::uint8_t>(prev);
        }
      }
      cost[set * m + last] = best;
      parent[set * m + last] = from;
    }
  }

  const std::size_t full = subsets - 1;
  double best = kInf;
  std::size_t last = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double candidate = cost[full * m + k] + instance.distance(k + 1, 0);
    if (candidate < best) {
      best = candidate;
      last = k;
    }
  }

  std::vector<City> order(n);
  order[0] = 0;
  std::size_t set = full;
  for (std::size_t pos = n - 1; pos >= 1; --pos) {
    order[pos] = static_cast<City>(last + 1);
    const std::size_t prev = parent[set * m + last];
    set &= ~(std::size_t{1} << last);
    last = prev;
  }

  Tour tour = canonical_orientation(Tour(std::move(order)));
  const double length = tour_length(instance, tour);
  return {std::move(tour), length, expanded};
}

}  // namespace tourlab
