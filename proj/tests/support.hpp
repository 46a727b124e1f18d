#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "tourlab/core.hpp"
#include "tourlab/rng.hpp"
#include "tourlab/tsplib_io.hpp"

namespace tourlab::testing {

inline Instance unit_square() {
  return Instance("square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

/// Uniform points in [0, 1000)^2.
inline Instance random_instance(std::size_t n, Rng& rng, Metric metric = {}) {
  std::vector<Point> points(n);
  for (auto& p : points) p = {rng.uniform_unit() * 1000.0, rng.uniform_unit() * 1000.0};
  return Instance("random" + std::to_string(n), std::move(points), metric);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Instance att48() {
  return parse_tsplib(read_file(std::string(TOURLAB_DATA_DIR) + "/att48.tsp")).instance;
}

/// Published optimal att48 tour (TSPLIB att48.opt.tour), converted to 0-based.
inline Tour att48_optimal_tour() {
  const std::vector<City> one_based{1,  8,  38, 31, 44, 18, 7,  28, 6,  37, 19, 27,
                                    17, 43, 30, 36, 46, 33, 20, 47, 21, 32, 39, 48,
                                    5,  42, 24, 10, 45, 35, 4,  26, 2,  29, 34, 41,
                                    16, 22, 3,  23, 14, 25, 13, 11, 12, 15, 40, 9};
  std::vector<City> order;
  for (City c : one_based) order.push_back(c - 1);
  return Tour(std::move(order));
}

/// Sum of edge lengths after sorting them, so that a tour and its reverse
/// (same multiset of edges) compare exactly.
inline double sorted_edge_sum(const Instance& instance, const Tour& tour) {
  auto edges = edge_lengths(instance, tour);
  std::sort(edges.begin(), edges.end());
  double total = 0.0;
  for (double e : edges) total += e;
  return total;
}

/// Length compared across solvers: the same route found in another rotation
/// or direction yields the same value, so optimum checks are exact.
inline double route_length(const Instance& instance, const Tour& tour) {
  return sorted_edge_sum(instance, tour);
}

}  // namespace tourlab::testing
