#pragma once

#include <cstddef>
#include <cstdint>

#include "tourlab/core.hpp"

namespace tourlab {

struct ExactResult {
  Tour optimal_tour;
  double optimal_length;
  std::uint64_t nodes_expanded;
};

inline constexpr std::size_t kBruteForceMaxSize = 10;
inline constexpr std::size_t kHeldKarpMaxSize = 18;

/// Returns `tour` rotated to start at location 0 and oriented so that its
/// second position holds the smaller of 0's two tour neighbors.
Tour canonical_orientation(const Tour& tour);

/// Enumerates the (n-1)!/2 distinct closed tours (location 0 first, second
/// position smaller than the last) and returns the shortest; ties go to the
/// lexicographically smallest. Throws SizeError unless 2 <= n <= 10.
ExactResult brute_force(const Instance& instance);

/// Subset dynamic program anchored at location 0. The reported tour is in
/// canonical orientation and its length is recomputed with tour_length.
/// Throws SizeError unless 2 <= n <= 18.
ExactResult held_karp(const Instance& instance);

}  // namespace tourlab
