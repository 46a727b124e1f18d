#include "tourlab/rng.hpp"

#include <cassert>

namespace tourlab {

std::size_t Rng::uniform_index(std::size_t bound) {
  assert(bound > 0);
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
}

std::size_t Rng::uniform_between(std::size_t lo, std::size_t hi) {
  assert(lo <= hi);
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

double Rng::uniform_unit() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform_unit() < p;
}

std::pair<std::size_t, std::size_t> Rng::uniform_pair(std::size_t n) {
  assert(n >= 2);
  std::size_t a = uniform_index(n);
  std::size_t b = uniform_index(n - 1);
  if (b >= a) ++b;
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace tourlab
