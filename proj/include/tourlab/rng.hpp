#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

namespace tourlab {

/// Seeded pseudo-random stream shared by every solver. All draws of a run go
/// through one instance so results are a pure function of the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::size_t uniform_index(std::size_t bound);

  /// Uniform integer in [lo, hi], inclusive.
  std::size_t uniform_between(std::size_t lo, std::size_t hi);

  /// Uniform real in [0, 1).
  double uniform_unit();

  /// True with probability `p`; p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p);

  /// Uniformly random unordered pair i < j of positions below n (n >= 2).
  std::pair<std::size_t, std::size_t> uniform_pair(std::size_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tourlab
