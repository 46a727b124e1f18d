#pragma once

/// @file core.hpp
/// Points, metrics, instances and tours: the vocabulary every solver shares.
///
/// A tour is a permutation of location indices and its length is the closed
/// sum of consecutive distances, wrapping from the last position back to the
/// first. Neighbors of a tour in the transposition graph differ from it by a
/// single swap of two positions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tourlab {

class Rng;

using City = std::uint32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Euclidean {};
struct Manhattan {};
struct WeightedManhattan {
  double wx;
  double wy;
};
/// max(wx|dx|, wy|dy|): both axes move at once, at different speeds.
struct WeightedChebyshev {
  double wx;
  double wy;
};

class Metric {
 public:
  using Variant = std::variant<Euclidean, Manhattan, WeightedManhattan, WeightedChebyshev>;

  /// Euclidean.
  Metric() = default;

  static Metric euclidean() { return Metric{Euclidean{}}; }
  static Metric manhattan() { return Metric{Manhattan{}}; }
  /// Throws std::invalid_argument unless both weights are finite and positive.
  static Metric weighted_manhattan(double wx, double wy);
  static Metric weighted_chebyshev(double wx, double wy);

  const Variant& variant() const { return variant_; }

  /// CLI spelling, e.g. "euclidean" or "wmanhattan:2,1".
  std::string name() const;

 private:
  explicit Metric(Variant v) : variant_(v) {}

  Variant variant_{Euclidean{}};
};

double distance(const Metric& metric, Point a, Point b);

/// Named point set under a metric. Optionally carries a precomputed n x n
/// distance table; table entries are produced by `distance` and therefore
/// bit-identical to on-the-fly evaluation.
class Instance {
 public:
  /// Throws std::invalid_argument on an empty point list or a non-finite
  /// coordinate.
  Instance(std::string name, std::vector<Point> points, Metric metric = {},
           bool distance_table = false);

  const std::string& name() const { return name_; }
  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Metric& metric() const { return metric_; }

  double distance(std::size_t i, std::size_t j) const {
    if (table_) return (*table_)[i * points_.size() + j];
    return tourlab::distance(metric_, points_[i], points_[j]);
  }

  bool has_distance_table() const { return table_ != nullptr; }

  /// Copy of this instance that carries a distance table.
  Instance with_distance_table() const;

  /// Copy of this instance under another metric (table rebuilt if present).
  Instance with_metric(Metric metric) const;

 private:
  std::string name_;
  std::vector<Point> points_;
  Metric metric_;
  std::shared_ptr<const std::vector<double>> table_;
};

/// A permutation of 0..n-1 giving the visiting order.
class Tour {
 public:
  /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1
  /// with n >= 1.
  explicit Tour(std::vector<City> order);

  /// Skips validation outside debug builds. For operators whose output is a
  /// permutation by construction.
  static Tour trusted(std::vector<City> order);

  static Tour identity(std::size_t n);

  std::span<const City> order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  City operator[](std::size_t pos) const { return order_[pos]; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  std::string to_string() const;

  friend bool operator==(const Tour&, const Tour&) = default;
  friend auto operator<=>(const Tour&, const Tour&) = default;

 private:
  struct Unchecked {};
  Tour(Unchecked, std::vector<City> order) : order_(std::move(order)) {}

  std::vector<City> order_;
};

/// True when `order` contains every index 0..order.size()-1 exactly once.
bool is_permutation_of_indices(std::span<const City> order);

/// Closed-tour length, accumulated in position order 0..n-1 into a single
/// accumulator. Throws std::invalid_argument on a size mismatch.
double tour_length(const Instance& instance, const Tour& tour);

/// Same accumulation over a raw order; the caller guarantees a permutation
/// of matching size.
double tour_length(const Instance& instance, std::span<const City> order);

/// Fitness to maximize: the negated tour length.
inline double fitness(const Instance& instance, const Tour& tour) {
  return -tour_length(instance, tour);
}

/// The n individual edge lengths, edge k joining positions k and k+1 mod n.
std::vector<double> edge_lengths(const Instance& instance, const Tour& tour);

Tour reverse(const Tour& tour);

/// Swaps positions i and j. Requires i < j < n; throws std::invalid_argument
/// otherwise.
Tour transpose(const Tour& tour, std::size_t i, std::size_t j);

constexpr std::size_t neighbor_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Transposition neighbors of a tour, one per position pair (i, j) with
/// i < j, in lexicographic (i, j) order.
class NeighborRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Tour;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    Tour operator*() const { return transpose(*base_, i_, j_); }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    std::size_t first() const { return i_; }
    std::size_t second() const { return j_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.i_ == b.i_ && a.j_ == b.j_;
    }

   private:
    friend class NeighborRange;
    iterator(const Tour* base, std::size_t i, std::size_t j) : base_(base), i_(i), j_(j) {}

    const Tour* base_ = nullptr;
    std::size_t i_ = 0;
    std::size_t j_ = 0;
  };

  explicit NeighborRange(Tour tour) : tour_(std::move(tour)) {}

  /// Iterators point into the range; keep it alive while iterating.
  iterator begin() const;
  iterator end() const;
  std::size_t size() const { return neighbor_count(tour_.size()); }

 private:
  Tour tour_;
};

inline NeighborRange neighbors(Tour tour) { return NeighborRange(std::move(tour)); }

/// Uniform random permutation of 0..n-1 by the decreasing-index swap shuffle.
Tour random_tour(std::size_t n, Rng& rng);

struct TourHash {
  std::size_t operator()(std::span<const City> order) const;
  std::size_t operator()(const Tour& tour) const { return (*this)(tour.order()); }
};

}  // namespace tourlab
