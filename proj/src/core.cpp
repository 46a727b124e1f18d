#include "tourlab/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "tourlab/rng.hpp"
#include "text.hpp"

namespace tourlab {

namespace {

void require_weights(double wx, double wy) {
  if (!(std::isfinite(wx) && std::isfinite(wy) && wx > 0.0 && wy > 0.0)) {
    throw std::invalid_argument("metric weights must be finite and positive");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Metric Metric::weighted_manhattan(double wx, double wy) {
  require_weights(wx, wy);
  return Metric{WeightedManhattan{wx, wy}};
}

Metric Metric::weighted_chebyshev(double wx, double wy) {
  require_weights(wx, wy);
  return Metric{WeightedChebyshev{wx, wy}};
}

std::string Metric::name() const {
  return std::visit(
      Overloaded{
          [](Euclidean) -> std::string { return "euclidean"; },
          [](Manhattan) -> std::string { return "manhattan"; },
          [](WeightedManhattan w) -> std::string {
            return "wmanhattan:" + format_real(w.wx) + "," + format_real(w.wy);
          },
          [](WeightedChebyshev w) -> std::string {
            return "wchebyshev:" + format_real(w.wx) + "," + format_real(w.wy);
          },
      },
      variant_);
}

double distance(const Metric& metric, Point a, Point b) {
  const double dx = std::fabs(a.x - b.x);
  const double dy = std::fabs(a.y - b.y);
  return std::visit(Overloaded{
                        [&](Euclidean) { return std::sqrt(dx * dx + dy * dy); },
                        [&](Manhattan) { return dx + dy; },
                        [&](WeightedManhattan w) { return w.wx * dx + w.wy * dy; },
                        [&](WeightedChebyshev w) { return std::max(w.wx * dx, w.wy * dy); },
                    },
                    metric.variant());
}

Instance::Instance(std::string name, std::vector<Point> points, Metric metric, bool distance_table)
    : name_(std::move(name)), points_(std::move(points)), metric_(metric) {
  if (points_.empty()) throw std::invalid_argument("instance needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (distance_table) {
    const std::size_t n = points_.size();
    auto table = std::make_shared<std::vector<double>>(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        (*table)[i * n + j] = tourlab::distance(metric_, points_[i], points_[j]);
      }
    }
    table_ = std::move(table);
  }
}

Instance Instance::with_distance_table() const {
  if (table_) return *this;
  return Instance(name_, points_, metric_, true);
}

Instance Instance::with_metric(Metric metric) const {
  return Instance(name_, points_, metric, table_ != nullptr);
}

bool is_permutation_of_indices(std::span<const City> order) {
  std::vector<bool> seen(order.size(), false);
  for (City c : order) {
    if (c >= order.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

Tour::Tour(std::vector<City> order) : order_(std::move(order)) {
  if (order_.empty()) throw std::invalid_argument("tour must visit at least one location");
  if (!is_permutation_of_indices(order_)) {
    throw std::invalid_argument("tour is not a permutation of 0..n-1");
  }
}

Tour Tour::trusted(std::vector<City> order) {
  assert(!order.empty() && is_permutation_of_indices(order));
  return Tour(Unchecked{}, std::move(order));
}

Tour Tour::identity(std::size_t n) {
  std::vector<City> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<City>(i);
  return Tour(std::move(order));
}

std::string Tour::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order_[i]);
  }
  out += ']';
  return out;
}

double tour_length(const Instance& instance, std::span<const City> order) {
  const std::size_t n = order.size();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) total += instance.distance(order[i], order[i + 1]);
  total += instance.distance(order[n - 1], order[0]);
  return total;
}

double tour_length(const Instance& instance, const Tour& tour) {
  if (tour.size() != instance.size()) {
    throw std::invalid_argument("tour has " + std::to_string(tour.size()) +
                                " positions but the instance has " +
                                std::to_string(instance.size()) + " locations");
  }
  return tour_length(instance, tour.order());
}

std::vector<double> edge_lengths(const Instance& instance, const Tour& tour) {
  if (tour.size() != instance.size()) throw std::invalid_argument("tour/instance size mismatch");
  const std::size_t n = tour.size();
  std::vector<double> edges(n);
  for (std::size_t i = 0; i < n; ++i) edges[i] = instance.distance(tour[i], tour[(i + 1) % n]);
  return edges;
}

Tour reverse(const Tour& tour) {
  std::vector<City> order(tour.begin(), tour.end());
  std::reverse(order.begin(), order.end());
  return Tour::trusted(std::move(order));
}

Tour transpose(const Tour& tour, std::size_t i, std::size_t j) {
  if (i >= j || j >= tour.size()) {
    throw std::invalid_argument("transpose needs positions i < j < n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " n=" + std::to_string(tour.size()));
  }
  std::vector<City> order(tour.begin(), tour.end());
  std::swap(order[i], order[j]);
  return Tour::trusted(std::move(order));
}

NeighborRange::iterator& NeighborRange::iterator::operator++() {
  const std::size_t n = base_->size();
  if (++j_ == n) {
    ++i_;
    j_ = i_ + 1;
  }
  return *this;
}

NeighborRange::iterator NeighborRange::begin() const { return iterator(&tour_, 0, 1); }

NeighborRange::iterator NeighborRange::end() const {
  const std::size_t n = tour_.size();
  return n < 2 ? begin() : iterator(&tour_, n - 1, n);
}

Tour random_tour(std::size_t n, Rng& rng) {
  std::vector<City> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<City>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform_index(i)]);
  }
  return Tour::trusted(std::move(order));
}

std::size_t TourHash::operator()(std::span<const City> order) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ order.size();
  for (City c : order) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

}  // namespace tourlab
