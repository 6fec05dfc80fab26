#pragma once

#include "mobgp/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mobgp {

// Hop distance or the unreachable marker. There is deliberately no
// arithmetic on this type: callers branch on is_finite() and use hops().
class Distance {
 public:
  static constexpr Distance unreachable() noexcept { return Distance{}; }
  constexpr explicit Distance(std::uint32_t hops) noexcept : hops_(hops), finite_(true) {}

  constexpr bool is_finite() const noexcept { return finite_; }
  // Precondition: is_finite().
  std::uint32_t hops() const;

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  constexpr Distance() noexcept = default;

  std::uint32_t hops_ = 0;
  bool finite_ = false;
};

// All-pairs hop distances of one graph; immutable after construction.
class DistanceOracle {
 public:
  DistanceOracle() = default;

  std::size_t order() const noexcept { return n_; }

  Distance operator()(Vertex u, Vertex v) const {
    std::uint16_t raw = table_[u * n_ + v];
    return raw == kUnreachable ? Distance::unreachable() : Distance(raw);
  }

  bool reachable(Vertex u, Vertex v) const { return table_[u * n_ + v] != kUnreachable; }

  // w lies on some u,v-geodesic: all three distances finite and
  // d(u,w) + d(w,v) = d(u,v). Unreachable pairs never satisfy this.
  bool between(Vertex u, Vertex w, Vertex v) const {
    const std::uint16_t uw = table_[u * n_ + w];
    const std::uint16_t wv = table_[w * n_ + v];
    const std::uint16_t uv = table_[u * n_ + v];
    if (uw == kUnreachable || wv == kUnreachable || uv == kUnreachable) return false;
    return static_cast<std::uint32_t>(uw) + wv == uv;
  }

  bool connected() const;
  // Largest finite distance (0 for order <= 1).
  std::uint32_t max_finite_distance() const;

 private:
  friend DistanceOracle all_pairs_distances(const Graph &g);
  friend DistanceOracle distances_from_rows(std::size_t n, std::vector<std::uint16_t> table);

  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  std::size_t n_ = 0;
  std::vector<std::uint16_t> table_;
};

// Breadth-first search from every vertex; sources are processed in parallel.
DistanceOracle all_pairs_distances(const Graph &g);

namespace serial {
// Single-threaded reference for all_pairs_distances.
DistanceOracle all_pairs_distances(const Graph &g);
}  // namespace serial

// Internal: wraps a raw table (0xFFFF = unreachable).
DistanceOracle distances_from_rows(std::size_t n, std::vector<std::uint16_t> table);

}  // namespace mobgp
