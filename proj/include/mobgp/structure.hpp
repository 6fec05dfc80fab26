#pragma once

#include "mobgp/distance.hpp"
#include "mobgp/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace mobgp {

std::size_t leaf_count(const Graph &g);

struct CliqueReport {
  std::size_t size = 0;
  VertexSet witness;
};

// Exact maximum clique (branch and bound with a greedy-colouring bound).
// The witness is the lexicographically smallest maximum clique.
CliqueReport clique_number(const Graph &g);

// Length of a shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph &g);

// Minimum eccentricity. Throws Error(disconnected) on disconnected input.
std::uint32_t radius(const Graph &g, const DistanceOracle &d);
std::uint32_t radius(const Graph &g);

// Every geodesic between members of s stays inside s.
bool is_convex_subset(const Graph &g, const DistanceOracle &d, std::span<const Vertex> s);

// Point of the two-way infinite grid P_inf x P_inf.
struct GridPoint {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const GridPoint &, const GridPoint &) = default;
  friend auto operator<=>(const GridPoint &, const GridPoint &) = default;
};

// Shortest-path length in the infinite grid (L1 metric).
std::uint64_t infinite_grid_distance(GridPoint p, GridPoint q);

}  // namespace mobgp
