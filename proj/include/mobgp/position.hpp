#pragma once

#include "mobgp/distance.hpp"
#include "mobgp/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mobgp {

struct PositionReport {
  std::size_t value = 0;
  VertexSet witness;           // lexicographically smallest maximum set
  std::uint64_t explored = 0;  // search nodes
};

// w lies on a shortest u,v-path (u, v, w distinct).
bool lies_on_geodesic(const DistanceOracle &d, Vertex u, Vertex w, Vertex v);

// No three members of s on a common geodesic. Vertices in different
// components never conflict.
bool is_general_position(const DistanceOracle &d, std::span<const Vertex> s);

// Adding v to the general position set `s` keeps it in general position
// (only triples containing v are checked).
bool extends_general_position(const DistanceOracle &d, std::span<const Vertex> s, Vertex v);

// No member of x other than u, v lies on a u,v-geodesic.
bool is_x_positionable(const DistanceOracle &d, std::span<const Vertex> x, Vertex u, Vertex v);

// x is in general position and every pair (u in x, v in V) is x-positionable.
bool is_outer_general_position(const DistanceOracle &d, std::span<const Vertex> x);

// Mutually maximally distant: no neighbour of u is farther from v than u,
// and vice versa. Throws Error(disconnected) if u and v are in different
// components, Error(invalid_argument) if u == v.
bool is_mmd_pair(const Graph &g, const DistanceOracle &d, Vertex u, Vertex v);

// No single vertex can be added to s keeping general position. Throws
// Error(precondition) if s is not in general position.
bool is_maximal_gp(const DistanceOracle &d, std::span<const Vertex> s);

PositionReport gp_number(const Graph &g);
PositionReport gp_number(const Graph &g, const DistanceOracle &d);
PositionReport gpo_number(const Graph &g);
PositionReport gpo_number(const Graph &g, const DistanceOracle &d);

namespace serial {
// Plain single-threaded searches kept as references for the parallel
// kernels above.
PositionReport gp_number(const Graph &g, const DistanceOracle &d);
PositionReport gpo_number(const Graph &g, const DistanceOracle &d);
}  // namespace serial

// Lazy stream of every general position set of size k, each once, in
// ascending lexicographic order.
class GpSetStream {
 public:
  GpSetStream(const DistanceOracle &d, std::size_t k);

  // Deadline checked every few thousand search steps; throws
  // TimeLimitExceeded once passed.
  void set_deadline(std::chrono::steady_clock::time_point deadline) { deadline_ = deadline; }

  // Writes the next set into `out`; false when exhausted.
  bool next(VertexSet &out);

 private:
  struct Frame {
    std::vector<Vertex> candidates;
    std::size_t pos = 0;
  };

  const DistanceOracle *d_;
  std::size_t k_;
  std::vector<Frame> frames_;
  std::vector<Vertex> current_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t steps_ = 0;
};

GpSetStream enumerate_gp_sets(const DistanceOracle &d, std::size_t k);

}  // namespace mobgp
