#pragma once

#include "mobgp/distance.hpp"
#include "mobgp/graph.hpp"
#include "mobgp/structure.hpp"

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mobgp {

struct Move {
  Vertex from = 0;
  Vertex to = 0;

  Move reversed() const { return {to, from}; }
  friend bool operator==(const Move &, const Move &) = default;
};

// Occupied vertices; robots are indistinguishable so this is a set.
class Configuration {
 public:
  Configuration() = default;
  // Sorts; throws Error(malformed_input) on a repeated vertex.
  explicit Configuration(std::vector<Vertex> vertices);

  const VertexSet &vertices() const noexcept { return occupied_; }
  std::size_t size() const noexcept { return occupied_.size(); }
  bool contains(Vertex v) const;

  // Robot at m.from steps to m.to. No legality check.
  Configuration after(Move m) const;

  friend bool operator==(const Configuration &, const Configuration &) = default;
  friend auto operator<=>(const Configuration &a, const Configuration &b) { return a.occupied_ <=> b.occupied_; }

 private:
  VertexSet occupied_;
};

// Certificate payload: graph expression, start configuration, moves.
struct Schedule {
  std::string graph_expr;
  Configuration initial;
  std::vector<Move> moves;
  std::vector<std::string> labels;  // informative only

  std::size_t robots() const { return initial.size(); }
};

// Schedule over `g` with g's expression and labels filled in.
Schedule make_schedule(const Graph &g, Configuration initial, std::vector<Move> moves);

enum class FailureReason { target_occupied, not_adjacent, source_empty, breaks_general_position };

const char *to_string(FailureReason reason);

struct TraversalReport {
  bool valid = false;
  bool complete = false;  // valid and every vertex covered
  VertexSet covered;
  std::optional<std::size_t> failure_index;
  std::optional<FailureReason> failure_reason;

  // 0 valid and complete, 2 valid but incomplete, 3 illegal move.
  int exit_code() const;
};

// Throws Error(precondition) when m.from is not occupied: that is a
// malformed schedule rather than an illegal move.
bool is_legal_move(const DistanceOracle &d, const Configuration &c, Move m);

// Replays s on g. Throws ParseError / Error(malformed_input) when the graph
// expression does not parse or does not describe g, when a vertex is out of
// range, or when the initial configuration is not in general position.
TraversalReport verify_schedule(const Graph &g, const Schedule &s);

// Replay without the graph-expression check. Throws Error(malformed_input)
// on out-of-range ids or a non general position start.
TraversalReport replay_moves(const Graph &g, const DistanceOracle &d, const Configuration &initial,
                             std::span<const Move> moves);

struct ComponentReport {
  std::size_t configurations = 0;
  VertexSet covered;
};

// Every configuration reachable from `start` by legal moves, and the union of
// their occupied vertices. Throws Error(precondition) if start is not in
// general position. Frontier expansion runs in parallel.
ComponentReport configuration_component(const Graph &g, const DistanceOracle &d, const Configuration &start);

namespace serial {
ComponentReport configuration_component(const Graph &g, const DistanceOracle &d, const Configuration &start);
}  // namespace serial

// Union of occupied vertices over the component equals V(g). Relies on every
// legal move being reversible.
bool is_mobile_gp_set(const Graph &g, const DistanceOracle &d, const Configuration &s);

// Independent check over (occupied, visited) states; refuses graphs with
// more than `max_order` vertices.
bool naive_mobile_oracle(const Graph &g, const DistanceOracle &d, const Configuration &s,
                         std::size_t max_order = 10);

// Verifier-valid, complete schedule starting from a mobile set: out-and-back
// walks along a BFS tree of the configuration component.
Schedule extract_witness_schedule(const Graph &g, const DistanceOracle &d, const Configuration &s);

struct MobOptions {
  std::optional<std::size_t> max_k;
  std::size_t min_k = 1;
  std::optional<std::chrono::duration<double>> time_limit;
  bool use_symmetry = true;
};

struct KDiagnostics {
  std::size_t k = 0;
  std::uint64_t gp_sets = 0;     // general position sets enumerated as seeds
  std::uint64_t components = 0;  // configuration components explored
  bool decided = false;
  bool mobile = false;
};

struct MobReport {
  bool decided = false;  // value is exact
  std::size_t value = 0;
  std::size_t lower = 0;               // proven mob >= lower
  std::optional<std::size_t> upper;    // proven mob <= upper
  std::optional<std::size_t> gp;       // gp(g) when computed
  bool timed_out = false;
  std::optional<Schedule> witness;     // for the largest mobile k found
  std::vector<KDiagnostics> per_k;
  double elapsed_ms = 0;
};

// Largest k <= min(max_k, gp(g)) admitting a mobile general position set,
// searched downward from the top. The witness starts from the
// lexicographically smallest mobile set of that size, independent of thread
// count and of symmetry reduction. Throws Error(disconnected).
MobReport mob_number(const Graph &g, const MobOptions &opts = {});
MobReport mob_number(const Graph &g, const DistanceOracle &d, const MobOptions &opts = {});

// Greedy lexicographic minimisation of `s` under the generators in `hints`,
// iterated to a fixpoint.
VertexSet reduce_by_hints(const VertexSet &s, std::span<const Permutation> hints);

// Infinite grid: the four robots of N(center) slide one step per round.
enum class GridDirection { right, up, left, down };

struct GridMove {
  GridPoint from;
  GridPoint to;
};

// Four moves that translate N(center) one step in `dir`.
std::vector<GridMove> grid_round_moves(GridPoint center, GridDirection dir);

// Replays moves on robots in the L1 metric, checking adjacency, collisions
// and general position after every move.
bool verify_grid_moves(std::vector<GridPoint> robots, std::span<const GridMove> moves);

bool verify_infinite_grid_rounds(GridPoint center, std::size_t rounds, GridDirection dir);

}  // namespace mobgp
