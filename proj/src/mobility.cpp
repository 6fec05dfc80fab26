#include "mobgp/mobility.hpp"

#include "mobgp/config_table.hpp"
#include "mobgp/error.hpp"
#include "mobgp/expr.hpp"
#include "mobgp/position.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace mobgp {

using Clock = std::chrono::steady_clock;
using Key = ConfigTable::Key;

Configuration::Configuration(std::vector<Vertex> vertices) : occupied_(std::move(vertices)) {
  std::sort(occupied_.begin(), occupied_.end());
  if (std::adjacent_find(occupied_.begin(), occupied_.end()) != occupied_.end()) {
    throw Error(ErrorCode::malformed_input, "configuration: two robots on one vertex");
  }
}

bool Configuration::contains(Vertex v) const { return std::binary_search(occupied_.begin(), occupied_.end(), v); }

Configuration Configuration::after(Move m) const {
  Configuration next;
  next.occupied_.reserve(occupied_.size());
  for (Vertex v : occupied_)
    if (v != m.from) next.occupied_.push_back(v);
  next.occupied_.insert(std::lower_bound(next.occupied_.begin(), next.occupied_.end(), m.to), m.to);
  return next;
}

Schedule make_schedule(const Graph &g, Configuration initial, std::vector<Move> moves) {
  Schedule s;
  s.graph_expr = g.expression();
  s.initial = std::move(initial);
  s.moves = std::move(moves);
  if (g.has_labels()) {
    s.labels.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) s.labels.push_back(g.label(v));
  }
  return s;
}

const char *to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::target_occupied: return "target-occupied";
    case FailureReason::not_adjacent: return "not-adjacent";
    case FailureReason::source_empty: return "source-empty";
    case FailureReason::breaks_general_position: return "breaks-general-position";
  }
  return "unknown";
}

int TraversalReport::exit_code() const {
  if (!valid) return 3;
  return complete ? 0 : 2;
}

namespace {

// The pre-move set is in general position, so only triples through m.to
// can break it.
bool move_keeps_general_position(const DistanceOracle &d, const Configuration &c, Move m) {
  std::vector<Vertex> rest;
  rest.reserve(c.size());
  for (Vertex v : c.vertices())
    if (v != m.from) rest.push_back(v);
  return extends_general_position(d, rest, m.to);
}

std::optional<FailureReason> check_move(const DistanceOracle &d, const Configuration &c, Move m) {
  if (!c.contains(m.from)) return FailureReason::source_empty;
  if (c.contains(m.to)) return FailureReason::target_occupied;
  if (!d.reachable(m.from, m.to) || d(m.from, m.to).hops() != 1) return FailureReason::not_adjacent;
  if (!move_keeps_general_position(d, c, m)) return FailureReason::breaks_general_position;
  return std::nullopt;
}

void require_in_range(const Graph &g, Vertex v, const char *what) {
  if (v >= g.order()) {
    throw Error(ErrorCode::malformed_input, std::string(what) + ": vertex " + std::to_string(v) +
                                                " out of range for a graph on " + std::to_string(g.order()) +
                                                " vertices");
  }
}

}  // namespace

bool is_legal_move(const DistanceOracle &d, const Configuration &c, Move m) {
  if (!c.contains(m.from)) throw Error(ErrorCode::precondition, "is_legal_move: source vertex is not occupied");
  return !check_move(d, c, m).has_value();
}

TraversalReport replay_moves(const Graph &g, const DistanceOracle &d, const Configuration &initial,
                             std::span<const Move> moves) {
  for (Vertex v : initial.vertices()) require_in_range(g, v, "initial configuration");
  for (const Move &m : moves) {
    require_in_range(g, m.from, "move");
    require_in_range(g, m.to, "move");
  }
  if (!is_general_position(d, initial.vertices())) {
    throw Error(ErrorCode::malformed_input, "initial configuration is not in general position");
  }
  TraversalReport report;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : initial.vertices()) seen[v] = 1;
  Configuration current = initial;
  report.valid = true;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (auto failure = check_move(d, current, moves[i])) {
      report.valid = false;
      report.failure_index = i;
      report.failure_reason = failure;
      break;
    }
    current = current.after(moves[i]);
    seen[moves[i].to] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (seen[v]) report.covered.push_back(v);
  report.complete = report.valid && report.covered.size() == g.order();
  return report;
}

TraversalReport verify_schedule(const Graph &g, const Schedule &s) {
  const Graph named = graph_from_expression(s.graph_expr);
  if (!named.same_structure(g)) {
    throw Error(ErrorCode::malformed_input, "schedule graph \"" + s.graph_expr + "\" does not match the given graph");
  }
  return replay_moves(g, all_pairs_distances(g), s.initial, s.moves);
}

namespace {

std::vector<Key> to_keys(const VertexSet &s) { return {s.begin(), s.end()}; }

// Appends every legal successor of `cfg` (width k, sorted) to `out`,
// robots in ascending order, targets in ascending order.
void append_successors(const Graph &g, const DistanceOracle &d, std::span<const Key> cfg, std::vector<Key> &out,
                       std::vector<Vertex> &rest) {
  const std::size_t k = cfg.size();
  for (std::size_t i = 0; i < k; ++i) {
    rest.clear();
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) rest.push_back(cfg[j]);
    for (Vertex v : g.neighbors(cfg[i])) {
      if (std::binary_search(cfg.begin(), cfg.end(), static_cast<Key>(v))) continue;
      if (!extends_general_position(d, rest, v)) continue;
      auto pos = std::lower_bound(rest.begin(), rest.end(), v) - rest.begin();
      for (std::ptrdiff_t j = 0; j < pos; ++j) out.push_back(static_cast<Key>(rest[j]));
      out.push_back(static_cast<Key>(v));
      for (std::size_t j = pos; j < rest.size(); ++j) out.push_back(static_cast<Key>(rest[j]));
    }
  }
}

struct Exploration {
  std::size_t configurations = 0;
  std::vector<char> covered;
  std::size_t covered_count = 0;
};

// Level-synchronous BFS from table entry `root`. Successors are generated in
// parallel per frontier level and merged serially in frontier order, so the
// table contents do not depend on the thread count.
Exploration explore(const Graph &g, const DistanceOracle &d, ConfigTable &table, std::uint32_t root,
                    bool stop_when_covered, const std::optional<Clock::time_point> &deadline) {
  const std::size_t n = g.order();
  const std::size_t k = table.width();
  Exploration result;
  result.covered.assign(n, 0);
  auto mark = [&](std::span<const Key> cfg) {
    for (Key v : cfg) {
      if (!result.covered[v]) {
        result.covered[v] = 1;
        ++result.covered_count;
      }
    }
  };
  mark(table.at(root));
  result.configurations = 1;

  std::vector<std::uint32_t> frontier{root}, next;
  std::vector<std::vector<Key>> buffers;
  while (!frontier.empty()) {
    if (stop_when_covered && result.covered_count == n) break;
    if (deadline && Clock::now() > *deadline) throw TimeLimitExceeded();
    if (buffers.size() < frontier.size()) buffers.resize(frontier.size());
    const auto width = static_cast<long long>(frontier.size());
#pragma omp parallel if (width > 64)
    {
      std::vector<Vertex> rest;
      rest.reserve(k);
#pragma omp for schedule(dynamic, 16)
      for (long long i = 0; i < width; ++i) {
        buffers[i].clear();
        append_successors(g, d, table.at(frontier[i]), buffers[i], rest);
      }
    }
    next.clear();
    for (long long i = 0; i < width; ++i) {
      const auto &buf = buffers[i];
      for (std::size_t off = 0; off < buf.size(); off += k) {
        std::span<const Key> cfg(buf.data() + off, k);
        auto [index, inserted] = table.insert(cfg);
        if (!inserted) continue;
        ++result.configurations;
        mark(cfg);
        next.push_back(index);
      }
    }
    frontier.swap(next);
  }
  return result;
}

void require_general_position(const DistanceOracle &d, const Configuration &s, const char *what) {
  if (!is_general_position(d, s.vertices())) {
    throw Error(ErrorCode::precondition, std::string(what) + ": configuration is not in general position");
  }
}

void require_vertices(const Graph &g, const Configuration &s, const char *what) {
  for (Vertex v : s.vertices()) {
    if (v >= g.order()) throw Error(ErrorCode::invalid_argument, std::string(what) + ": vertex out of range");
  }
}

}  // namespace

ComponentReport configuration_component(const Graph &g, const DistanceOracle &d, const Configuration &start) {
  require_vertices(g, start, "configuration_component");
  require_general_position(d, start, "configuration_component");
  if (start.size() == 0) return {1, {}};
  ConfigTable table(start.size());
  auto root = table.insert(to_keys(start.vertices())).first;
  Exploration e = explore(g, d, table, root, false, std::nullopt);
  ComponentReport report;
  report.configurations = e.configurations;
  for (Vertex v = 0; v < g.order(); ++v)
    if (e.covered[v]) report.covered.push_back(v);
  return report;
}

bool is_mobile_gp_set(const Graph &g, const DistanceOracle &d, const Configuration &s) {
  if (!d.connected()) throw Error(ErrorCode::disconnected, "is_mobile_gp_set: graph is disconnected");
  require_vertices(g, s, "is_mobile_gp_set");
  require_general_position(d, s, "is_mobile_gp_set");
  if (s.size() == 0) return g.order() == 0;
  ConfigTable table(s.size());
  auto root = table.insert(to_keys(s.vertices())).first;
  return explore(g, d, table, root, true, std::nullopt).covered_count == g.order();
}

bool naive_mobile_oracle(const Graph &g, const DistanceOracle &d, const Configuration &s, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order || n > 32) {
    throw Error(ErrorCode::invalid_argument, "naive_mobile_oracle: graph has " + std::to_string(n) +
                                                 " vertices, limit is " + std::to_string(std::min<std::size_t>(max_order, 32)));
  }
  require_vertices(g, s, "naive_mobile_oracle");
  require_general_position(d, s, "naive_mobile_oracle");
  const std::uint64_t all = n == 32 ? 0xFFFFFFFFull : (std::uint64_t{1} << n) - 1;
  std::uint64_t start = 0;
  for (Vertex v : s.vertices()) start |= std::uint64_t{1} << v;

  // State = occupied mask in the low half, visited mask in the high half.
  std::unordered_set<std::uint64_t> seen{start | (start << 32)};
  std::deque<std::uint64_t> queue{start | (start << 32)};
  std::vector<Vertex> members;
  while (!queue.empty()) {
    const std::uint64_t state = queue.front();
    queue.pop_front();
    const std::uint64_t occupied = state & 0xFFFFFFFFull;
    const std::uint64_t visited = state >> 32;
    if (visited == all) return true;
    for (Vertex u = 0; u < n; ++u) {
      if (!(occupied >> u & 1)) continue;
      for (Vertex v = 0; v < n; ++v) {
        if ((occupied >> v & 1) || !g.adjacent(u, v)) continue;
        const std::uint64_t moved = (occupied & ~(std::uint64_t{1} << u)) | (std::uint64_t{1} << v);
        members.clear();
        for (Vertex w = 0; w < n; ++w)
          if (moved >> w & 1) members.push_back(w);
        if (!is_general_position(d, members)) continue;
        const std::uint64_t key = moved | ((visited | (std::uint64_t{1} << v)) << 32);
        if (seen.insert(key).second) queue.push_back(key);
      }
    }
  }
  return false;
}

Schedule extract_witness_schedule(const Graph &g, const DistanceOracle &d, const Configuration &s) {
  require_vertices(g, s, "extract_witness_schedule");
  require_general_position(d, s, "extract_witness_schedule");
  const std::size_t n = g.order();
  const std::size_t k = s.size();
  if (k == 0) {
    if (n == 0) return make_schedule(g, s, {});
    throw Error(ErrorCode::precondition, "extract_witness_schedule: configuration is not mobile");
  }

  // Serial BFS tree; first_hit[v] is the first configuration containing v.
  ConfigTable table(k);
  std::vector<std::uint32_t> parent{0};
  std::vector<Move> via{Move{}};
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint32_t> first_hit(n, kNone);
  std::size_t hit = 0;
  auto mark = [&](std::span<const Key> cfg, std::uint32_t index) {
    for (Key v : cfg)
      if (first_hit[v] == kNone) {
        first_hit[v] = index;
        ++hit;
      }
  };
  const auto root_keys = to_keys(s.vertices());
  table.insert(root_keys);
  mark(root_keys, 0);
  std::vector<Key> cfg(k), succ(k);
  for (std::uint32_t head = 0; head < table.size() && hit < n; ++head) {
    auto stored = table.at(head);
    std::copy(stored.begin(), stored.end(), cfg.begin());
    for (std::size_t i = 0; i < k && hit < n; ++i) {
      for (Vertex v : g.neighbors(cfg[i])) {
        if (std::binary_search(cfg.begin(), cfg.end(), static_cast<Key>(v))) continue;
        std::vector<Vertex> rest;
        for (std::size_t j = 0; j < k; ++j)
          if (j != i) rest.push_back(cfg[j]);
        if (!extends_general_position(d, rest, v)) continue;
        rest.insert(std::lower_bound(rest.begin(), rest.end(), v), v);
        std::copy(rest.begin(), rest.end(), succ.begin());
        auto [index, inserted] = table.insert(succ);
        if (!inserted) continue;
        parent.push_back(head);
        via.push_back(Move{cfg[i], v});
        mark(succ, index);
      }
    }
  }
  if (hit < n) throw Error(ErrorCode::precondition, "extract_witness_schedule: configuration is not mobile");

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  auto cover = [&](Vertex v) {
    if (!covered[v]) {
      covered[v] = 1;
      --remaining;
    }
  };
  for (Vertex v : s.vertices()) cover(v);
  std::vector<Move> moves;
  std::vector<Move> path;
  for (Vertex target = 0; target < n && remaining > 0; ++target) {
    if (covered[target]) continue;
    path.clear();
    for (std::uint32_t at = first_hit[target]; at != 0; at = parent[at]) path.push_back(via[at]);
    std::reverse(path.begin(), path.end());
    for (const Move &m : path) {
      moves.push_back(m);
      cover(m.to);
    }
    if (remaining == 0) break;
    for (auto it = path.rbegin(); it != path.rend(); ++it) moves.push_back(it->reversed());
  }
  return make_schedule(g, s, std::move(moves));
}

VertexSet reduce_by_hints(const VertexSet &s, std::span<const Permutation> hints) {
  VertexSet current = s, image;
  for (bool improved = true; improved;) {
    improved = false;
    for (const Permutation &p : hints) {
      image.clear();
      for (Vertex v : current) image.push_back(p[v]);
      std::sort(image.begin(), image.end());
      if (image < current) {
        current.swap(image);
        improved = true;
      }
    }
  }
  return current;
}

namespace {

// First seed (in enumeration order) whose component covers V, or nullopt.
std::optional<VertexSet> search_level(const Graph &g, const DistanceOracle &d, std::size_t k, const MobOptions &opts,
                                      const std::optional<Clock::time_point> &deadline, KDiagnostics &diag) {
  const auto &hints = g.symmetry_hints();
  const bool reduce = opts.use_symmetry && !hints.empty();
  ConfigTable explored(k);
  GpSetStream stream(d, k);
  if (deadline) stream.set_deadline(*deadline);
  VertexSet seed;
  std::vector<Key> key(k);
  while (stream.next(seed)) {
    ++diag.gp_sets;
    // Automorphic images of a mobile set are mobile, and the smallest mobile
    // set is a fixpoint of the reduction, so skipping non-fixpoints keeps the
    // first mobile seed unchanged.
    if (reduce && reduce_by_hints(seed, hints) != seed) continue;
    std::copy(seed.begin(), seed.end(), key.begin());
    auto [root, inserted] = explored.insert(key);
    if (!inserted) continue;
    ++diag.components;
    if (explore(g, d, explored, root, true, deadline).covered_count == g.order()) return seed;
  }
  return std::nullopt;
}

}  // namespace

MobReport mob_number(const Graph &g, const DistanceOracle &d, const MobOptions &opts) {
  const auto started = Clock::now();
  if (g.order() == 0) throw Error(ErrorCode::invalid_argument, "mob_number: empty graph");
  if (!d.connected()) throw Error(ErrorCode::disconnected, "mob_number: graph is disconnected");
  if (opts.max_k && *opts.max_k == 0) throw Error(ErrorCode::invalid_argument, "mob_number: max_k must be positive");
  std::optional<Clock::time_point> deadline;
  if (opts.time_limit) deadline = started + std::chrono::duration_cast<Clock::duration>(*opts.time_limit);

  MobReport report;
  report.lower = 1;  // one robot walks the whole connected graph
  std::size_t top;
  if (opts.max_k) {
    top = *opts.max_k;
  } else {
    report.gp = gp_number(g, d).value;
    top = *report.gp;
    report.upper = top;
  }
  const std::size_t floor = std::max<std::size_t>(opts.min_k, 1);
  for (std::size_t k = top; k >= floor; --k) {
    KDiagnostics diag;
    diag.k = k;
    std::optional<VertexSet> found;
    try {
      found = search_level(g, d, k, opts, deadline, diag);
    } catch (const TimeLimitExceeded &) {
      report.per_k.push_back(diag);
      report.timed_out = true;
      break;
    }
    diag.decided = true;
    diag.mobile = found.has_value();
    report.per_k.push_back(diag);
    if (found) {
      report.lower = std::max(report.lower, k);
      report.witness = extract_witness_schedule(g, d, Configuration(*found));
      if (report.upper && *report.upper == k) {
        report.decided = true;
        report.value = k;
      }
      break;
    }
    if (report.upper && *report.upper == k) report.upper = k - 1;
    if (k == 1) break;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return report;
}

MobReport mob_number(const Graph &g, const MobOptions &opts) {
  if (g.order() == 0) throw Error(ErrorCode::invalid_argument, "mob_number: empty graph");
  return mob_number(g, all_pairs_distances(g), opts);
}

namespace {

GridPoint step(GridPoint p, GridPoint e) { return {p.x + e.x, p.y + e.y}; }

GridPoint unit(GridDirection dir) {
  switch (dir) {
    case GridDirection::right: return {1, 0};
    case GridDirection::up: return {0, 1};
    case GridDirection::left: return {-1, 0};
    case GridDirection::down: return {0, -1};
  }
  return {1, 0};
}

bool grid_between(GridPoint u, GridPoint w, GridPoint v) {
  return infinite_grid_distance(u, w) + infinite_grid_distance(w, v) == infinite_grid_distance(u, v);
}

bool grid_general_position(const std::vector<GridPoint> &pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == i || k == j) continue;
        if (grid_between(pts[i], pts[k], pts[j])) return false;
      }
  return true;
}

}  // namespace

std::vector<GridMove> grid_round_moves(GridPoint center, GridDirection dir) {
  const GridPoint e = unit(dir);
  const GridPoint f{-e.y, e.x};
  const GridPoint back{-e.x, -e.y};
  const GridPoint side{-f.x, -f.y};
  const GridPoint ahead = step(center, e);
  const GridPoint left = step(center, f);
  const GridPoint right = step(center, side);
  const GridPoint behind = step(center, back);
  return {
      {ahead, step(ahead, e)},
      {left, step(left, e)},
      {right, step(right, e)},
      {behind, center},
  };
}

bool verify_grid_moves(std::vector<GridPoint> robots, std::span<const GridMove> moves) {
  std::sort(robots.begin(), robots.end());
  if (std::adjacent_find(robots.begin(), robots.end()) != robots.end()) return false;
  if (!grid_general_position(robots)) return false;
  for (const GridMove &m : moves) {
    auto src = std::find(robots.begin(), robots.end(), m.from);
    if (src == robots.end()) return false;
    if (std::find(robots.begin(), robots.end(), m.to) != robots.end()) return false;
    if (infinite_grid_distance(m.from, m.to) != 1) return false;
    *src = m.to;
    if (!grid_general_position(robots)) return false;
  }
  return true;
}

bool verify_infinite_grid_rounds(GridPoint center, std::size_t rounds, GridDirection dir) {
  if (rounds == 0) throw Error(ErrorCode::invalid_argument, "verify_infinite_grid_rounds: rounds must be positive");
  const GridPoint e = unit(dir);
  std::vector<GridPoint> robots{{center.x + 1, center.y}, {center.x - 1, center.y}, {center.x, center.y + 1},
                                {center.x, center.y - 1}};
  std::vector<GridMove> moves;
  GridPoint c = center;
  for (std::size_t r = 0; r < rounds; ++r) {
    auto round = grid_round_moves(c, dir);
    moves.insert(moves.end(), round.begin(), round.end());
    c = step(c, e);
  }
  return verify_grid_moves(std::move(robots), moves);
}

}  // namespace mobgp
