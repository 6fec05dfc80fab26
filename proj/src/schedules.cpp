#include "mobgp/schedules.hpp"

#include "mobgp/error.hpp"
#include "mobgp/position.hpp"
#include "mobgp/products.hpp"
#include "mobgp/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace mobgp {

namespace {

using Params = std::vector<long long>;

void require_arity(const FamilySpec &spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    throw Error(ErrorCode::invalid_argument, spec.family + " takes " + std::to_string(arity) +
                                                 " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

void require(bool ok, const std::string &family, const std::string &rule) {
  if (!ok) throw Error(ErrorCode::out_of_range, family + ": parameters must satisfy " + rule);
}

Graph family(const std::string &name, Params params = {}) { return build_graph(name, params); }

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

// Move accumulator; ids are product ids.
struct MoveList {
  std::vector<Move> moves;
  void add(Vertex from, Vertex to) { moves.push_back({from, to}); }
};

Schedule hamming(long long n, long long m) {
  const Graph g = cartesian_product(family("complete", {n}), family("complete", {m}));
  // Vertex (i,j), 1-based as in K_n and K_m.
  auto id = [m](long long i, long long j) { return static_cast<Vertex>((i - 1) * m + (j - 1)); };
  std::vector<Vertex> start;
  for (long long i = 2; i <= n; ++i) start.push_back(id(i, 1));
  for (long long j = 3; j <= m; ++j) start.push_back(id(1, j));
  MoveList out;
  for (long long j = 1; j <= m - 1; ++j) {
    for (long long i = 2; i <= n; ++i) out.add(id(i, j), id(i, j + 1));
    if (j + 2 <= m) out.add(id(1, j + 2), id(1, j));
  }
  // With m = 3 no row robot ever reaches (1,2).
  if (m == 3) out.add(id(1, 1), id(1, 2));
  return make_schedule(g, Configuration(start), std::move(out.moves));
}

Schedule star_square(long long k) {
  const Graph g = cartesian_product(family("star", {k}), family("star", {k}));
  auto id = [k](long long a, long long b) { return static_cast<Vertex>(a * (k + 1) + b); };
  std::vector<Vertex> start{id(0, 0)};
  for (long long i = 1; i <= k; ++i) start.push_back(id(i, 1));
  MoveList out;
  // Reach (a,b), b >= 2, then undo the excursion.
  for (long long b = 2; b <= k; ++b) {
    for (long long a = 1; a <= k; ++a) {
      std::vector<Move> trip{{id(0, 0), id(0, b)}};
      for (long long i = 1; i <= k; ++i)
        if (i != a) trip.push_back({id(i, 1), id(i, 0)});
      trip.push_back({id(0, b), id(a, b)});
      for (const Move &mv : trip) out.moves.push_back(mv);
      for (auto it = trip.rbegin(); it != trip.rend(); ++it) out.moves.push_back(it->reversed());
    }
  }
  out.add(id(0, 0), id(0, 2));
  for (long long i = 2; i <= k; ++i) out.add(id(i, 1), id(i, 0));
  out.add(id(1, 1), id(0, 1));
  return make_schedule(g, Configuration(start), std::move(out.moves));
}

Schedule grid(long long n, long long m) {
  const Graph g = cartesian_product(family("path", {n}), family("path", {m}));
  auto id = [m](long long x, long long y) { return static_cast<Vertex>((x - 1) * m + (y - 1)); };
  MoveList out;
  auto walk_column = [&](long long x) {
    for (long long y = 1; y < m - 1; ++y) out.add(id(x, y), id(x, y + 1));
    for (long long y = m - 1; y > 1; --y) out.add(id(x, y), id(x, y - 1));
  };
  walk_column(1);
  walk_column(n);
  std::vector<char> block(g.order(), 0);
  for (long long x = 2; x <= n - 1; ++x)
    for (long long y = 2; y <= m; ++y) block[id(x, y)] = 1;
  for (const Move &mv : dfs_tour(g, id(2, m), block)) out.moves.push_back(mv);
  out.add(id(n, 1), id(n, 2));
  for (long long x = 1; x < n - 1; ++x) out.add(id(x, 1), id(x + 1, 1));
  out.add(id(2, m), id(1, m));
  for (long long y = 2; y < m; ++y) out.add(id(n, y), id(n, y + 1));
  return make_schedule(g, Configuration({id(1, 1), id(n, 1), id(2, m)}), std::move(out.moves));
}

Schedule prism_cycle(long long n) {
  const Graph g = cartesian_product(family("cycle", {n}), family("complete", {2}));
  // (v_i, j) with j in {1,2}.
  auto id = [n](long long i, long long j) { return static_cast<Vertex>(mod(i, n) * 2 + (j - 1)); };
  const long long c = (n + 1) / 2;
  std::vector<Vertex> start{id(0, 1), id(c, 1), id(1, 2), id(c + 1, 2)};
  MoveList out;
  for (long long t = 0; t < n - 1; ++t) {
    if (n % 2 == 1) {
      out.add(id(1 + t, 2), id(2 + t, 2));
      out.add(id(t, 1), id(1 + t, 1));
      out.add(id(c + 1 + t, 2), id(c + 2 + t, 2));
      out.add(id(c + t, 1), id(c + 1 + t, 1));
    } else {
      out.add(id(1 + t, 2), id(2 + t, 2));
      out.add(id(c + 1 + t, 2), id(c + 2 + t, 2));
      out.add(id(t, 1), id(1 + t, 1));
      out.add(id(c + t, 1), id(c + 1 + t, 1));
    }
  }
  return make_schedule(g, Configuration(start), std::move(out.moves));
}

Schedule c4_cylinder() {
  const Graph g = cartesian_product(family("cycle", {4}), family("path", {3}));
  auto id = [](long long i, long long j) { return static_cast<Vertex>(mod(i, 4) * 3 + (j - 1)); };
  MoveList out;
  for (long long i = 0; i <= 2; ++i) {
    out.add(id(i + 1, 2), id(i + 2, 2));
    out.add(id(i, 3), id(i + 1, 3));
    out.add(id(i, 1), id(i + 1, 1));
  }
  return make_schedule(g, Configuration({id(0, 1), id(1, 2), id(0, 3)}), std::move(out.moves));
}

Schedule cylinder5_long(long long r) {
  const Graph g = cartesian_product(family("cycle", {r}), family("path", {5}));
  auto id = [r](long long u, long long v) { return static_cast<Vertex>(mod(u, r) * 5 + (v - 1)); };
  const long long h = r / 2;
  std::vector<Vertex> start{id(1, 1), id(4, 2), id(h + 2, 3), id(0, 4), id(3, 5)};
  MoveList out;
  for (long long i = 0; i <= r - 2; ++i) {
    out.add(id(i + 4, 2), id(i + 5, 2));
    out.add(id(i + 3, 5), id(i + 4, 5));
    out.add(id(i + h + 2, 3), id(i + h + 3, 3));
    out.add(id(i + 1, 1), id(i + 2, 1));
    out.add(id(i, 4), id(i + 1, 4));
  }
  return make_schedule(g, Configuration(start), std::move(out.moves));
}

Schedule corona_cycle(long long n) {
  const Graph g = corona_product(family("cycle", {n}), family("complete", {1}));
  auto centre = [n](long long i) { return static_cast<Vertex>(mod(i, n)); };
  auto leaf = [n](long long i) { return static_cast<Vertex>(n + mod(i, n)); };
  const long long c = (n + 1) / 2;
  std::vector<Vertex> start;
  for (long long j = 0; j <= c; ++j) start.push_back(leaf(j));
  MoveList out;
  const long long span = n - 1 - c;  // steps from c+i forward to i-1
  for (long long i = 0; i >= -c; --i) {
    const long long w0 = c + i;
    out.add(leaf(w0), centre(w0));
    for (long long t = 1; t <= span; ++t) {
      out.add(centre(w0 + t - 1), centre(w0 + t));
      if (t < span) {
        out.add(centre(w0 + t), leaf(w0 + t));
        out.add(leaf(w0 + t), centre(w0 + t));
      }
    }
    out.add(centre(w0 + span), leaf(w0 + span));
  }
  return make_schedule(g, Configuration(start), std::move(out.moves));
}

Schedule birdcage_join(long long n) {
  const Graph g = join(family("birdcage", {n}), family("complete", {1}));
  const auto z = static_cast<Vertex>(2 * n);
  const auto x = static_cast<Vertex>(2 * n + 1);
  std::vector<Vertex> start;
  for (long long i = 0; i < n; ++i) start.push_back(static_cast<Vertex>(i));
  start.push_back(x);
  MoveList out;
  out.add(x, z);
  for (long long i = 0; i < n; ++i) {
    out.add(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
    out.add(static_cast<Vertex>(n + i), static_cast<Vertex>(i));
  }
  return make_schedule(g, Configuration(start), std::move(out.moves));
}

Schedule clique_minus_edge_join(long long r, long long s) {
  const Graph g = join(family("complete_minus_edge", {r}), family("complete_minus_edge", {s}));
  // complete_minus_edge misses the edge {0,1}.
  const Vertex x1 = 0, x2 = 1;
  const auto y1 = static_cast<Vertex>(r), y2 = static_cast<Vertex>(r + 1);
  std::vector<Vertex> start;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != x2 && v != y1 && v != y2) start.push_back(v);
  return make_schedule(g, Configuration(start), {{x1, y1}, {y1, x2}, {x2, y2}});
}

using Generator = std::function<Schedule(const FamilySpec &)>;

const std::map<std::string, Generator> &generators() {
  static const std::map<std::string, Generator> table = {
      {"hamming",
       [](const FamilySpec &s) {
         require_arity(s, 2);
         const long long n = s.params[0], m = s.params[1];
         require(m >= 3 && n >= m && n <= 256, s.family, "256 >= n >= m >= 3");
         return hamming(n, m);
       }},
      {"star_square",
       [](const FamilySpec &s) {
         require_arity(s, 1);
         require(s.params[0] >= 2 && s.params[0] <= 64, s.family, "2 <= k <= 64");
         return star_square(s.params[0]);
       }},
      {"grid",
       [](const FamilySpec &s) {
         require_arity(s, 2);
         require(s.params[0] >= 3 && s.params[1] >= 3 && s.params[0] <= 256 && s.params[1] <= 256, s.family,
                 "3 <= n,m <= 256");
         return grid(s.params[0], s.params[1]);
       }},
      {"prism_cycle",
       [](const FamilySpec &s) {
         require_arity(s, 1);
         require(s.params[0] >= 5 && s.params[0] <= 10000, s.family, "5 <= n <= 10000");
         return prism_cycle(s.params[0]);
       }},
      {"c4_cylinder",
       [](const FamilySpec &s) {
         require_arity(s, 0);
         return c4_cylinder();
       }},
      {"cylinder5",
       [](const FamilySpec &s) {
         require_arity(s, 1);
         const long long r = s.params[0];
         require((r == 9 || r >= 11) && r <= 10000, s.family, "r = 9 or 11 <= r <= 10000");
         return r == 9 ? cylinder5_nine(9 / 2 + 2) : cylinder5_long(r);
       }},
      {"corona_cycle",
       [](const FamilySpec &s) {
         require_arity(s, 1);
         require(s.params[0] >= 3 && s.params[0] <= 10000, s.family, "3 <= n <= 10000");
         return corona_cycle(s.params[0]);
       }},
      {"birdcage_join",
       [](const FamilySpec &s) {
         require_arity(s, 1);
         require(s.params[0] >= 2 && s.params[0] <= 10000, s.family, "2 <= n <= 10000");
         return birdcage_join(s.params[0]);
       }},
      {"clique_minus_edge_join",
       [](const FamilySpec &s) {
         require_arity(s, 2);
         require(s.params[0] >= 3 && s.params[1] >= 3 && s.params[0] <= 2000 && s.params[1] <= 2000, s.family,
                 "3 <= r,s <= 2000");
         return clique_minus_edge_join(s.params[0], s.params[1]);
       }},
  };
  return table;
}

void require_complete(const Graph &g, const Schedule &base, const char *what) {
  TraversalReport report;
  try {
    report = replay_moves(g, all_pairs_distances(g), base.initial, base.moves);
  } catch (const Error &e) {
    throw Error(ErrorCode::precondition, std::string(what) + ": base schedule rejected: " + e.what());
  }
  if (!report.complete) {
    throw Error(ErrorCode::precondition, std::string(what) + ": base schedule is not valid and complete");
  }
}

void require_connected(const Graph &g, const char *what, const char *which) {
  if (g.order() == 0 || !is_connected(g)) {
    throw Error(ErrorCode::precondition, std::string(what) + ": " + which + " must be connected and nonempty");
  }
}

// Shortest path from `from` to every vertex: BFS parents, ascending order.
std::vector<Vertex> bfs_parents(const Graph &g, Vertex from) {
  constexpr Vertex kNone = 0xFFFFFFFFu;
  std::vector<Vertex> parent(g.order(), kNone);
  parent[from] = from;
  std::vector<Vertex> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex v : g.neighbors(queue[head])) {
      if (parent[v] == kNone) {
        parent[v] = queue[head];
        queue.push_back(v);
      }
    }
  }
  return parent;
}

std::vector<Vertex> path_to(const std::vector<Vertex> &parent, Vertex from, Vertex to) {
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Schedule cylinder5_nine(long long third_offset) {
  constexpr long long r = 9;
  const Graph g = cartesian_product(family("cycle", {r}), family("path", {5}));
  auto id = [](long long u, long long v) { return static_cast<Vertex>(mod(u, r) * 5 + (v - 1)); };
  const long long c = third_offset;
  MoveList out;
  for (long long t = 0; t < r - 1; ++t) {
    out.add(id(c + t, 3), id(c + t + 1, 3));
    out.add(id(1 + t, 1), id(2 + t, 1));
    out.add(id(t, 4), id(t + 1, 4));
    out.add(id(4 + t, 2), id(5 + t, 2));
    out.add(id(3 + t, 5), id(4 + t, 5));
  }
  return make_schedule(g, Configuration({id(1, 1), id(4, 2), id(c, 3), id(0, 4), id(3, 5)}), std::move(out.moves));
}

Schedule generate_schedule(const FamilySpec &spec) {
  const auto &table = generators();
  auto it = table.find(spec.family);
  if (it == table.end()) throw Error(ErrorCode::unknown_family, "unknown schedule family \"" + spec.family + "\"");
  return it->second(spec);
}

const std::vector<std::string> &schedule_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &entry : generators()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::vector<Move> dfs_tour(const Graph &g, Vertex start, const std::vector<char> &allowed) {
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  std::vector<Move> moves;
  std::vector<char> seen(g.order(), 0);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{start, 0}};
  seen[start] = 1;
  while (!stack.empty()) {
    Frame &top = stack.back();
    auto nbrs = g.neighbors(top.v);
    if (top.next < nbrs.size()) {
      const Vertex w = nbrs[top.next++];
      if (seen[w] || !ok(w)) continue;
      seen[w] = 1;
      moves.push_back({top.v, w});
      stack.push_back({w, 0});
    } else {
      const Vertex v = top.v;
      stack.pop_back();
      if (!stack.empty()) moves.push_back({v, stack.back().v});
    }
  }
  return moves;
}

Schedule factor_mob_schedule(const Graph &g, const Graph &h, const Schedule &base) {
  require_complete(g, base, "factor_mob_schedule");
  require_connected(h, "factor_mob_schedule", "h");
  const Graph p = cartesian_product(g, h);
  const std::size_t nh = h.order();
  const Vertex h0 = 0;
  auto id = [nh](Vertex u, Vertex y) { return product_vertex(nh, u, y); };
  const std::vector<Move> column = dfs_tour(h, h0);

  std::vector<Move> moves;
  std::vector<char> toured(g.order(), 0);
  auto tour = [&](Vertex u) {
    if (toured[u]) return;
    toured[u] = 1;
    for (const Move &m : column) moves.push_back({id(u, m.from), id(u, m.to)});
  };
  std::vector<Vertex> start;
  for (Vertex u : base.initial.vertices()) start.push_back(id(u, h0));
  for (Vertex u : base.initial.vertices()) tour(u);
  for (const Move &m : base.moves) {
    moves.push_back({id(m.from, h0), id(m.to, h0)});
    tour(m.to);
  }
  return make_schedule(p, Configuration(start), std::move(moves));
}

Schedule gpo_factor_schedule(const Graph &g, const Graph &h, const VertexSet &x) {
  require_connected(g, "gpo_factor_schedule", "g");
  require_connected(h, "gpo_factor_schedule", "h");
  if (h.order() < 2) throw Error(ErrorCode::precondition, "gpo_factor_schedule: h needs at least two vertices");
  if (x.empty()) throw Error(ErrorCode::precondition, "gpo_factor_schedule: x must be nonempty");
  for (Vertex u : x)
    if (u >= g.order()) throw Error(ErrorCode::invalid_argument, "gpo_factor_schedule: vertex out of range");
  const DistanceOracle dg = all_pairs_distances(g);
  if (!is_outer_general_position(dg, x)) {
    throw Error(ErrorCode::precondition, "gpo_factor_schedule: x is not an outer general position set");
  }
  const Graph p = cartesian_product(g, h);
  const std::size_t nh = h.order();
  auto id = [nh](Vertex u, Vertex y) { return product_vertex(nh, u, y); };
  const Vertex h0 = 0;
  const auto parent = bfs_parents(h, h0);

  // Tour of G_i: the component of u_i once the other members of x are removed.
  std::vector<std::vector<Move>> component_tour;
  for (Vertex u : x) {
    std::vector<char> allowed(g.order(), 1);
    for (Vertex w : x)
      if (w != u) allowed[w] = 0;
    component_tour.push_back(dfs_tour(g, u, allowed));
  }

  std::vector<Move> moves;
  auto excursion = [&](std::size_t i, const std::vector<Vertex> &q) {
    const Vertex u = x[i];
    for (std::size_t t = 1; t < q.size(); ++t) moves.push_back({id(u, q[t - 1]), id(u, q[t])});
    const Vertex layer = q.back();
    for (const Move &m : component_tour[i]) moves.push_back({id(m.from, layer), id(m.to, layer)});
    for (std::size_t t = q.size() - 1; t > 0; --t) moves.push_back({id(u, q[t]), id(u, q[t - 1])});
  };
  for (Vertex target = 0; target < nh; ++target) {
    if (target == h0) continue;
    const auto q = path_to(parent, h0, target);
    for (std::size_t i = 0; i < x.size(); ++i) excursion(i, q);
  }
  // Shift the robots to a neighbouring layer and cover G^{h0} from there.
  const Vertex h1 = h.neighbors(h0).front();
  for (Vertex u : x) moves.push_back({id(u, h0), id(u, h1)});
  for (std::size_t i = 0; i < x.size(); ++i) excursion(i, {h1, h0});

  std::vector<Vertex> start;
  for (Vertex u : x) start.push_back(id(u, h0));
  return make_schedule(p, Configuration(start), std::move(moves));
}

namespace {

class WindowWalker {
 public:
  WindowWalker(const Graph &h, std::size_t r, const Schedule &base, std::vector<Vertex> window)
      : h_(h), r_(r), base_(base), window_(std::move(window)), layer_seen_(h.order(), 0) {
    // Robots are tracked by base coordinates (u, j) against the window.
    for (Vertex v : base.initial.vertices()) robots_.insert(v);
  }

  std::vector<Move> run() {
    replay();
    std::set<std::vector<Vertex>> visited{window_};
    explore(visited);
    return std::move(moves_);
  }

  bool done() const { return seen_count_ == h_.order(); }

 private:
  Vertex target(Vertex base_vertex) const {
    const Vertex u = base_vertex / static_cast<Vertex>(r_);
    const Vertex j = base_vertex % static_cast<Vertex>(r_);
    return product_vertex(h_.order(), u, window_[j]);
  }

  bool window_has_new_layer() const {
    return std::any_of(window_.begin(), window_.end(), [&](Vertex v) { return !layer_seen_[v]; });
  }

  // Replays the base schedule in the current window, forwards or backwards
  // depending on where the robots stand.
  void replay() {
    if (!forward_next_) {
      for (auto it = base_.moves.rbegin(); it != base_.moves.rend(); ++it) emit(it->reversed());
    } else {
      for (const Move &m : base_.moves) emit(m);
    }
    forward_next_ = !forward_next_;
    for (Vertex v : window_) {
      if (!layer_seen_[v]) {
        layer_seen_[v] = 1;
        ++seen_count_;
      }
    }
  }

  void emit(Move base_move) {
    moves_.push_back({target(base_move.from), target(base_move.to)});
    robots_.erase(base_move.from);
    robots_.insert(base_move.to);
  }

  // Robots occupying window position j, ascending G vertex.
  std::vector<Vertex> layer_robots(std::size_t j) const {
    std::vector<Vertex> out;
    for (Vertex v : robots_)
      if (v % r_ == j) out.push_back(v / static_cast<Vertex>(r_));
    return out;
  }

  // Window gains `w` at the far end (forward) or the near end (backward).
  // Layer by layer, starting with the one next to w, every robot steps one
  // vertex along the walk; in window coordinates the configuration is
  // unchanged.
  void slide(Vertex w, bool forward) {
    const std::size_t nh = h_.order();
    std::vector<std::pair<std::size_t, std::vector<Vertex>>> layers;
    for (std::size_t j = 0; j < r_; ++j) layers.emplace_back(j, layer_robots(j));
    if (forward) {
      for (std::size_t jj = r_; jj-- > 0;) {
        const Vertex dest = jj + 1 < r_ ? window_[jj + 1] : w;
        for (Vertex u : layers[jj].second) moves_.push_back({product_vertex(nh, u, window_[jj]), product_vertex(nh, u, dest)});
      }
      window_.erase(window_.begin());
      window_.push_back(w);
    } else {
      for (std::size_t jj = 0; jj < r_; ++jj) {
        const Vertex dest = jj > 0 ? window_[jj - 1] : w;
        for (Vertex u : layers[jj].second) moves_.push_back({product_vertex(nh, u, window_[jj]), product_vertex(nh, u, dest)});
      }
      window_.pop_back();
      window_.insert(window_.begin(), w);
    }
  }

  void explore(std::set<std::vector<Vertex>> &visited) {
    for (int dir = 0; dir < 2 && !done(); ++dir) {
      const bool forward = dir == 0;
      const Vertex end = forward ? window_.back() : window_.front();
      const bool has_inner = r_ > 1;
      const Vertex inner = has_inner ? (forward ? window_[r_ - 2] : window_[1]) : end;
      for (Vertex w : h_.neighbors(end)) {
        if (done()) return;
        if (has_inner && w == inner) continue;
        std::vector<Vertex> next = window_;
        if (forward) {
          next.erase(next.begin());
          next.push_back(w);
        } else {
          next.pop_back();
          next.insert(next.begin(), w);
        }
        if (!visited.insert(next).second) continue;
        const Vertex dropped = forward ? window_.front() : window_.back();
        slide(w, forward);
        if (window_has_new_layer()) replay();
        explore(visited);
        if (done()) return;
        slide(dropped, !forward);
      }
    }
  }

  const Graph &h_;
  std::size_t r_;
  const Schedule &base_;
  std::vector<Vertex> window_;
  std::vector<char> layer_seen_;
  std::size_t seen_count_ = 0;
  std::set<Vertex> robots_;
  bool forward_next_ = true;
  std::vector<Move> moves_;
};

}  // namespace

Schedule lift_schedule(const Graph &g, const Graph &h, std::size_t r, const Schedule &base,
                       const std::vector<Vertex> &q) {
  if (r == 0) throw Error(ErrorCode::invalid_argument, "lift_schedule: r must be positive");
  require_connected(h, "lift_schedule", "h");
  if (auto gh = girth(h); gh && *gh < 2 * r) {
    throw Error(ErrorCode::precondition, "lift_schedule: girth of h is " + std::to_string(*gh) + ", needs at least " +
                                             std::to_string(2 * r));
  }
  if (q.size() != r) throw Error(ErrorCode::precondition, "lift_schedule: q must have exactly r vertices");
  const DistanceOracle dh = all_pairs_distances(h);
  for (std::size_t j = 0; j < r; ++j) {
    if (q[j] >= h.order()) throw Error(ErrorCode::invalid_argument, "lift_schedule: q vertex out of range");
    if (j > 0 && !h.adjacent(q[j - 1], q[j])) throw Error(ErrorCode::precondition, "lift_schedule: q is not a path");
  }
  if (dh(q.front(), q.back()).hops() != r - 1) {
    throw Error(ErrorCode::precondition, "lift_schedule: q is not a geodesic");
  }
  const Graph cylinder = cartesian_product(g, family("path", {static_cast<long long>(r)}));
  require_complete(cylinder, base, "lift_schedule");

  WindowWalker walker(h, r, base, q);
  std::vector<Move> moves = walker.run();
  if (!walker.done()) throw Error(ErrorCode::precondition, "lift_schedule: some layers of h cannot be reached by sliding");
  std::vector<Vertex> start;
  for (Vertex v : base.initial.vertices()) {
    start.push_back(product_vertex(h.order(), v / static_cast<Vertex>(r), q[v % r]));
  }
  return make_schedule(cartesian_product(g, h), Configuration(start), std::move(moves));
}

Schedule join_lower_bound_schedule(const Graph &g, const Graph &h) {
  const Graph p = join(g, h);
  const CliqueReport wg = clique_number(g);
  const CliqueReport wh = clique_number(h);
  // big: the side with the larger clique number, toured first.
  const bool g_big = wh.size <= wg.size;
  const Graph &big = g_big ? g : h;
  const Graph &small = g_big ? h : g;
  const VertexSet &w_big = g_big ? wg.witness : wh.witness;
  const VertexSet &w_small = g_big ? wh.witness : wg.witness;
  const Vertex big_off = g_big ? 0 : static_cast<Vertex>(g.order());
  const Vertex small_off = g_big ? static_cast<Vertex>(g.order()) : 0;
  require_connected(big, "join_lower_bound_schedule", "the factor with the larger clique number");
  require_connected(small, "join_lower_bound_schedule", "the factor with the smaller clique number");

  std::vector<Vertex> start;
  for (Vertex v : w_small) start.push_back(small_off + v);
  start.push_back(big_off + w_big.front());
  std::vector<Move> moves;
  for (const Move &m : dfs_tour(big, w_big.front())) moves.push_back({big_off + m.from, big_off + m.to});
  for (std::size_t i = 1; i < w_small.size(); ++i) moves.push_back({small_off + w_small[i], big_off + w_big[i]});
  for (const Move &m : dfs_tour(small, w_small.front())) moves.push_back({small_off + m.from, small_off + m.to});
  return make_schedule(p, Configuration(start), std::move(moves));
}

Schedule corona_cone_schedule(const Graph &g, const Graph &h, const Schedule &cone_base) {
  require_connected(g, "corona_cone_schedule", "g");
  const Graph cone = join(h, family("complete", {1}));
  require_complete(cone, cone_base, "corona_cone_schedule");
  const Graph p = corona_product(g, h);
  const auto ng = static_cast<Vertex>(g.order());
  const auto nh = static_cast<Vertex>(h.order());
  const Vertex apex = nh;
  auto map = [&](Vertex v) { return v == apex ? Vertex{0} : ng + v; };

  // Everything outside the first copy: centres by a tour of g, satellites
  // of the other centres by star excursions.
  std::vector<Move> outside;
  std::vector<char> seen(ng, 0);
  auto star = [&](Vertex c) {
    for (Vertex y = 0; y < nh; ++y) {
      outside.push_back({c, ng + c * nh + y});
      outside.push_back({ng + c * nh + y, c});
    }
  };
  seen[0] = 1;
  for (const Move &m : dfs_tour(g, 0)) {
    outside.push_back(m);
    if (!seen[m.to]) {
      seen[m.to] = 1;
      star(m.to);
    }
  }

  std::vector<Move> moves;
  bool apex_done = false;
  auto visit_apex = [&] {
    if (apex_done) return;
    apex_done = true;
    moves.insert(moves.end(), outside.begin(), outside.end());
  };
  std::vector<Vertex> start;
  for (Vertex v : cone_base.initial.vertices()) start.push_back(map(v));
  if (cone_base.initial.contains(apex)) visit_apex();
  for (const Move &m : cone_base.moves) {
    moves.push_back({map(m.from), map(m.to)});
    if (m.to == apex) visit_apex();
  }
  return make_schedule(p, Configuration(start), std::move(moves));
}

Schedule corona_center_schedule(const Graph &g, const Graph &h, const Schedule &center_base) {
  require_complete(g, center_base, "corona_center_schedule");
  const Graph p = corona_product(g, h);
  const auto ng = static_cast<Vertex>(g.order());
  const auto nh = static_cast<Vertex>(h.order());
  std::vector<Move> moves;
  std::vector<char> seen(ng, 0);
  auto star = [&](Vertex c) {
    if (seen[c]) return;
    seen[c] = 1;
    for (Vertex y = 0; y < nh; ++y) {
      moves.push_back({c, ng + c * nh + y});
      moves.push_back({ng + c * nh + y, c});
    }
  };
  for (Vertex c : center_base.initial.vertices()) star(c);
  for (const Move &m : center_base.moves) {
    moves.push_back(m);
    star(m.to);
  }
  return make_schedule(p, center_base.initial, std::move(moves));
}

}  // namespace mobgp
