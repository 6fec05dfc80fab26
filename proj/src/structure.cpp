#include "mobgp/structure.hpp"

#include "mobgp/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace mobgp {

std::size_t leaf_count(const Graph &g) {
  std::size_t leaves = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) ++leaves;
  return leaves;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph &g) : g_(g) {}

  CliqueReport run() {
    std::vector<Vertex> candidates(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) candidates[v] = v;
    expand(candidates);
    CliqueReport report;
    report.size = best_.size();
    report.witness = best_;
    return report;
  }

 private:
  // Greedy sequential colouring; colours[i] bounds the clique size within
  // candidates[0..i].
  std::vector<std::size_t> colour_bounds(const std::vector<Vertex> &candidates) const {
    std::vector<std::size_t> bounds(candidates.size());
    std::vector<std::vector<Vertex>> classes;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (Vertex u : classes[c])
          if (g_.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
      bounds[i] = i == 0 ? c + 1 : std::max(bounds[i - 1], c + 1);
    }
    return bounds;
  }

  // Candidates are kept in ascending id order so the first maximum clique
  // found is the lexicographically smallest.
  void expand(const std::vector<Vertex> &candidates) {
    if (candidates.empty()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    // Bound over every suffix: colouring of candidates[i..].
    std::vector<Vertex> reversed(candidates.rbegin(), candidates.rend());
    const auto suffix_bounds = colour_bounds(reversed);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::size_t remaining_bound = suffix_bounds[candidates.size() - 1 - i];
      if (current_.size() + remaining_bound <= best_.size()) return;
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g_.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      current_.push_back(v);
      expand(next);
      current_.pop_back();
    }
    if (current_.size() > best_.size()) best_ = current_;
  }

  const Graph &g_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueReport clique_number(const Graph &g) { return CliqueSearch(g).run(); }

std::optional<std::uint32_t> girth(const Graph &g) {
  const std::size_t n = g.order();
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> depth(n);
  std::vector<Vertex> parent(n), queue;
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  for (Vertex s = 0; s < n; ++s) {
    std::fill(depth.begin(), depth.end(), kUnseen);
    depth[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * depth[u] >= best) break;
      for (Vertex v : g.neighbors(u)) {
        if (depth[v] == kUnseen) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, depth[u] + depth[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return best;
}

std::uint32_t radius(const Graph &g, const DistanceOracle &d) {
  if (g.order() == 0) throw Error(ErrorCode::invalid_argument, "radius of the empty graph");
  if (!d.connected()) throw Error(ErrorCode::disconnected, "radius is undefined on a disconnected graph");
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (Vertex u = 0; u < g.order(); ++u) {
    std::uint32_t ecc = 0;
    for (Vertex v = 0; v < g.order(); ++v) ecc = std::max(ecc, d(u, v).hops());
    best = std::min(best, ecc);
  }
  return best;
}

std::uint32_t radius(const Graph &g) { return radius(g, all_pairs_distances(g)); }

bool is_convex_subset(const Graph &g, const DistanceOracle &d, std::span<const Vertex> s) {
  std::vector<char> inside(g.order(), 0);
  for (Vertex v : s) inside[v] = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (Vertex w = 0; w < g.order(); ++w)
        if (!inside[w] && d.between(s[i], w, s[j])) return false;
  return true;
}

std::uint64_t infinite_grid_distance(GridPoint p, GridPoint q) {
  return static_cast<std::uint64_t>(std::llabs(p.x - q.x)) + static_cast<std::uint64_t>(std::llabs(p.y - q.y));
}

}  // namespace mobgp
