#pragma once

// Independent oracles and graph corpora for the tests. Nothing here calls
// into the library except Graph construction.

#include "mobgp/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

using mobgp::Edge;
using mobgp::Graph;
using mobgp::Vertex;

constexpr int kInf = -1;

// Floyd–Warshall on the adjacency matrix; kInf for unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph &g) {
  const std::size_t n = g.order();
  const int big = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, big));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto &row : d)
    for (int &x : row)
      if (x >= big) x = kInf;
  return d;
}

using Matrix = std::vector<std::vector<int>>;

inline bool fw_between(const Matrix &d, std::size_t u, std::size_t w, std::size_t v) {
  if (d[u][w] == kInf || d[w][v] == kInf || d[u][v] == kInf) return false;
  return d[u][w] + d[w][v] == d[u][v];
}

inline bool fw_general_position(const Matrix &d, const std::vector<std::size_t> &s) {
  for (std::size_t a : s)
    for (std::size_t b : s)
      for (std::size_t c : s)
        if (a != b && b != c && a != c && fw_between(d, a, b, c)) return false;
  return true;
}

// Straight from the definition: x in general position and no w in x \ {u,v}
// on a u,v-geodesic for u in x, v anywhere.
inline bool fw_outer_general_position(const Matrix &d, const std::vector<std::size_t> &x) {
  if (!fw_general_position(d, x)) return false;
  const std::size_t n = d.size();
  for (std::size_t u : x)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w : x)
        if (w != u && w != v && u != v && fw_between(d, u, w, v)) return false;
  return true;
}

inline std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

// Largest subset passing `pred`, by trying every subset.
template <class Pred>
std::size_t exhaustive_max(std::size_t n, Pred pred) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto s = members(mask);
    if (s.size() > best && pred(s)) best = s.size();
  }
  return best;
}

inline std::size_t exhaustive_gp(const Graph &g) {
  const auto d = floyd_warshall(g);
  return exhaustive_max(g.order(), [&](const auto &s) { return fw_general_position(d, s); });
}

inline std::size_t exhaustive_gpo(const Graph &g) {
  const auto d = floyd_warshall(g);
  return exhaustive_max(g.order(), [&](const auto &s) { return fw_outer_general_position(d, s); });
}

inline std::size_t exhaustive_clique(const Graph &g) {
  return exhaustive_max(g.order(), [&](const auto &s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.adjacent(static_cast<Vertex>(s[i]), static_cast<Vertex>(s[j]))) return false;
    return true;
  });
}

// Adjacency as a bitmask over the n(n-1)/2 vertex pairs.
inline std::uint32_t pair_bit(std::size_t n, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint32_t>(u * n - u * (u + 1) / 2 + (v - u - 1));
}

// Minimum mask over the relabellings that list vertices in order of an
// isomorphism invariant (degree, then neighbour degrees); only vertices
// with equal invariants are permuted among themselves.
inline std::uint32_t canonical_mask(std::size_t n, const std::vector<Edge> &edges) {
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<std::size_t>> invariant(n);
  for (std::size_t v = 0; v < n; ++v) {
    invariant[v].push_back(deg[v]);
    std::vector<std::size_t> nd;
    for (std::size_t w : adj[v]) nd.push_back(deg[w]);
    std::sort(nd.begin(), nd.end());
    invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return invariant[a] != invariant[b] ? invariant[a] < invariant[b] : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) in order
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && invariant[order[j]] == invariant[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~0u;
  std::vector<std::size_t> position(n);
  // Odometer over the permutations of each cell.
  auto advance = [&]() {
    for (auto [b, e] : cells)
      if (std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e))) return true;
    return false;
  };
  do {
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    std::uint32_t mask = 0;
    for (auto [u, v] : edges) mask |= 1u << pair_bit(n, position[u], position[v]);
    best = std::min(best, mask);
  } while (advance());
  return best;
}

inline std::vector<Edge> edges_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (mask & (1u << pair_bit(n, u, v))) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return edges;
}

// One representative of every connected graph on n vertices, up to
// isomorphism. Every connected graph has a vertex whose removal leaves it
// connected, so extending the (n-1)-vertex list by one vertex reaches all.
inline const std::vector<std::vector<Edge>> &connected_graphs(std::size_t n) {
  static std::vector<std::vector<std::vector<Edge>>> cache(10);
  auto &slot = cache.at(n);
  if (!slot.empty()) return slot;
  if (n == 1) {
    slot.push_back({});
    return slot;
  }
  std::set<std::uint32_t> seen;
  for (const auto &base : connected_graphs(n - 1)) {
    for (std::uint32_t nbrs = 1; nbrs < (1u << (n - 1)); ++nbrs) {
      auto edges = base;
      for (std::size_t u = 0; u + 1 < n; ++u)
        if (nbrs & (1u << u)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(n - 1));
      const auto key = canonical_mask(n, edges);
      if (seen.insert(key).second) slot.push_back(edges_from_mask(n, key));
    }
  }
  return slot;
}

// All connected graphs on 1..max_n vertices, computed once per max_n.
inline const std::vector<Graph> &small_connected_corpus(std::size_t max_n) {
  static std::vector<std::vector<Graph>> cache(10);
  auto &slot = cache.at(max_n);
  if (slot.empty()) {
    for (std::size_t n = 1; n <= max_n; ++n)
      for (const auto &edges : connected_graphs(n)) slot.emplace_back(n, edges);
  }
  return slot;
}

// Random G(n, p) graphs with a fixed seed; optionally only connected ones.
inline std::vector<Graph> random_graphs(std::size_t n, std::size_t count, double p, bool connected,
                                        std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Graph> out;
  while (out.size() < count) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    Graph g(n, edges);
    if (connected && !mobgp::is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testing_support
