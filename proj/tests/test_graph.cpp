#include "doctest.h"
#include "support.hpp"

#include "mobgp/distance.hpp"
#include "mobgp/error.hpp"
#include "mobgp/expr.hpp"
#include "mobgp/structure.hpp"

#include <sstream>

using namespace mobgp;
namespace ts = testing_support;

namespace {

Graph family(const std::string &name, std::vector<long long> params = {}) { return build_graph(name, params); }

bool hints_preserve_edges(const Graph &g) {
  for (const auto &perm : g.symmetry_hints()) {
    for (auto [u, v] : g.edges())
      if (!g.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cycle(5) has five vertices, five edges and a rotation hint") {
  const Graph g = family("cycle", {5});
  CHECK(g.order() == 5);
  CHECK(g.size() == 5);
  REQUIRE_FALSE(g.symmetry_hints().empty());
  const auto &rot = g.symmetry_hints().front();
  for (Vertex v = 0; v < 5; ++v) CHECK(rot[v] == (v + 1) % 5);
}

TEST_CASE("petersen is 3-regular on 10 vertices and 15 edges") {
  const Graph g = family("petersen");
  CHECK(g.order() == 10);
  CHECK(g.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("birdcage(3): clique on u, independent v, hub z") {
  const Graph g = family("birdcage", {3});
  REQUIRE(g.order() == 7);
  const Vertex z = 6;
  for (Vertex i = 0; i < 3; ++i) {
    const Vertex u = i, v = 3 + i;
    CHECK(g.adjacent(u, v));
    CHECK(g.adjacent(v, z));
    CHECK_FALSE(g.adjacent(u, z));
    for (Vertex j = i + 1; j < 3; ++j) {
      CHECK(g.adjacent(i, j));
      CHECK_FALSE(g.adjacent(3 + i, 3 + j));
    }
  }
  CHECK(g.size() == 3 + 3 + 3);
  CHECK(g.label(0) == "u1");
  CHECK(g.label(6) == "z");
}

TEST_CASE("family parameter errors") {
  CHECK_THROWS_AS(family("cycle", {2}), Error);
  try {
    family("cycle", {2});
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
  try {
    family("nonsense", {1});
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::unknown_family);
  }
  try {
    family("path", {});
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("malformed edge lists are rejected") {
  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph(2, loop), Error);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), Error);
  const std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(Graph(2, out_of_range), Error);
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(tree_from_edges(3, cycle), Error);
}

TEST_CASE("edge-list text format round-trips and skips comments") {
  std::istringstream in("# a triangle with a tail\n4 4\n0 1\n1 2\n# inline comment line\n2 0\n2 3\n");
  const Graph g = read_edge_list(in);
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream again(out.str());
  CHECK(read_edge_list(again).same_structure(g));

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), Error);
}

TEST_CASE("every family's symmetry hints map edges to edges") {
  const std::vector<std::pair<std::string, std::vector<long long>>> cases{
      {"path", {1}},   {"path", {6}},          {"cycle", {3}},  {"cycle", {10}},
      {"complete", {1}}, {"complete", {6}},    {"complete_bipartite", {2, 3}},
      {"complete_bipartite", {3, 3}},          {"star", {1}},   {"star", {5}},
      {"empty", {4}},  {"petersen", {}},       {"complete_minus_edge", {5}},
      {"complete_plus_leaf", {4}},             {"birdcage", {2}}, {"birdcage", {5}}};
  for (const auto &[name, params] : cases) {
    CAPTURE(name);
    CHECK(hints_preserve_edges(family(name, params)));
  }
  for (const char *expr : {"cartesian(cycle(5),path(3))", "corona(cycle(4),complete(2))",
                           "join(star(3),cycle(5))", "cartesian(petersen,complete(2))"}) {
    CAPTURE(expr);
    CHECK(hints_preserve_edges(graph_from_expression(expr)));
  }
}

TEST_CASE("distances: examples") {
  const auto p4 = all_pairs_distances(family("path", {4}));
  CHECK(p4(0, 3).hops() == 3);
  CHECK(all_pairs_distances(family("petersen")).max_finite_distance() == 2);
  const auto e3 = all_pairs_distances(family("empty", {3}));
  CHECK_FALSE(e3(0, 1).is_finite());
  CHECK(e3(0, 1) == Distance::unreachable());
  CHECK(e3(1, 1).hops() == 0);
  CHECK_FALSE(e3.connected());
}

TEST_CASE("all_pairs_distances agrees with Floyd-Warshall on graphs up to 8 vertices") {
  std::vector<Graph> corpus = ts::small_connected_corpus(7);
  for (auto &g : ts::random_graphs(8, 200, 0.3, false, 11)) corpus.push_back(std::move(g));
  for (auto &g : ts::random_graphs(6, 100, 0.2, false, 12)) corpus.push_back(std::move(g));
  for (const Graph &g : corpus) {
    const auto d = all_pairs_distances(g);
    const auto s = serial::all_pairs_distances(g);
    const auto fw = ts::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        if (fw[u][v] == ts::kInf) {
          REQUIRE_FALSE(d(u, v).is_finite());
        } else {
          REQUIRE(d(u, v).is_finite());
          REQUIRE(d(u, v).hops() == static_cast<std::uint32_t>(fw[u][v]));
        }
        REQUIRE(d(u, v) == s(u, v));
      }
  }
}

TEST_CASE("distance oracle invariants") {
  for (const Graph &g : ts::random_graphs(9, 60, 0.25, false, 13)) {
    const auto d = all_pairs_distances(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      REQUIRE(d(u, u).hops() == 0);
      for (Vertex v = 0; v < g.order(); ++v) {
        REQUIRE(d(u, v) == d(v, u));
        REQUIRE((d(u, v).is_finite() && d(u, v).hops() == 1) == g.adjacent(u, v));
        for (Vertex w = 0; w < g.order(); ++w) {
          if (d(u, w).is_finite() && d(w, v).is_finite()) {
            REQUIRE(d(u, v).is_finite());
            REQUIRE(d(u, v).hops() <= d(u, w).hops() + d(w, v).hops());
          }
        }
      }
    }
  }
}

TEST_CASE("leaf_count") {
  CHECK(leaf_count(family("path", {5})) == 2);
  CHECK(leaf_count(family("star", {4})) == 4);
  CHECK(leaf_count(family("cycle", {6})) == 0);
}

TEST_CASE("clique_number: examples") {
  CHECK(clique_number(family("complete", {5})).size == 5);
  CHECK(clique_number(family("birdcage", {4})).size == 4);
  CHECK(clique_number(family("cycle", {5})).size == 2);
}

TEST_CASE("clique_number agrees with subset enumeration on graphs up to 10 vertices") {
  std::vector<Graph> corpus = ts::small_connected_corpus(6);
  for (std::size_t n = 7; n <= 10; ++n)
    for (auto &g : ts::random_graphs(n, 40, 0.5, false, 100 + static_cast<std::uint32_t>(n))) corpus.push_back(std::move(g));
  for (const Graph &g : corpus) {
    const auto r = clique_number(g);
    REQUIRE(r.size == ts::exhaustive_clique(g));
    REQUIRE(r.witness.size() == r.size);
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      for (std::size_t j = i + 1; j < r.witness.size(); ++j) REQUIRE(g.adjacent(r.witness[i], r.witness[j]));
  }
}

TEST_CASE("girth") {
  CHECK(girth(family("cycle", {6})) == 6u);
  CHECK_FALSE(girth(family("path", {7})).has_value());
  CHECK(girth(family("petersen")) == 5u);
  for (auto &t : {"tree(\"5;0 1;1 2;1 3;3 4\")", "tree(\"1\")"}) CHECK_FALSE(girth(graph_from_expression(t)).has_value());
  CHECK_FALSE(girth(family("empty", {3})).has_value());
}

TEST_CASE("girth matches a brute-force shortest cycle search") {
  // Shortest cycle through edge uv = 1 + distance from u to v avoiding that edge.
  for (const Graph &g : ts::random_graphs(8, 80, 0.3, false, 21)) {
    std::optional<std::uint32_t> best;
    for (auto [u, v] : g.edges()) {
      std::vector<Edge> rest;
      for (auto e : g.edges())
        if (e != Edge{u, v}) rest.push_back(e);
      const auto fw = ts::floyd_warshall(Graph(g.order(), rest));
      if (fw[u][v] != ts::kInf) {
        const auto len = static_cast<std::uint32_t>(fw[u][v] + 1);
        if (!best || len < *best) best = len;
      }
    }
    REQUIRE(girth(g) == best);
  }
}

TEST_CASE("radius") {
  CHECK(radius(family("path", {5})) == 2);
  CHECK(radius(family("cycle", {8})) == 4);
  CHECK(radius(family("star", {6})) == 1);
  for (long long n = 3; n <= 20; ++n) CHECK(radius(family("cycle", {n})) == static_cast<std::uint32_t>(n / 2));
  CHECK_THROWS_AS(radius(family("empty", {2})), Error);
}

TEST_CASE("is_convex_subset") {
  const Graph p4 = family("path", {4});
  const auto dp = all_pairs_distances(p4);
  for (Vertex v = 0; v < 4; ++v) CHECK(is_convex_subset(p4, dp, VertexSet{v}));

  const Graph grid = graph_from_expression("cartesian(path(4),path(4))");
  const auto dg = all_pairs_distances(grid);
  CHECK(is_convex_subset(grid, dg, VertexSet{0, 1, 2, 3}));    // layer ^1P_4
  CHECK(is_convex_subset(grid, dg, VertexSet{1, 5, 9, 13}));   // layer P_4^2
  CHECK_FALSE(is_convex_subset(grid, dg, VertexSet{0, 5}));

  const Graph c6 = family("cycle", {6});
  CHECK_FALSE(is_convex_subset(c6, all_pairs_distances(c6), VertexSet{0, 3}));
}

TEST_CASE("infinite grid distance") {
  CHECK(infinite_grid_distance({0, 0}, {0, 0}) == 0);
  CHECK(infinite_grid_distance({0, 0}, {3, -2}) == 5);
  for (long long i = -3; i <= 3; ++i)
    for (long long j = -3; j <= 3; ++j) CHECK(infinite_grid_distance({i - 1, j}, {i + 1, j}) == 2);
}

TEST_CASE("labels: paths are 1-based, product pairs nest") {
  const Graph p = family("path", {3});
  CHECK(p.label(0) == "1");
  CHECK(p.label(2) == "3");
  const Graph g = graph_from_expression("cartesian(path(3),path(3))");
  CHECK(g.label(0) == "(1,1)");
  CHECK(g.label(5) == "(2,3)");
  const Graph plain = graph_from_expression("graph(\"3; 0 1; 1 2\")");
  CHECK_FALSE(plain.has_labels());
  CHECK(plain.label(2) == "2");
  CHECK(plain.symmetry_hints().empty());
}

TEST_CASE("test corpus has every connected graph up to isomorphism") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(ts::connected_graphs(n).size() == expected[n - 1]);
    for (const auto &edges : ts::connected_graphs(n)) REQUIRE(is_connected(Graph(n, edges)));
  }
}
