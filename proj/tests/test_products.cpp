#include "doctest.h"
#include "support.hpp"

#include "mobgp/distance.hpp"
#include "mobgp/error.hpp"
#include "mobgp/expr.hpp"
#include "mobgp/products.hpp"
#include "mobgp/structure.hpp"

using namespace mobgp;
namespace ts = testing_support;

namespace {

Graph family(const std::string &name, std::vector<long long> params = {}) { return build_graph(name, params); }

std::vector<Graph> small_factors() {
  std::vector<Graph> out;
  for (long long n = 1; n <= 4; ++n) out.push_back(family("path", {n}));
  for (long long n = 3; n <= 6; ++n) out.push_back(family("cycle", {n}));
  out.push_back(family("complete", {3}));
  out.push_back(family("star", {3}));
  out.push_back(family("complete_minus_edge", {4}));
  out.push_back(family("empty", {2}));
  return out;
}

}  // namespace

TEST_CASE("cartesian(path(2),path(2)) is the 4-cycle") {
  const Graph g = cartesian_product(family("path", {2}), family("path", {2}));
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
  CHECK(girth(g) == 4u);
}

TEST_CASE("K7 x K5 has 35 vertices of degree 10") {
  const Graph g = cartesian_product(family("complete", {7}), family("complete", {5}));
  CHECK(g.order() == 35);
  for (Vertex v = 0; v < 35; ++v) CHECK(g.degree(v) == 10);
}

TEST_CASE("distance (1,1)-(3,4) in P5 x P5 is 5") {
  const Graph g = cartesian_product(family("path", {5}), family("path", {5}));
  const auto d = all_pairs_distances(g);
  CHECK(d(product_vertex(5, 0, 0), product_vertex(5, 2, 3)).hops() == 5);
}

TEST_CASE("Cartesian distance additivity for factor orders up to 6") {
  const auto factors = small_factors();
  for (const Graph &g : factors)
    for (const Graph &h : factors) {
      const Graph p = cartesian_product(g, h);
      const auto dp = all_pairs_distances(p);
      const auto dg = ts::floyd_warshall(g);
      const auto dh = ts::floyd_warshall(h);
      const std::size_t nh = h.order();
      for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b)
          for (Vertex c = 0; c < g.order(); ++c)
            for (Vertex e = 0; e < h.order(); ++e) {
              const auto dpv = dp(product_vertex(nh, a, b), product_vertex(nh, c, e));
              if (dg[a][c] == ts::kInf || dh[b][e] == ts::kInf) {
                REQUIRE_FALSE(dpv.is_finite());
              } else {
                REQUIRE(dpv.hops() == static_cast<std::uint32_t>(dg[a][c] + dh[b][e]));
              }
            }
    }
}

TEST_CASE("layers partition the product and are convex") {
  const auto factors = small_factors();
  for (const Graph &g : factors)
    for (const Graph &h : factors) {
      if (!is_connected(g) || !is_connected(h)) continue;
      const Graph p = cartesian_product(g, h);
      const auto d = all_pairs_distances(p);
      std::vector<int> seen_left(p.order(), 0), seen_right(p.order(), 0);
      for (Vertex b = 0; b < h.order(); ++b) {
        const auto layer = layer_vertices(p, FactorSide::left, b);
        REQUIRE(layer.size() == g.order());
        REQUIRE(is_convex_subset(p, d, layer));
        for (Vertex v : layer) ++seen_left[v];
      }
      for (Vertex a = 0; a < g.order(); ++a) {
        const auto layer = layer_vertices(p, FactorSide::right, a);
        REQUIRE(layer.size() == h.order());
        REQUIRE(is_convex_subset(p, d, layer));
        for (Vertex v : layer) ++seen_right[v];
      }
      for (Vertex v = 0; v < p.order(); ++v) {
        REQUIRE(seen_left[v] == 1);
        REQUIRE(seen_right[v] == 1);
      }
    }
}

TEST_CASE("layer examples and errors") {
  const Graph p = cartesian_product(family("path", {3}), family("path", {4}));
  CHECK(layer_vertices(p, FactorSide::left, 1).size() == 3);
  CHECK(layer_vertices(p, FactorSide::left, 1) == VertexSet{1, 5, 9});
  CHECK_THROWS_AS(layer_vertices(family("cycle", {5}), FactorSide::left, 0), Error);
  CHECK_THROWS_AS(layer_vertices(corona_product(family("cycle", {3}), family("complete", {1})), FactorSide::left, 0),
                  Error);
}

TEST_CASE("corona examples") {
  CHECK(corona_product(family("complete", {2}), family("cycle", {4})).order() == 10);
  const Graph c = corona_product(family("cycle", {3}), family("complete", {1}));
  CHECK(c.order() == 6);
  CHECK(leaf_count(c) == 3);
  CHECK(c.adjacent(0, 3));
  CHECK(c.adjacent(2, 5));
}

TEST_CASE("corona order is n(G)(1+n(H)) and copies are isometric") {
  const auto factors = small_factors();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if ((i * 7 + j) % 3 != 0) continue;  // a spread of about 40 pairs
      ++pairs;
      const Graph &g = factors[i];
      const Graph &h = factors[j];
      const Graph c = corona_product(g, h);
      REQUIRE(c.order() == g.order() * (1 + h.order()));
      const auto dc = all_pairs_distances(c);
      const std::size_t ng = g.order(), nh = h.order();
      for (Vertex centre = 0; centre < ng; ++centre) {
        // H̃ = copy plus its centre: the cone over H.
        std::vector<Vertex> ids{centre};
        for (Vertex y = 0; y < nh; ++y) ids.push_back(static_cast<Vertex>(ng + centre * nh + y));
        std::vector<Edge> cone;
        for (std::size_t a = 0; a < ids.size(); ++a)
          for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (c.adjacent(ids[a], ids[b])) cone.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        const auto fw = ts::floyd_warshall(Graph(ids.size(), cone));
        for (std::size_t a = 0; a < ids.size(); ++a)
          for (std::size_t b = 0; b < ids.size(); ++b) REQUIRE(dc(ids[a], ids[b]).hops() == static_cast<std::uint32_t>(fw[a][b]));
      }
    }
  CHECK(pairs >= 20);
}

TEST_CASE("join examples and diameter") {
  const Graph w = join(family("empty", {1}), family("cycle", {4}));
  CHECK(w.order() == 5);
  CHECK(w.degree(0) == 4);
  CHECK(join(family("complete_minus_edge", {4}), family("complete_minus_edge", {3})).order() == 7);
  const auto factors = small_factors();
  for (const Graph &g : factors)
    for (const Graph &h : factors) {
      const Graph j = join(g, h);
      const auto d = all_pairs_distances(j);
      REQUIRE(d.connected());
      REQUIRE(d.max_finite_distance() <= 2);
      for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b) REQUIRE(d(a, static_cast<Vertex>(g.order() + b)).hops() == 1);
    }
}

TEST_CASE("product labels biject with ids") {
  for (const char *expr : {"cartesian(cycle(4),path(3))", "corona(cycle(3),complete(2))", "join(path(3),cycle(4))",
                           "cartesian(corona(path(2),complete(1)),complete(2))"}) {
    const Graph g = graph_from_expression(expr);
    std::set<std::string> names;
    for (Vertex v = 0; v < g.order(); ++v) names.insert(g.label(v));
    CHECK(names.size() == g.order());
  }
}
