#pragma once

#include "mobgp/graph.hpp"

namespace mobgp {

// G□H. Vertex (g,h) has id g*n(H) + h and label "(g,h)". Symmetry hints
// are the factor hints acting on one coordinate.
Graph cartesian_product(const Graph &g, const Graph &h);

// G⊙H. Centres keep their G ids 0..n(G)-1; copy H^i (attached to centre i)
// occupies ids n(G) + i*n(H) .. n(G) + (i+1)*n(H) - 1.
Graph corona_product(const Graph &g, const Graph &h);

// G∨H. G's vertices come first (ids 0..n(G)-1), then H's.
Graph join(const Graph &g, const Graph &h);

enum class FactorSide {
  left,   // G-layer G^h: anchor is a vertex of H
  right,  // H-layer ^gH: anchor is a vertex of G
};

// Vertex ids of a layer of a Cartesian product, ascending.
VertexSet layer_vertices(const Graph &p, FactorSide side, Vertex anchor);

// Flattened id helpers for Cartesian products.
inline Vertex product_vertex(std::size_t right_order, Vertex g, Vertex h) {
  return static_cast<Vertex>(g * right_order + h);
}

}  // namespace mobgp
