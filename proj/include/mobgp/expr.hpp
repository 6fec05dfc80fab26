#pragma once

#include "mobgp/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mobgp {

// Parsed graph expression.
//
//   expr    := atom | product
//   product := ("cartesian" | "corona" | "join") "(" expr "," expr ")"
//   atom    := name [ "(" int { "," int } ")" ]
//            | ("graph" | "tree") "(" '"' n { ";" u v } '"' ")"
//
// Whitespace between tokens is ignored.
struct GraphExpr {
  enum class Kind { family, edge_list, product };

  Kind kind = Kind::family;
  // Family name, "graph"/"tree", or the product name.
  std::string name;
  std::vector<long long> params;
  // Edge-list atoms: edges normalised to u < v and sorted.
  std::size_t order = 0;
  std::vector<Edge> edges;
  std::vector<GraphExpr> children;

  // Canonical text: no whitespace, parameterless families printed bare.
  std::string to_string() const;

  friend bool operator==(const GraphExpr &, const GraphExpr &) = default;
};

// Throws ParseError (byte offset and expected tokens) on syntax errors and
// unknown constructors. Family arity and ranges are checked by build().
GraphExpr parse_graph_expr(std::string_view source);

Graph build(const GraphExpr &expr);

// parse_graph_expr + build.
Graph graph_from_expression(std::string_view source);

}  // namespace mobgp
