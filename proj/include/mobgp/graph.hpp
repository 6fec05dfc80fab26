#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mobgp {

using Vertex = std::uint32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

// A vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

// Structured vertex name. Atoms come from the family that built the graph
// (e.g. "3" for vertex 3 of P_n, "u2" in a birdcage); product
// kinds nest the factor labels.
struct VertexLabel {
  enum class Kind { atom, pair, corona_center, corona_satellite, join_left, join_right };

  Kind kind = Kind::atom;
  std::string atom;
  std::vector<VertexLabel> parts;

  static VertexLabel make_atom(std::string name);
  static VertexLabel make_pair(VertexLabel g, VertexLabel h);

  std::string to_string() const;

  friend bool operator==(const VertexLabel &, const VertexLabel &) = default;
};

enum class ProductKind { cartesian, corona, join };

struct ProductInfo {
  ProductKind kind;
  std::size_t left_order;   // n(G)
  std::size_t right_order;  // n(H)
};

// Finite simple undirected graph. Built once, then only read.
class Graph {
 public:
  Graph() = default;

  // Throws Error(malformed_input) on loops, duplicate edges or ids >= order.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<VertexLabel> &labels() const noexcept { return labels_; }
  // Label text, or the decimal id when the graph carries no labels.
  std::string label(Vertex v) const;
  void set_labels(std::vector<VertexLabel> labels);

  const std::vector<Permutation> &symmetry_hints() const noexcept { return hints_; }
  // Throws if `perm` is not an automorphism.
  void add_symmetry_hint(Permutation perm);
  bool is_automorphism(const Permutation &perm) const;

  // Canonical graph-expression text that rebuilds this graph.
  const std::string &expression() const noexcept { return expression_; }
  void set_expression(std::string expr) { expression_ = std::move(expr); }

  const std::optional<ProductInfo> &product() const noexcept { return product_; }
  void set_product(ProductInfo info) { product_ = info; }

  bool same_structure(const Graph &other) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> matrix_;  // row-major bit matrix
  std::size_t words_per_row_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexLabel> labels_;
  std::vector<Permutation> hints_;
  std::string expression_;
  std::optional<ProductInfo> product_;
};

bool is_connected(const Graph &g);

// Expression text `graph("n; u v; u v ...")` for an arbitrary edge set.
std::string edge_list_expression(std::size_t order, std::span<const Edge> edges, bool as_tree = false);

// Edge-list text format: "n m" header, then m lines "u v" (0-based).
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);

// Named families. Vertex numbering per family:
//   path(n)                 ids 0..n-1 along the path, labels "1".."n"
//   cycle(n)                ids 0..n-1 around the cycle, labels "0".."n-1"
//   complete(n)             ids 0..n-1, labels "1".."n"
//   complete_bipartite(a,b) ids 0..a-1 then a..a+b-1, labels "a1".., "b1"..
//   star(k)                 id 0 is the centre, ids 1..k the leaves
//   empty(n)                ids 0..n-1
//   petersen()              outer cycle 0..4, spokes i~i+5, inner 5+i ~ 5+(i+2)%5
//   complete_minus_edge(n)  K_n without the edge {0,1}
//   complete_plus_leaf(m)   K_m on 0..m-1 plus leaf m attached to 0
//   birdcage(n)             u_i = i-1, v_i = n+i-1, z = 2n
Graph build_graph(const std::string &family, std::span<const long long> params);

// Edge lists given inline (`graph(...)` / `tree(...)` atoms).
Graph graph_from_edges(std::size_t order, std::span<const Edge> edges);
Graph tree_from_edges(std::size_t order, std::span<const Edge> edges);

}  // namespace mobgp
