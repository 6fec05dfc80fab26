#include "mobgp/graph.hpp"

#include "mobgp/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace mobgp {

VertexLabel VertexLabel::make_atom(std::string name) {
  VertexLabel l;
  l.kind = Kind::atom;
  l.atom = std::move(name);
  return l;
}

VertexLabel VertexLabel::make_pair(VertexLabel g, VertexLabel h) {
  VertexLabel l;
  l.kind = Kind::pair;
  l.parts = {std::move(g), std::move(h)};
  return l;
}

std::string VertexLabel::to_string() const {
  switch (kind) {
    case Kind::atom:
      return atom;
    case Kind::pair:
      return "(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
    case Kind::corona_center:
      return parts[0].to_string();
    case Kind::corona_satellite:
      // i' for a single-vertex H, i'[h] otherwise
      if (parts.size() == 1) return parts[0].to_string() + "'";
      return parts[0].to_string() + "'[" + parts[1].to_string() + "]";
    case Kind::join_left:
      return "l:" + parts[0].to_string();
    case Kind::join_right:
      return "r:" + parts[0].to_string();
  }
  return atom;
}

Graph::Graph(std::size_t order, std::span<const Edge> edges)
    : adjacency_(order), words_per_row_((order + 63) / 64) {
  matrix_.assign(order * words_per_row_, 0);
  for (const auto &[u, v] : edges) {
    if (u >= order || v >= order) {
      throw Error(ErrorCode::malformed_input,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order " +
                      std::to_string(order));
    }
    if (u == v) throw Error(ErrorCode::malformed_input, "loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw Error(ErrorCode::malformed_input,
                  "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    matrix_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
    matrix_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
  }
  for (auto &nb : adjacency_) std::sort(nb.begin(), nb.end());
  expression_ = edge_list_expression(order, edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return (matrix_[u * words_per_row_ + v / 64] >> (v % 64)) & 1u;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[v].to_string();
}

void Graph::set_labels(std::vector<VertexLabel> labels) {
  if (labels.size() != order()) {
    throw Error(ErrorCode::invalid_argument, "label count does not match graph order");
  }
  std::vector<std::string> text;
  text.reserve(labels.size());
  for (const auto &l : labels) text.push_back(l.to_string());
  std::sort(text.begin(), text.end());
  if (std::adjacent_find(text.begin(), text.end()) != text.end()) {
    throw Error(ErrorCode::invalid_argument, "vertex labels are not distinct");
  }
  labels_ = std::move(labels);
}

bool Graph::is_automorphism(const Permutation &perm) const {
  if (perm.size() != order()) return false;
  std::vector<char> seen(order(), 0);
  for (Vertex image : perm) {
    if (image >= order() || seen[image]) return false;
    seen[image] = 1;
  }
  for (Vertex u = 0; u < order(); ++u) {
    if (adjacency_[perm[u]].size() != adjacency_[u].size()) return false;
    for (Vertex v : adjacency_[u])
      if (!adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

void Graph::add_symmetry_hint(Permutation perm) {
  if (!is_automorphism(perm)) {
    throw Error(ErrorCode::invalid_argument, "symmetry hint is not an automorphism");
  }
  hints_.push_back(std::move(perm));
}

bool Graph::same_structure(const Graph &other) const {
  return order() == other.order() && adjacency_ == other.adjacency_;
}

bool is_connected(const Graph &g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.order();
}

std::string edge_list_expression(std::size_t order, std::span<const Edge> edges, bool as_tree) {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << (as_tree ? "tree(\"" : "graph(\"") << order;
  for (auto [u, v] : sorted) os << ';' << u << ' ' << v;
  os << "\")";
  return os.str();
}

namespace {

bool next_data_line(std::istream &in, std::string &line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream &in) {
  std::string line;
  if (!next_data_line(in, line)) throw Error(ErrorCode::malformed_input, "edge list: missing header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::malformed_input, "edge list: header must be \"n m\"");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line)) {
      throw Error(ErrorCode::malformed_input, "edge list: expected " + std::to_string(m) + " edges, got " +
                                                  std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw Error(ErrorCode::malformed_input, "edge list: bad edge line \"" + line + "\"");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return graph_from_edges(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph graph_from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order, edges);
  g.set_expression(edge_list_expression(order, edges));
  return g;
}

Graph tree_from_edges(std::size_t order, std::span<const Edge> edges) {
  if (order == 0 || edges.size() + 1 != order) {
    throw Error(ErrorCode::malformed_input, "tree: a tree on n vertices has n-1 edges");
  }
  Graph g(order, edges);
  if (!is_connected(g)) throw Error(ErrorCode::malformed_input, "tree: edge list is not connected");
  g.set_expression(edge_list_expression(order, edges, true));
  return g;
}

}  // namespace mobgp
