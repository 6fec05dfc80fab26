#include "mobgp/error.hpp"
#include "mobgp/graph.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace mobgp {

namespace {

constexpr long long kMaxOrder = 1 << 16;

std::string family_expression(const std::string &family, std::span<const long long> params) {
  if (params.empty()) return family;
  std::ostringstream os;
  os << family << '(';
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

void require_arity(const std::string &family, std::span<const long long> params, std::size_t arity) {
  if (params.size() != arity) {
    throw Error(ErrorCode::invalid_argument, family + " takes " + std::to_string(arity) + " parameter(s), got " +
                                                 std::to_string(params.size()));
  }
}

void require_range(const std::string &family, long long value, long long lo, long long hi = kMaxOrder) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::out_of_range, family + ": parameter " + std::to_string(value) + " outside [" +
                                             std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

std::vector<VertexLabel> numbered(std::size_t n, std::size_t first, const std::string &prefix = "") {
  std::vector<VertexLabel> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(VertexLabel::make_atom(prefix + std::to_string(first + i)));
  return out;
}

Permutation identity(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return p;
}

Permutation transposition(std::size_t n, Vertex a, Vertex b) {
  Permutation p = identity(n);
  std::swap(p[a], p[b]);
  return p;
}

// Adjacent transpositions (first, first+1), ..., (last-1, last) generate the
// symmetric group on [first, last].
void add_transpositions(Graph &g, Vertex first, Vertex last) {
  for (Vertex v = first; v < last; ++v) g.add_symmetry_hint(transposition(g.order(), v, v + 1));
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  Graph g(n, edges);
  g.set_labels(numbered(n, 1));
  if (n > 1) {
    Permutation rev(n);
    for (Vertex i = 0; i < n; ++i) rev[i] = static_cast<Vertex>(n - 1 - i);
    g.add_symmetry_hint(std::move(rev));
  }
  return g;
}

Graph make_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  Graph g(n, edges);
  g.set_labels(numbered(n, 0));
  Permutation rot(n), refl(n);
  for (Vertex i = 0; i < n; ++i) {
    rot[i] = static_cast<Vertex>((i + 1) % n);
    refl[i] = static_cast<Vertex>((n - i) % n);
  }
  g.add_symmetry_hint(std::move(rot));
  g.add_symmetry_hint(std::move(refl));
  return g;
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  Graph g(n, edges);
  g.set_labels(numbered(n, 1));
  if (n > 1) add_transpositions(g, 0, static_cast<Vertex>(n - 1));
  return g;
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
  Graph g(a + b, edges);
  auto labels = numbered(a, 1, "a");
  auto right = numbered(b, 1, "b");
  labels.insert(labels.end(), right.begin(), right.end());
  g.set_labels(std::move(labels));
  if (a > 1) add_transpositions(g, 0, static_cast<Vertex>(a - 1));
  if (b > 1) add_transpositions(g, static_cast<Vertex>(a), static_cast<Vertex>(a + b - 1));
  if (a == b) {
    Permutation swap_sides(a + b);
    for (Vertex i = 0; i < a; ++i) {
      swap_sides[i] = static_cast<Vertex>(a + i);
      swap_sides[a + i] = i;
    }
    g.add_symmetry_hint(std::move(swap_sides));
  }
  return g;
}

Graph make_star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.emplace_back(0, i);
  Graph g(k + 1, edges);
  g.set_labels(numbered(k + 1, 0));
  if (k > 1) add_transpositions(g, 1, static_cast<Vertex>(k));
  return g;
}

Graph make_empty(std::size_t n) {
  Graph g(n, std::span<const Edge>{});
  g.set_labels(numbered(n, 0));
  if (n > 1) add_transpositions(g, 0, static_cast<Vertex>(n - 1));
  return g;
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  Graph g(10, edges);
  auto labels = numbered(5, 0, "o");
  auto inner = numbered(5, 0, "i");
  labels.insert(labels.end(), inner.begin(), inner.end());
  g.set_labels(std::move(labels));
  Permutation rot(10), refl(10);
  for (Vertex i = 0; i < 5; ++i) {
    rot[i] = (i + 1) % 5;
    rot[5 + i] = 5 + (i + 1) % 5;
    refl[i] = (5 - i) % 5;
    refl[5 + i] = 5 + (5 - i) % 5;
  }
  g.add_symmetry_hint(std::move(rot));
  g.add_symmetry_hint(std::move(refl));
  return g;
}

Graph make_complete_minus_edge(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
  Graph g(n, edges);
  g.set_labels(numbered(n, 1));
  g.add_symmetry_hint(transposition(n, 0, 1));
  if (n > 3) add_transpositions(g, 2, static_cast<Vertex>(n - 1));
  return g;
}

Graph make_complete_plus_leaf(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  edges.emplace_back(0, static_cast<Vertex>(m));
  Graph g(m + 1, edges);
  auto labels = numbered(m, 1);
  labels.push_back(VertexLabel::make_atom("x"));
  g.set_labels(std::move(labels));
  if (m > 2) add_transpositions(g, 1, static_cast<Vertex>(m - 1));
  return g;
}

Graph make_birdcage(std::size_t n) {
  std::vector<Edge> edges;
  const auto z = static_cast<Vertex>(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    edges.emplace_back(i, static_cast<Vertex>(n + i));
    edges.emplace_back(static_cast<Vertex>(n + i), z);
  }
  Graph g(2 * n + 1, edges);
  auto labels = numbered(n, 1, "u");
  auto vs = numbered(n, 1, "v");
  labels.insert(labels.end(), vs.begin(), vs.end());
  labels.push_back(VertexLabel::make_atom("z"));
  g.set_labels(std::move(labels));
  for (Vertex i = 0; i + 1 < n; ++i) {
    Permutation p = transposition(2 * n + 1, i, i + 1);
    std::swap(p[n + i], p[n + i + 1]);
    g.add_symmetry_hint(std::move(p));
  }
  return g;
}

using Builder = std::function<Graph(const std::string &, std::span<const long long>)>;

const std::map<std::string, Builder> &registry() {
  static const std::map<std::string, Builder> table = {
      {"path",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 1);
         return make_path(p[0]);
       }},
      {"cycle",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 3);
         return make_cycle(p[0]);
       }},
      {"complete",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 1);
         return make_complete(p[0]);
       }},
      {"complete_bipartite",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 2);
         require_range(f, p[0], 1);
         require_range(f, p[1], 1);
         return make_complete_bipartite(p[0], p[1]);
       }},
      {"star",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 1);
         return make_star(p[0]);
       }},
      {"empty",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 1);
         return make_empty(p[0]);
       }},
      {"petersen",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 0);
         return make_petersen();
       }},
      {"complete_minus_edge",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 2);
         return make_complete_minus_edge(p[0]);
       }},
      {"complete_plus_leaf",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 2);
         return make_complete_plus_leaf(p[0]);
       }},
      {"birdcage",
       [](const std::string &f, std::span<const long long> p) {
         require_arity(f, p, 1);
         require_range(f, p[0], 2, kMaxOrder / 2);
         return make_birdcage(p[0]);
       }},
  };
  return table;
}

}  // namespace

Graph build_graph(const std::string &family, std::span<const long long> params) {
  const auto &table = registry();
  auto it = table.find(family);
  if (it == table.end()) throw Error(ErrorCode::unknown_family, "unknown graph family \"" + family + "\"");
  Graph g = it->second(family, params);
  g.set_expression(family_expression(family, params));
  return g;
}

}  // namespace mobgp
