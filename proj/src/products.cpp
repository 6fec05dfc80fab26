#include "mobgp/products.hpp"

#include "mobgp/error.hpp"

namespace mobgp {

namespace {

VertexLabel label_or_id(const Graph &g, Vertex v) {
  if (g.has_labels()) return g.labels()[v];
  return VertexLabel::make_atom(std::to_string(v));
}

VertexLabel wrap(VertexLabel::Kind kind, std::vector<VertexLabel> parts) {
  VertexLabel l;
  l.kind = kind;
  l.parts = std::move(parts);
  return l;
}

void require_nonempty(const Graph &g, const char *what) {
  if (g.order() == 0) throw Error(ErrorCode::invalid_argument, std::string(what) + ": factor has no vertices");
}

}  // namespace

Graph cartesian_product(const Graph &g, const Graph &h) {
  require_nonempty(g, "cartesian");
  require_nonempty(h, "cartesian");
  const std::size_t ng = g.order(), nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.size() * nh + h.size() * ng);
  for (auto [a, b] : g.edges())
    for (Vertex y = 0; y < nh; ++y) edges.emplace_back(product_vertex(nh, a, y), product_vertex(nh, b, y));
  for (Vertex x = 0; x < ng; ++x)
    for (auto [a, b] : h.edges()) edges.emplace_back(product_vertex(nh, x, a), product_vertex(nh, x, b));

  Graph p(ng * nh, edges);
  std::vector<VertexLabel> labels;
  labels.reserve(ng * nh);
  for (Vertex x = 0; x < ng; ++x)
    for (Vertex y = 0; y < nh; ++y) labels.push_back(VertexLabel::make_pair(label_or_id(g, x), label_or_id(h, y)));
  p.set_labels(std::move(labels));

  for (const auto &perm : g.symmetry_hints()) {
    Permutation lifted(ng * nh);
    for (Vertex x = 0; x < ng; ++x)
      for (Vertex y = 0; y < nh; ++y) lifted[product_vertex(nh, x, y)] = product_vertex(nh, perm[x], y);
    p.add_symmetry_hint(std::move(lifted));
  }
  for (const auto &perm : h.symmetry_hints()) {
    Permutation lifted(ng * nh);
    for (Vertex x = 0; x < ng; ++x)
      for (Vertex y = 0; y < nh; ++y) lifted[product_vertex(nh, x, y)] = product_vertex(nh, x, perm[y]);
    p.add_symmetry_hint(std::move(lifted));
  }
  p.set_expression("cartesian(" + g.expression() + "," + h.expression() + ")");
  p.set_product({ProductKind::cartesian, ng, nh});
  return p;
}

Graph corona_product(const Graph &g, const Graph &h) {
  require_nonempty(g, "corona");
  const std::size_t ng = g.order(), nh = h.order();
  auto satellite = [&](Vertex i, Vertex y) { return static_cast<Vertex>(ng + i * nh + y); };
  std::vector<Edge> edges = g.edges();
  for (Vertex i = 0; i < ng; ++i) {
    for (Vertex y = 0; y < nh; ++y) edges.emplace_back(i, satellite(i, y));
    for (auto [a, b] : h.edges()) edges.emplace_back(satellite(i, a), satellite(i, b));
  }
  Graph p(ng * (1 + nh), edges);

  std::vector<VertexLabel> labels;
  labels.reserve(p.order());
  for (Vertex i = 0; i < ng; ++i) labels.push_back(wrap(VertexLabel::Kind::corona_center, {label_or_id(g, i)}));
  for (Vertex i = 0; i < ng; ++i)
    for (Vertex y = 0; y < nh; ++y) {
      if (nh == 1) {
        labels.push_back(wrap(VertexLabel::Kind::corona_satellite, {label_or_id(g, i)}));
      } else {
        labels.push_back(wrap(VertexLabel::Kind::corona_satellite, {label_or_id(g, i), label_or_id(h, y)}));
      }
    }
  // Nested coronas can produce textual collisions (centre "0'" vs satellite
  // "0'"); such graphs stay unlabelled.
  try {
    p.set_labels(std::move(labels));
  } catch (const Error &) {
  }

  for (const auto &perm : g.symmetry_hints()) {
    Permutation lifted(p.order());
    for (Vertex i = 0; i < ng; ++i) {
      lifted[i] = perm[i];
      for (Vertex y = 0; y < nh; ++y) lifted[satellite(i, y)] = satellite(perm[i], y);
    }
    p.add_symmetry_hint(std::move(lifted));
  }
  for (const auto &perm : h.symmetry_hints()) {
    for (Vertex i = 0; i < ng; ++i) {
      Permutation lifted(p.order());
      for (Vertex v = 0; v < p.order(); ++v) lifted[v] = v;
      for (Vertex y = 0; y < nh; ++y) lifted[satellite(i, y)] = satellite(i, perm[y]);
      p.add_symmetry_hint(std::move(lifted));
    }
  }
  p.set_expression("corona(" + g.expression() + "," + h.expression() + ")");
  p.set_product({ProductKind::corona, ng, nh});
  return p;
}

Graph join(const Graph &g, const Graph &h) {
  require_nonempty(g, "join");
  require_nonempty(h, "join");
  const std::size_t ng = g.order(), nh = h.order();
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(static_cast<Vertex>(ng + a), static_cast<Vertex>(ng + b));
  for (Vertex x = 0; x < ng; ++x)
    for (Vertex y = 0; y < nh; ++y) edges.emplace_back(x, static_cast<Vertex>(ng + y));
  Graph p(ng + nh, edges);

  std::vector<VertexLabel> labels;
  labels.reserve(p.order());
  for (Vertex x = 0; x < ng; ++x) labels.push_back(wrap(VertexLabel::Kind::join_left, {label_or_id(g, x)}));
  for (Vertex y = 0; y < nh; ++y) labels.push_back(wrap(VertexLabel::Kind::join_right, {label_or_id(h, y)}));
  p.set_labels(std::move(labels));

  for (const auto &perm : g.symmetry_hints()) {
    Permutation lifted(p.order());
    for (Vertex v = 0; v < p.order(); ++v) lifted[v] = v < ng ? perm[v] : v;
    p.add_symmetry_hint(std::move(lifted));
  }
  for (const auto &perm : h.symmetry_hints()) {
    Permutation lifted(p.order());
    for (Vertex v = 0; v < p.order(); ++v) lifted[v] = v < ng ? v : static_cast<Vertex>(ng + perm[v - ng]);
    p.add_symmetry_hint(std::move(lifted));
  }
  p.set_expression("join(" + g.expression() + "," + h.expression() + ")");
  p.set_product({ProductKind::join, ng, nh});
  return p;
}

VertexSet layer_vertices(const Graph &p, FactorSide side, Vertex anchor) {
  const auto &info = p.product();
  if (!info || info->kind != ProductKind::cartesian) {
    throw Error(ErrorCode::invalid_argument, "layer_vertices: graph is not a Cartesian product");
  }
  VertexSet out;
  if (side == FactorSide::left) {
    if (anchor >= info->right_order) throw Error(ErrorCode::out_of_range, "layer_vertices: anchor out of range");
    for (Vertex g = 0; g < info->left_order; ++g) out.push_back(product_vertex(info->right_order, g, anchor));
  } else {
    if (anchor >= info->left_order) throw Error(ErrorCode::out_of_range, "layer_vertices: anchor out of range");
    for (Vertex h = 0; h < info->right_order; ++h) out.push_back(product_vertex(info->right_order, anchor, h));
  }
  return out;
}

}  // namespace mobgp
