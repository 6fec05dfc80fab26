#include "mobgp/expr.hpp"

#include "mobgp/error.hpp"
#include "mobgp/products.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mobgp {

namespace {

constexpr std::array<std::string_view, 3> kProducts = {"cartesian", "corona", "join"};
constexpr std::array<std::string_view, 10> kFamilies = {
    "path", "cycle", "complete", "complete_bipartite", "star", "empty", "petersen",
    "complete_minus_edge", "complete_plus_leaf", "birdcage"};

bool is_one_of(std::string_view name, std::span<const std::string_view> names) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"end of input"}, "unexpected trailing text");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string &detail) {
    throw ParseError(pos_, std::move(expected), detail);
  }

  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected, const std::string &detail) {
    throw ParseError(at, std::move(expected), detail);
  }

  std::string describe_here() const {
    if (pos_ >= src_.size()) return "unexpected end of input";
    return std::string("unexpected '") + src_[pos_] + "'";
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string(1, c)}, describe_here());
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::islower(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
            (pos_ > start && std::isdigit(static_cast<unsigned char>(src_[pos_]))))) {
      ++pos_;
    }
    if (pos_ == start) fail({"constructor name"}, describe_here());
    return std::string(src_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_ws();
    const char *first = src_.data() + pos_;
    const char *last = src_.data() + src_.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail({"integer"}, "integer out of range");
    if (ec != std::errc()) fail({"integer"}, describe_here());
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  GraphExpr expr() {
    skip_ws();
    const std::size_t name_at = pos_;
    GraphExpr e;
    e.name = identifier();
    if (is_one_of(e.name, kProducts)) {
      e.kind = GraphExpr::Kind::product;
      expect('(');
      e.children.push_back(expr());
      while (!peek(')')) {
        if (!peek(',')) fail({")", ","}, describe_here());
        ++pos_;
        e.children.push_back(expr());
      }
      ++pos_;
      if (e.children.size() != 2) {
        fail_at(name_at, {}, e.name + " takes 2 arguments, got " + std::to_string(e.children.size()));
      }
    } else if (e.name == "graph" || e.name == "tree") {
      e.kind = GraphExpr::Kind::edge_list;
      expect('(');
      edge_text(e);
      expect(')');
    } else if (is_one_of(e.name, kFamilies)) {
      e.kind = GraphExpr::Kind::family;
      if (peek('(')) {
        ++pos_;
        if (!peek(')')) {
          e.params.push_back(integer());
          while (!peek(')')) {
            if (!peek(',')) fail({")", ","}, describe_here());
            ++pos_;
            e.params.push_back(integer());
          }
        }
        ++pos_;
      }
    } else {
      fail_at(name_at, {}, "unknown constructor \"" + e.name + "\"");
    }
    return e;
  }

  // '"' n { ";" u v } '"'
  void edge_text(GraphExpr &e) {
    if (!peek('"')) fail({"\""}, describe_here());
    ++pos_;
    const long long n = integer();
    if (n < 0) fail_at(pos_, {}, "vertex count must be non-negative");
    e.order = static_cast<std::size_t>(n);
    while (true) {
      if (peek('"')) {
        ++pos_;
        break;
      }
      if (!peek(';')) fail({";", "\""}, describe_here());
      ++pos_;
      if (peek(';') || peek('"')) continue;
      const std::size_t edge_at = pos_;
      const long long u = integer();
      const long long v = integer();
      if (u < 0 || v < 0 || u >= n || v >= n) fail_at(edge_at, {}, "edge endpoint out of range");
      e.edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
    }
    std::sort(e.edges.begin(), e.edges.end());
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GraphExpr::to_string() const {
  switch (kind) {
    case Kind::family: {
      if (params.empty()) return name;
      std::ostringstream os;
      os << name << '(';
      for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
      os << ')';
      return os.str();
    }
    case Kind::edge_list: return edge_list_expression(order, edges, name == "tree");
    case Kind::product: return name + "(" + children[0].to_string() + "," + children[1].to_string() + ")";
  }
  return name;
}

GraphExpr parse_graph_expr(std::string_view source) { return Parser(source).parse(); }

Graph build(const GraphExpr &expr) {
  switch (expr.kind) {
    case GraphExpr::Kind::family: return build_graph(expr.name, expr.params);
    case GraphExpr::Kind::edge_list:
      return expr.name == "tree" ? tree_from_edges(expr.order, expr.edges) : graph_from_edges(expr.order, expr.edges);
    case GraphExpr::Kind::product: {
      const Graph left = build(expr.children[0]);
      const Graph right = build(expr.children[1]);
      if (expr.name == "cartesian") return cartesian_product(left, right);
      if (expr.name == "corona") return corona_product(left, right);
      return join(left, right);
    }
  }
  throw Error(ErrorCode::internal, "build: unknown expression kind");
}

Graph graph_from_expression(std::string_view source) { return build(parse_graph_expr(source)); }

}  // namespace mobgp
