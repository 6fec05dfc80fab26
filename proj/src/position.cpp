#include "mobgp/position.hpp"

#include "mobgp/error.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace mobgp {

bool lies_on_geodesic(const DistanceOracle &d, Vertex u, Vertex w, Vertex v) { return d.between(u, w, v); }

bool is_general_position(const DistanceOracle &d, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k == i || k == j) continue;
        if (d.between(s[i], s[k], s[j])) return false;
      }
  return true;
}

bool extends_general_position(const DistanceOracle &d, std::span<const Vertex> s, Vertex v) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex a = s[i];
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Vertex b = s[j];
      if (d.between(a, v, b) || d.between(v, a, b) || d.between(v, b, a)) return false;
    }
  }
  return true;
}

bool is_x_positionable(const DistanceOracle &d, std::span<const Vertex> x, Vertex u, Vertex v) {
  for (Vertex w : x) {
    if (w == u || w == v) continue;
    if (d.between(u, w, v)) return false;
  }
  return true;
}

bool is_outer_general_position(const DistanceOracle &d, std::span<const Vertex> x) {
  if (!is_general_position(d, x)) return false;
  for (Vertex u : x)
    for (Vertex v = 0; v < d.order(); ++v)
      if (v != u && !is_x_positionable(d, x, u, v)) return false;
  return true;
}

bool is_mmd_pair(const Graph &g, const DistanceOracle &d, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::invalid_argument, "is_mmd_pair: vertices must be distinct");
  if (!d.reachable(u, v)) throw Error(ErrorCode::disconnected, "is_mmd_pair: vertices in different components");
  const std::uint32_t duv = d(u, v).hops();
  for (Vertex w : g.neighbors(u))
    if (d(w, v).hops() > duv) return false;
  for (Vertex w : g.neighbors(v))
    if (d(u, w).hops() > duv) return false;
  return true;
}

bool is_maximal_gp(const DistanceOracle &d, std::span<const Vertex> s) {
  if (!is_general_position(d, s)) throw Error(ErrorCode::precondition, "is_maximal_gp: set is not in general position");
  std::vector<char> in(d.order(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v = 0; v < d.order(); ++v)
    if (!in[v] && extends_general_position(d, s, v)) return false;
  return true;
}

namespace {

// Given that s+{v} and s+{c} are general position sets, decide s+{v,c}.
struct GeneralPositionRule {
  const DistanceOracle &d;

  bool compatible(std::span<const Vertex> s, Vertex v, Vertex c) const {
    for (Vertex a : s)
      if (d.between(a, v, c) || d.between(v, a, c) || d.between(a, c, v)) return false;
    return true;
  }
};

// Same contract for outer general position sets: only the obstructions
// that involve both v and c are new.
struct OuterPositionRule {
  const DistanceOracle &d;

  bool compatible(std::span<const Vertex>, Vertex v, Vertex c) const {
    for (Vertex x = 0; x < d.order(); ++x) {
      if (x != v && x != c && (d.between(v, c, x) || d.between(c, v, x))) return false;
    }
    return true;
  }
};

template <class Rule>
class BranchSearch {
 public:
  BranchSearch(const Rule &rule, std::size_t n, const std::atomic<std::size_t> &global_best)
      : rule_(rule), n_(n), global_best_(global_best) {}

  // Best set whose smallest vertex is `first`.
  void run(Vertex first) {
    std::vector<Vertex> candidates;
    candidates.reserve(n_);
    current_.assign(1, first);
    for (Vertex c = first + 1; c < n_; ++c)
      if (rule_.compatible({}, first, c)) candidates.push_back(c);
    ++explored_;
    if (best_.empty()) best_ = current_;
    search(candidates);
  }

  const VertexSet &best() const { return best_; }
  std::uint64_t explored() const { return explored_; }

 private:
  bool pruned(std::size_t bound) const {
    // Ties with other branches are kept so the lexicographic minimum is
    // decided by the reduction, independent of thread timing.
    return bound <= best_.size() || bound < global_best_.load(std::memory_order_relaxed);
  }

  void search(const std::vector<Vertex> &candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (pruned(current_.size() + candidates.size() - i)) return;
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      next.reserve(candidates.size() - i);
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (rule_.compatible(current_, v, candidates[j])) next.push_back(candidates[j]);
      current_.push_back(v);
      ++explored_;
      if (current_.size() > best_.size()) best_ = current_;
      search(next);
      current_.pop_back();
    }
  }

  const Rule &rule_;
  std::size_t n_;
  const std::atomic<std::size_t> &global_best_;
  std::vector<Vertex> current_;
  VertexSet best_;
  std::uint64_t explored_ = 0;
};

template <class Rule>
PositionReport parallel_search(const Rule &rule, std::size_t n) {
  PositionReport report;
  if (n == 0) return report;
  std::vector<VertexSet> branch_best(n);
  std::vector<std::uint64_t> branch_explored(n, 0);
  std::atomic<std::size_t> global_best{0};
  const auto branches = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long b = 0; b < branches; ++b) {
    // A branch rooted at b holds at most n - b vertices.
    if (static_cast<std::size_t>(n - b) < global_best.load(std::memory_order_relaxed)) continue;
    BranchSearch<Rule> search(rule, n, global_best);
    search.run(static_cast<Vertex>(b));
    branch_best[b] = search.best();
    branch_explored[b] = search.explored();
    std::size_t seen = global_best.load();
    while (search.best().size() > seen && !global_best.compare_exchange_weak(seen, search.best().size())) {
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    report.explored += branch_explored[b];
    if (branch_best[b].size() > report.witness.size()) report.witness = branch_best[b];
  }
  report.value = report.witness.size();
  return report;
}

}  // namespace

PositionReport gp_number(const Graph &g, const DistanceOracle &d) {
  return parallel_search(GeneralPositionRule{d}, g.order());
}

PositionReport gp_number(const Graph &g) { return gp_number(g, all_pairs_distances(g)); }

PositionReport gpo_number(const Graph &g, const DistanceOracle &d) {
  return parallel_search(OuterPositionRule{d}, g.order());
}

PositionReport gpo_number(const Graph &g) { return gpo_number(g, all_pairs_distances(g)); }

GpSetStream::GpSetStream(const DistanceOracle &d, std::size_t k) : d_(&d), k_(k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "enumerate_gp_sets: k must be at least 1");
  Frame root;
  root.candidates.resize(d.order());
  for (Vertex v = 0; v < d.order(); ++v) root.candidates[v] = v;
  frames_.push_back(std::move(root));
}

bool GpSetStream::next(VertexSet &out) {
  const GeneralPositionRule rule{*d_};
  // Invariant: frames_.size() == current_.size() + 1 while not exhausted.
  while (!frames_.empty()) {
    if (deadline_ && (++steps_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      throw TimeLimitExceeded();
    }
    Frame &top = frames_.back();
    if (top.pos >= top.candidates.size() || current_.size() + (top.candidates.size() - top.pos) < k_) {
      frames_.pop_back();
      if (!current_.empty()) current_.pop_back();
      continue;
    }
    const Vertex v = top.candidates[top.pos++];
    if (current_.size() + 1 == k_) {
      out = current_;
      out.push_back(v);
      return true;
    }
    Frame child;
    for (std::size_t j = top.pos; j < top.candidates.size(); ++j)
      if (rule.compatible(current_, v, top.candidates[j])) child.candidates.push_back(top.candidates[j]);
    current_.push_back(v);
    frames_.push_back(std::move(child));
  }
  return false;
}

GpSetStream enumerate_gp_sets(const DistanceOracle &d, std::size_t k) { return GpSetStream(d, k); }

}  // namespace mobgp
