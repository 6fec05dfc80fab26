#include "mobgp/distance.hpp"

#include "mobgp/error.hpp"

#include <algorithm>
#include <limits>

namespace mobgp {

namespace {

constexpr std::uint16_t kRawUnreachable = 0xFFFF;

void bfs_row(const Graph &g, Vertex source, std::uint16_t *row, std::vector<Vertex> &queue) {
  const std::size_t n = g.order();
  std::fill(row, row + n, kRawUnreachable);
  queue.clear();
  row[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const std::uint16_t next = static_cast<std::uint16_t>(row[u] + 1);
    for (Vertex v : g.neighbors(u)) {
      if (row[v] == kRawUnreachable) {
        row[v] = next;
        queue.push_back(v);
      }
    }
  }
}

void check_order(const Graph &g) {
  if (g.order() >= kRawUnreachable) {
    throw Error(ErrorCode::out_of_range, "graph too large for the distance table");
  }
}

}  // namespace

std::uint32_t Distance::hops() const {
  if (!finite_) throw Error(ErrorCode::internal, "hops() on an unreachable distance");
  return hops_;
}

bool DistanceOracle::connected() const {
  return std::find(table_.begin(), table_.end(), kUnreachable) == table_.end();
}

std::uint32_t DistanceOracle::max_finite_distance() const {
  std::uint32_t best = 0;
  for (std::uint16_t raw : table_)
    if (raw != kUnreachable) best = std::max<std::uint32_t>(best, raw);
  return best;
}

DistanceOracle distances_from_rows(std::size_t n, std::vector<std::uint16_t> table) {
  DistanceOracle d;
  d.n_ = n;
  d.table_ = std::move(table);
  return d;
}

DistanceOracle all_pairs_distances(const Graph &g) {
  check_order(g);
  const std::size_t n = g.order();
  std::vector<std::uint16_t> table(n * n);
  const auto sources = static_cast<long long>(n);
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(static)
    for (long long s = 0; s < sources; ++s) {
      bfs_row(g, static_cast<Vertex>(s), table.data() + s * n, queue);
    }
  }
  return distances_from_rows(n, std::move(table));
}

namespace serial {

DistanceOracle all_pairs_distances(const Graph &g) {
  check_order(g);
  const std::size_t n = g.order();
  std::vector<std::uint16_t> table(n * n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) bfs_row(g, s, table.data() + s * n, queue);
  return distances_from_rows(n, std::move(table));
}

}  // namespace serial

}  // namespace mobgp
