#include "mobgp/position.hpp"

#include <functional>

namespace mobgp::serial {

namespace {

using Extends = std::function<bool(const std::vector<Vertex> &, Vertex)>;

void extend(std::size_t n, const Extends &extends, std::vector<Vertex> &current, Vertex start,
            PositionReport &report) {
  ++report.explored;
  if (current.size() > report.witness.size()) report.witness = current;
  for (Vertex v = start; v < n; ++v) {
    if (current.size() + (n - v) <= report.witness.size()) return;
    if (!extends(current, v)) continue;
    current.push_back(v);
    extend(n, extends, current, v + 1, report);
    current.pop_back();
  }
}

PositionReport run(std::size_t n, const Extends &extends) {
  PositionReport report;
  std::vector<Vertex> current;
  extend(n, extends, current, 0, report);
  report.value = report.witness.size();
  return report;
}

}  // namespace

PositionReport gp_number(const Graph &g, const DistanceOracle &d) {
  return run(g.order(), [&](const std::vector<Vertex> &s, Vertex v) { return extends_general_position(d, s, v); });
}

PositionReport gpo_number(const Graph &g, const DistanceOracle &d) {
  return run(g.order(), [&](const std::vector<Vertex> &s, Vertex v) {
    std::vector<Vertex> grown = s;
    grown.push_back(v);
    return is_outer_general_position(d, grown);
  });
}

}  // namespace mobgp::serial
