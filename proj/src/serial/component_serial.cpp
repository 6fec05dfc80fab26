#include "mobgp/error.hpp"
#include "mobgp/mobility.hpp"
#include "mobgp/position.hpp"

#include <queue>
#include <set>

namespace mobgp::serial {

// Textbook BFS over Configuration values using the public legality test.
ComponentReport configuration_component(const Graph &g, const DistanceOracle &d, const Configuration &start) {
  if (!is_general_position(d, start.vertices())) {
    throw Error(ErrorCode::precondition, "configuration_component: configuration is not in general position");
  }
  std::set<Configuration> seen{start};
  std::queue<Configuration> queue;
  queue.push(start);
  std::set<Vertex> covered(start.vertices().begin(), start.vertices().end());
  while (!queue.empty()) {
    Configuration c = queue.front();
    queue.pop();
    for (Vertex u : c.vertices()) {
      for (Vertex v : g.neighbors(u)) {
        const Move m{u, v};
        if (!is_legal_move(d, c, m)) continue;
        Configuration next = c.after(m);
        if (seen.insert(next).second) {
          covered.insert(v);
          queue.push(std::move(next));
        }
      }
    }
  }
  return {seen.size(), VertexSet(covered.begin(), covered.end())};
}

}  // namespace mobgp::serial
