#pragma once

#include "mobgp/graph.hpp"
#include "mobgp/mobility.hpp"

#include <string>
#include <vector>

namespace mobgp {

struct FamilySpec {
  std::string family;
  std::vector<long long> params;
};

// Families and their graphs (vertex ids follow the product conventions):
//   hamming(n,m)               n >= m >= 3   cartesian(complete(n),complete(m))
//   star_square(k)             k >= 2        cartesian(star(k),star(k))
//   grid(n,m)                  n,m >= 3      cartesian(path(n),path(m))
//   prism_cycle(n)             n >= 5        cartesian(cycle(n),complete(2))
//   c4_cylinder()                            cartesian(cycle(4),path(3))
//   cylinder5(r)               r = 9, r >= 11 cartesian(cycle(r),path(5))
//   corona_cycle(n)            n >= 3        corona(cycle(n),complete(1))
//   birdcage_join(n)           n >= 2        join(birdcage(n),complete(1))
//   clique_minus_edge_join(r,s) r,s >= 3     join(complete_minus_edge(r),complete_minus_edge(s))
// Throws Error(unknown_family / invalid_argument / out_of_range).
Schedule generate_schedule(const FamilySpec &spec);

const std::vector<std::string> &schedule_families();

// The starting set used by cylinder5(9) puts its layer-3 robot at
// (third_offset, 3). Exposed so both readings of that offset can be checked.
Schedule cylinder5_nine(long long third_offset);

// Out-and-back depth-first walk from `start` over the vertices reachable
// inside `allowed` (all vertices when empty), neighbours in ascending order.
std::vector<Move> dfs_tour(const Graph &g, Vertex start, const std::vector<char> &allowed = {});

// Schedule on g□h: `base` replayed in the layer G^0, and every vertex g of
// that layer, on its first visit, followed by a tour of ^gH and back.
Schedule factor_mob_schedule(const Graph &g, const Graph &h, const Schedule &base);

// Schedule on g□h with |x| robots starting at x × {0}, for an outer general
// position set x of g.
Schedule gpo_factor_schedule(const Graph &g, const Graph &h, const VertexSet &x);

// Schedule on g□h from a schedule on g□P_r replayed along the geodesic q of
// h (q[j] plays the role of path vertex j). The robots then slide window by
// window along non-backtracking r-vertex walks of h, replaying the base
// schedule alternately backwards and forwards in each window that holds an
// unvisited layer. Requires girth(h) >= 2r, and throws Error(precondition)
// when sliding cannot reach every vertex of h (radius(h) >= r-1 is enough
// for that, but paths such as P_7 with r = 5 also work).
Schedule lift_schedule(const Graph &g, const Graph &h, std::size_t r, const Schedule &base,
                       const std::vector<Vertex> &q);

// Schedule on join(g,h) with min(ω(g),ω(h)) + 1 robots. The side with the
// smaller clique number starts on a maximum clique.
Schedule join_lower_bound_schedule(const Graph &g, const Graph &h);

// Corona lower bounds on g⊙h. `cone_base` is a complete schedule on
// join(h, complete(1)) replayed inside the first satellite copy with the
// cone apex at centre 0; `center_base` is a complete schedule on g replayed
// on the centres.
Schedule corona_cone_schedule(const Graph &g, const Graph &h, const Schedule &cone_base);
Schedule corona_center_schedule(const Graph &g, const Graph &h, const Schedule &center_base);

}  // namespace mobgp
