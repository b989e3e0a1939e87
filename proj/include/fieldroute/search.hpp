#pragma once

#include <limits>
#include <map>
#include <set>
#include <vector>

#include "fieldroute/graph.hpp"

namespace fieldroute {

// Placeholder for "no previous vertex" in walk states.
inline constexpr VertexId no_vertex = std::numeric_limits<VertexId>::min();

// Movement rules shared by all planners: headland edges may only be driven
// in the declared counter-clockwise ring direction, immediate reversals
// (a,b,a) are forbidden, and individual directed transitions can be banned
// outright (used for reversed target edges and fixed interior directions).
struct MotionConstraints {
  bool ccw_only_headland = true;
  bool forbid_reversal = true;
  std::set<std::pair<VertexId, VertexId>> forbidden_directed;

  bool allows(const Adjacency& adj, VertexId from_prev, VertexId cur,
              VertexId nxt) const;
};

// A walk through the graph: the visited vertex sequence, its total cost and
// per-edge traversal counts.
struct Route {
  std::vector<VertexId> sequence;
  double cost = 0.0;
  std::map<EdgeKey, int> traversals;

  bool empty() const { return sequence.empty(); }
  // Appends `tail`, whose first vertex must equal this route's last vertex.
  void append(const Route& tail);
};

Route make_route(const Adjacency& adj, const std::vector<VertexId>& sequence);

// Cheapest constraint-respecting walk src -> dst. The start state carries no
// arrival direction. Ties are resolved by smaller current vertex id, then
// smaller previous vertex id. Throws NoFeasiblePath when dst is unreachable,
// InvalidEndpoint on unknown vertices. src == dst yields the trivial walk.
Route constrained_shortest_path(const TransitionGraph& g, VertexId src,
                                VertexId dst, const MotionConstraints& mc);

// Detour used while expanding a full-coverage tour. The caller has just
// driven a duplicated edge end -> start; the subtour continues from `start`
// and must return to `end` over edges with copies left in `ag`, obeying the
// motion constraints. Whenever some feasible successor edge still has an
// outstanding duplicate copy, the successor set is restricted to those
// edges, which keeps the leftover multigraph connected. Among feasible walks
// the cheapest wins; ties prefer the branch with smaller estimated cost to
// go, then the smaller successor id. Throws NoFeasibleSubtour when no walk
// satisfies the rules.
Route subtour(const TransitionGraph& g, const AugmentedGraph& ag,
              VertexId start, VertexId end, const MotionConstraints& mc);

}  // namespace fieldroute
