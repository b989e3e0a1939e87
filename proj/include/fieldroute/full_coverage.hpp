#pragma once

#include "fieldroute/search.hpp"

namespace fieldroute {

// Closed tour covering every edge at least once (start == end), or the open
// variant that finishes on another headland vertex (start != end).
struct FullPlan {
  Route route;
  VertexId start = 0;
  VertexId end = 0;
  std::vector<EdgeKey> duplicates;
  double duplicate_cost = 0.0;
};

// One counter-clockwise lap of the main headland ring, starting and ending
// at `start`. Throws InvalidEndpoint when `start` is not a headland vertex.
Route trace_headland(const TransitionGraph& g, VertexId start);

// Sum of edge costs along `sequence`; 0 for empty or single-vertex walks.
// Throws NotAnEdge when consecutive vertices are not connected.
double route_cost(const TransitionGraph& g,
                  const std::vector<VertexId>& sequence);

// Full-coverage planner: headland lap, optional shortest-path tail to `end`,
// then repeated subtour splicing at duplicated edges until every copy in the
// augmented graph is driven. Requires a validated graph; start and end must
// be headland vertices.
FullPlan plan_full_coverage(const TransitionGraph& g, VertexId start,
                            VertexId end);

}  // namespace fieldroute
