#include "fieldroute/full_coverage.hpp"

#include <string>

namespace fieldroute {

Route trace_headland(const TransitionGraph& g, VertexId start) {
  Adjacency adj(g);
  std::vector<VertexId> seq = adj.ring_from(start);
  seq.push_back(start);
  return make_route(adj, seq);
}

double route_cost(const TransitionGraph& g,
                  const std::vector<VertexId>& sequence) {
  Adjacency adj(g);
  return make_route(adj, sequence).cost;
}

FullPlan plan_full_coverage(const TransitionGraph& g, VertexId start,
                            VertexId end) {
  Adjacency adj(g);
  adj.vertex(start);
  adj.vertex(end);
  if (adj.vertex(end).cls != VertexClass::headland)
    throw InvalidEndpoint("end vertex " + std::to_string(end) +
                          " is not a headland vertex");

  AugmentedGraph ag = eulerian_augment(g);
  MotionConstraints mc;

  // Base lap of the headland ring; these traversals come out of the
  // availability counts right away. The tail to a distinct end vertex is a
  // plain shortest path on top of the coverage tour and is not counted.
  std::vector<VertexId> seq = adj.ring_from(start);
  seq.push_back(start);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) ag.consume(seq[i], seq[i + 1]);
  if (end != start) {
    Route tail = constrained_shortest_path(g, start, end, mc);
    seq.insert(seq.end(), tail.sequence.begin() + 1, tail.sequence.end());
  }

  // Wherever the tour drives an edge that still has a duplicate copy, splice
  // in a subtour that leaves along that copy and works off the untraversed
  // edges reachable from it.
  std::size_t t = 0;
  while (t + 1 < seq.size()) {
    VertexId a = seq[t];
    VertexId b = seq[t + 1];
    if (ag.duplicate_outstanding(a, b)) {
      ag.consume(a, b);
      Route sub = subtour(g, ag, b, a, mc);
      for (std::size_t i = 0; i + 1 < sub.sequence.size(); ++i)
        ag.consume(sub.sequence[i], sub.sequence[i + 1]);
      seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                 sub.sequence.begin(), sub.sequence.end());
    }
    ++t;
  }

  for (const auto& [key, n] : ag.remaining)
    if (n > 0)
      throw InfeasibleCoverage("edge (" + std::to_string(key.a) + "," +
                               std::to_string(key.b) + ") still has " +
                               std::to_string(n) +
                               " undriven copies after the sweep");

  FullPlan plan;
  plan.route = make_route(adj, seq);
  plan.start = start;
  plan.end = end;
  plan.duplicates = ag.duplicates;
  plan.duplicate_cost = ag.duplicate_cost;
  return plan;
}

}  // namespace fieldroute
