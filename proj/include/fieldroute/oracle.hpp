#pragma once

#include "fieldroute/partial_coverage.hpp"

namespace fieldroute {

// Reference answers computed by exhaustive search, independent of the
// planners. Small inputs only; every oracle takes an expansion budget and
// throws BudgetExceeded rather than returning a guess.

struct OracleResult {
  double cost = 0.0;
  std::vector<VertexId> sequence;
  long long expanded = 0;
};

// Cheapest covering walk start -> end over all constraint-respecting walks
// (counter-clockwise headland, no immediate reversal). Meant for graphs of
// roughly 14 edges or fewer.
OracleResult brute_force_full_coverage(const TransitionGraph& g,
                                       VertexId start, VertexId end,
                                       long long budget = 50'000'000);

// Cheapest constrained walk src -> dst by depth-bounded enumeration.
OracleResult brute_force_shortest_walk(const TransitionGraph& g, VertexId src,
                                       VertexId dst,
                                       const MotionConstraints& mc,
                                       int max_transitions,
                                       long long budget = 50'000'000);

struct MatchingOracle {
  double cost = 0.0;
  std::vector<EdgeKey> duplicates;  // sorted multiset
};

// Minimum-weight odd-vertex pairing by full enumeration (<= 12 odd
// vertices), realized as duplicated headland/island-headland edges.
MatchingOracle brute_force_matching(const TransitionGraph& g);

struct PartialOracle {
  double cost = 0.0;
  IndexOrder order;
  std::vector<VertexId> sequence;
};

// Evaluates every permutation of the traced targets (<= 9 targets) through
// the same stitched-shortest-path evaluator the planner uses.
PartialOracle brute_force_partial(const TransitionGraph& g,
                                  const FullPlan& full,
                                  const CoverageRequest& req);

}  // namespace fieldroute
