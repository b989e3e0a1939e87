#pragma once

#include <cstdint>
#include <deque>

#include "fieldroute/full_coverage.hpp"

namespace fieldroute {

// One visiting obligation extracted from the full-coverage tour: drive into
// out_vertex from one of in_vertices. Edge targets carry exactly the
// direction of their first traversal in the full tour; vertex targets accept
// any predecessor the full tour ever used.
struct TraceEntry {
  std::vector<VertexId> in_vertices;
  VertexId out_vertex = 0;
  bool is_edge = false;
  bool operator==(const TraceEntry&) const = default;
};

using TraceTargets = std::vector<TraceEntry>;
using IndexOrder = std::vector<int>;

// Deterministic 64-bit generator (splitmix-style) so seeds reproduce runs
// across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}
  std::uint64_t next();
};

// Bounded visited-order memory with front insertion and FIFO eviction.
class TabuList {
 public:
  explicit TabuList(std::size_t capacity) : capacity_(capacity) {}
  bool contains(const IndexOrder& order) const;
  void insert_front(const IndexOrder& order);
  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::deque<IndexOrder> items_;
};

enum class Task { t1, t2, t3, t4, t5, t6, t7, t8, t9 };

struct CoverageRequest {
  Task task = Task::t3;
  VertexId start = 0;
  VertexId end = 0;
  std::vector<VertexId> target_vertices;
  std::vector<EdgeKey> target_edges;
  // Negative means "use the default": min((|targets|)!, 350).
  long long n_iterations = -1;
  long long n_tabu = -1;
  std::uint64_t seed = 0;
};

struct PartialPlan {
  Route route;
  double cost = 0.0;
  IndexOrder best_order;
  TraceTargets targets;
  long long evaluations = 0;
};

// Scans the full tour once and emits one entry per target in first-encounter
// order. Throws TargetNotCovered when a target never appears in the tour,
// NotAnEdge / InvalidEndpoint for unknown targets.
TraceTargets trace_targets(const TransitionGraph& g, const Route& full_route,
                           const std::vector<VertexId>& target_vertices,
                           const std::vector<EdgeKey>& target_edges);

// Direction each interior edge carries in the full tour (first traversal).
// Partial plans must drive interior edges this way only.
std::map<EdgeKey, std::pair<VertexId, VertexId>> interior_directions(
    const TransitionGraph& g, const Route& full_route);

// Precomputed pairwise segment costs for one (graph, targets, start, end)
// partial-coverage problem, so order evaluation is O(|targets|).
class SegmentTable {
 public:
  SegmentTable(const TransitionGraph& g, const Route& full_route,
               const TraceTargets& targets, VertexId start, VertexId end);

  double order_cost(const IndexOrder& order) const;  // +inf when infeasible
  Route order_route(const IndexOrder& order) const;  // throws NoFeasiblePath
  const MotionConstraints& constraints() const { return mc_; }

 private:
  const TransitionGraph* g_;
  TraceTargets targets_;
  VertexId start_, end_;
  MotionConstraints mc_;
  // Rows: start plus each target's out vertex. Columns: each target (best
  // in-vertex choice already folded in, target edge cost included) plus end.
  std::vector<std::vector<double>> cost_;
  std::vector<std::vector<Route>> leg_;
  double at(int from_row, int to_col) const;
};

// Stitches constrained shortest paths through the targets in the given
// order. Throws NoFeasiblePath naming the first unreachable leg.
Route concat_shortest_paths(const TraceTargets& targets,
                            const IndexOrder& order,
                            const TransitionGraph& g, const Route& full_route,
                            VertexId start, VertexId end);

// Copy of `order` with one uniformly chosen adjacent pair transposed;
// singleton and empty orders come back unchanged.
IndexOrder swap_random_neighbors(const IndexOrder& order, SplitMix64& rng);

// Tabu search over target visiting orders (adjacent-transposition moves,
// first-encounter order as the seed candidate, strict improvement only).
// Empty requests return the trivial walk {start} when start == end, else the
// plain constrained shortest path.
PartialPlan plan_partial_coverage(const TransitionGraph& g,
                                  const FullPlan& full,
                                  const CoverageRequest& req);

}  // namespace fieldroute
