#include "fieldroute/search.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace fieldroute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

bool MotionConstraints::allows(const Adjacency& adj, VertexId from_prev,
                               VertexId cur, VertexId nxt) const {
  if (forbid_reversal && from_prev != no_vertex && nxt == from_prev)
    return false;
  if (ccw_only_headland && !adj.direction_ok(cur, nxt)) return false;
  if (forbidden_directed.count({cur, nxt})) return false;
  return true;
}

void Route::append(const Route& tail) {
  if (tail.sequence.empty()) return;
  if (sequence.empty()) {
    *this = tail;
    return;
  }
  if (sequence.back() != tail.sequence.front())
    throw Error("route append mismatch: ..." +
                std::to_string(sequence.back()) + " + " +
                std::to_string(tail.sequence.front()) + "...");
  sequence.insert(sequence.end(), tail.sequence.begin() + 1,
                  tail.sequence.end());
  cost += tail.cost;
  for (const auto& [k, n] : tail.traversals) traversals[k] += n;
}

Route make_route(const Adjacency& adj, const std::vector<VertexId>& sequence) {
  Route r;
  r.sequence = sequence;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const Edge& e = adj.edge(sequence[i], sequence[i + 1]);
    r.cost += e.cost;
    r.traversals[EdgeKey(e.u, e.v)]++;
  }
  return r;
}

Route constrained_shortest_path(const TransitionGraph& g, VertexId src,
                                VertexId dst, const MotionConstraints& mc) {
  Adjacency adj(g);
  adj.vertex(src);
  adj.vertex(dst);
  if (src == dst) {
    Route r;
    r.sequence = {src};
    return r;
  }

  using State = std::pair<VertexId, VertexId>;  // (current, arrived_from)
  // Queue entries ordered by cost, then current id, then arrived_from, so
  // equal-cost settlements happen in a fixed order.
  using QItem = std::tuple<double, VertexId, VertexId>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  std::map<State, double> dist;
  std::map<State, State> parent;
  std::set<State> settled;

  State start{src, no_vertex};
  dist[start] = 0.0;
  queue.push({0.0, src, no_vertex});

  while (!queue.empty()) {
    auto [d, cur, from] = queue.top();
    queue.pop();
    State state{cur, from};
    if (settled.count(state)) continue;
    settled.insert(state);
    if (cur == dst) {
      Route r;
      State s = state;
      r.sequence.push_back(s.first);
      while (!(s == start)) {
        s = parent.at(s);
        r.sequence.push_back(s.first);
      }
      std::reverse(r.sequence.begin(), r.sequence.end());
      return make_route(adj, r.sequence);
    }
    for (const auto& [nxt, eidx] : adj.neighbors(cur)) {
      if (!mc.allows(adj, from, cur, nxt)) continue;
      double nd = d + g.edges[eidx].cost;
      State ns{nxt, cur};
      auto it = dist.find(ns);
      if (it == dist.end() || nd < it->second) {
        dist[ns] = nd;
        parent[ns] = state;
        queue.push({nd, nxt, cur});
      }
    }
  }
  throw NoFeasiblePath("no constrained path from " + std::to_string(src) +
                       " to " + std::to_string(dst));
}

namespace {

// Admissible remaining-cost bound for the subtour search: cheapest directed
// walk to `end` ignoring traversal counts and reversal bans.
std::map<VertexId, double> distance_to(const Adjacency& adj, VertexId end,
                                       const MotionConstraints& mc) {
  std::map<VertexId, double> d;
  using QItem = std::pair<double, VertexId>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  d[end] = 0.0;
  queue.push({0.0, end});
  while (!queue.empty()) {
    auto [dc, v] = queue.top();
    queue.pop();
    if (dc > d[v]) continue;
    for (const auto& [u, eidx] : adj.neighbors(v)) {
      // Relax u via edge u -> v, so the edge must be drivable toward v.
      if (mc.ccw_only_headland && !adj.direction_ok(u, v)) continue;
      if (mc.forbidden_directed.count({u, v})) continue;
      double nd = dc + adj.graph().edges[eidx].cost;
      auto it = d.find(u);
      if (it == d.end() || nd < it->second) {
        d[u] = nd;
        queue.push({nd, u});
      }
    }
  }
  return d;
}

struct SubtourSearch {
  const Adjacency& adj;
  const MotionConstraints& mc;
  VertexId start, end;
  std::vector<int> left;        // per edge index
  std::vector<int> dup_mult;    // per edge index
  std::map<VertexId, double> lb;
  std::vector<VertexId> walk;
  double best_cost = kInf;
  std::vector<VertexId> best_walk;
  long long expanded = 0;
  static constexpr long long kBudget = 50'000'000;

  SubtourSearch(const Adjacency& a, const AugmentedGraph& ag,
                const MotionConstraints& m, VertexId s, VertexId e)
      : adj(a), mc(m), start(s), end(e) {
    const auto& edges = adj.graph().edges;
    left.resize(edges.size());
    dup_mult.resize(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      EdgeKey k(edges[i].u, edges[i].v);
      left[i] = ag.remaining.at(k);
      auto it = ag.duplicate_mult.find(k);
      if (it != ag.duplicate_mult.end()) dup_mult[i] = it->second;
    }
    lb = distance_to(adj, end, mc);
  }

  double bound(VertexId v) const {
    auto it = lb.find(v);
    return it == lb.end() ? kInf : it->second;
  }

  void dfs(VertexId cur, VertexId from, double cost) {
    if (++expanded > kBudget)
      throw BudgetExceeded("subtour search exceeded its expansion budget");
    if (cost + bound(cur) >= best_cost) return;
    if (cur == end && from != start) {
      best_cost = cost;
      best_walk = walk;
      return;
    }
    // Feasible successors; restricted to edges with outstanding duplicate
    // copies whenever any such edge is available from here.
    struct Cand {
      double priority;
      VertexId nxt;
      int eidx;
      bool forced;
    };
    std::vector<Cand> cands;
    bool any_forced = false;
    for (const auto& [nxt, eidx] : adj.neighbors(cur)) {
      if (left[eidx] <= 0) continue;
      if (!mc.allows(adj, from, cur, nxt)) continue;
      bool forced = dup_mult[eidx] >= 1;
      any_forced = any_forced || forced;
      cands.push_back(
          {adj.graph().edges[eidx].cost + bound(nxt), nxt, eidx, forced});
    }
    std::vector<Cand> chosen;
    for (const auto& c : cands)
      if (!any_forced || c.forced) chosen.push_back(c);
    std::sort(chosen.begin(), chosen.end(), [](const Cand& a, const Cand& b) {
      return std::tie(a.priority, a.nxt) < std::tie(b.priority, b.nxt);
    });
    for (const auto& c : chosen) {
      left[c.eidx]--;
      walk.push_back(c.nxt);
      dfs(c.nxt, cur, cost + adj.graph().edges[c.eidx].cost);
      walk.pop_back();
      left[c.eidx]++;
    }
  }
};

}  // namespace

Route subtour(const TransitionGraph& g, const AugmentedGraph& ag,
              VertexId start, VertexId end, const MotionConstraints& mc) {
  Adjacency adj(g);
  adj.vertex(start);
  adj.vertex(end);
  if (start == end)
    throw NoFeasibleSubtour("subtour endpoints coincide at " +
                            std::to_string(start));

  SubtourSearch search(adj, ag, mc, start, end);
  search.walk.push_back(start);
  // The caller just drove the duplicated edge end -> start, so the walk
  // begins with that arrival direction.
  search.dfs(start, end, 0.0);
  if (search.best_walk.empty())
    throw NoFeasibleSubtour("no subtour from " + std::to_string(start) +
                            " back to " + std::to_string(end));
  return make_route(adj, search.best_walk);
}

}  // namespace fieldroute
