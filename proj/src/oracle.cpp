#include "fieldroute/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <tuple>

namespace fieldroute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

OracleResult brute_force_full_coverage(const TransitionGraph& g,
                                       VertexId start, VertexId end,
                                       long long budget) {
  Adjacency adj(g);
  adj.vertex(start);
  adj.vertex(end);
  if (g.edges.size() > 20)
    throw BudgetExceeded("full-coverage oracle is limited to 20 edges, got " +
                         std::to_string(g.edges.size()));
  const std::uint32_t full = g.edges.size() == 0
                                 ? 0
                                 : (1u << g.edges.size()) - 1u;
  MotionConstraints mc;

  // Plain Dijkstra over (vertex, previous vertex, covered-edge set) states:
  // exact, and immune to walks that revisit edges arbitrarily often.
  using State = std::tuple<VertexId, VertexId, std::uint32_t>;
  using QItem = std::tuple<double, VertexId, VertexId, std::uint32_t>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  std::map<State, double> dist;
  std::map<State, State> parent;
  std::set<State> settled;
  OracleResult res;

  State init{start, no_vertex, 0};
  dist[init] = 0.0;
  queue.push({0.0, start, no_vertex, 0});

  while (!queue.empty()) {
    auto [d, cur, from, mask] = queue.top();
    queue.pop();
    State state{cur, from, mask};
    if (settled.count(state)) continue;
    settled.insert(state);
    if (++res.expanded > budget)
      throw BudgetExceeded("full-coverage oracle exceeded its budget");
    if (cur == end && mask == full) {
      res.cost = d;
      State s = state;
      res.sequence.push_back(std::get<0>(s));
      while (!(s == init)) {
        s = parent.at(s);
        res.sequence.push_back(std::get<0>(s));
      }
      std::reverse(res.sequence.begin(), res.sequence.end());
      return res;
    }
    for (const auto& [nxt, eidx] : adj.neighbors(cur)) {
      if (!mc.allows(adj, from, cur, nxt)) continue;
      double nd = d + g.edges[static_cast<std::size_t>(eidx)].cost;
      std::uint32_t nmask = mask | (1u << eidx);
      State ns{nxt, cur, nmask};
      auto it = dist.find(ns);
      if (it == dist.end() || nd < it->second) {
        dist[ns] = nd;
        parent[ns] = state;
        queue.push({nd, nxt, cur, nmask});
      }
    }
  }
  throw InfeasibleCoverage("no covering walk from " + std::to_string(start) +
                           " to " + std::to_string(end));
}

namespace {

struct WalkSearch {
  const Adjacency& adj;
  const MotionConstraints& mc;
  VertexId dst;
  int max_transitions;
  long long budget;
  long long expanded = 0;
  double best_cost = kInf;
  std::vector<VertexId> best_seq{};
  std::vector<VertexId> walk{};

  void dfs(VertexId cur, VertexId from, double cost, int depth) {
    if (++expanded > budget)
      throw BudgetExceeded("walk oracle exceeded its budget");
    if (cost >= best_cost) return;
    if (cur == dst) {
      best_cost = cost;
      best_seq = walk;
    }
    if (depth == max_transitions) return;
    for (const auto& [nxt, eidx] : adj.neighbors(cur)) {
      if (!mc.allows(adj, from, cur, nxt)) continue;
      walk.push_back(nxt);
      dfs(nxt, cur, cost + adj.graph().edges[static_cast<std::size_t>(eidx)].cost,
          depth + 1);
      walk.pop_back();
    }
  }
};

}  // namespace

OracleResult brute_force_shortest_walk(const TransitionGraph& g, VertexId src,
                                       VertexId dst,
                                       const MotionConstraints& mc,
                                       int max_transitions, long long budget) {
  Adjacency adj(g);
  adj.vertex(src);
  adj.vertex(dst);
  WalkSearch search{adj, mc, dst, max_transitions, budget};
  search.walk.push_back(src);
  search.dfs(src, no_vertex, 0.0, 0);
  if (!(search.best_cost < kInf))
    throw NoFeasiblePath("no walk from " + std::to_string(src) + " to " +
                         std::to_string(dst) + " within " +
                         std::to_string(max_transitions) + " transitions");
  OracleResult res;
  res.cost = search.best_cost;
  res.sequence = search.best_seq;
  res.expanded = search.expanded;
  return res;
}

namespace {

struct PairingSearch {
  const std::vector<std::vector<double>>& dist;
  std::vector<int> partner;
  std::vector<int> best_partner;
  double best = kInf;

  void recurse(std::size_t i, double acc) {
    while (i < partner.size() && partner[i] >= 0) ++i;
    if (i >= partner.size()) {
      if (acc < best) {
        best = acc;
        best_partner = partner;
      }
      return;
    }
    for (std::size_t j = i + 1; j < partner.size(); ++j) {
      if (partner[j] >= 0) continue;
      double d = dist[i][j];
      if (!(acc + d < best)) continue;
      partner[i] = static_cast<int>(j);
      partner[j] = static_cast<int>(i);
      recurse(i + 1, acc + d);
      partner[i] = partner[j] = -1;
    }
  }
};

}  // namespace

MatchingOracle brute_force_matching(const TransitionGraph& g) {
  Adjacency adj(g);
  std::map<VertexId, int> degree;
  for (const Edge& e : g.edges) {
    degree[e.u]++;
    degree[e.v]++;
  }
  std::vector<VertexId> odd;
  for (const auto& [v, d] : degree)
    if (d % 2 == 1) odd.push_back(v);
  if (odd.empty()) return {};
  if (odd.size() % 2 == 1)
    throw AugmentationInfeasible("odd number of odd-degree vertices");
  if (odd.size() > 12)
    throw BudgetExceeded("matching oracle is limited to 12 odd vertices, got " +
                         std::to_string(odd.size()));

  // Pair distances live on the headland and island-headland edges only.
  std::map<VertexId, std::vector<std::pair<VertexId, double>>> ring_adj;
  for (const Edge& e : g.edges) {
    if (e.cls == EdgeClass::interior) continue;
    ring_adj[e.u].push_back({e.v, e.cost});
    ring_adj[e.v].push_back({e.u, e.cost});
  }
  auto shortest = [&](VertexId from) {
    std::map<VertexId, double> d;
    std::map<VertexId, VertexId> par;
    using QItem = std::pair<double, VertexId>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
    d[from] = 0.0;
    queue.push({0.0, from});
    while (!queue.empty()) {
      auto [dc, v] = queue.top();
      queue.pop();
      if (dc > d[v]) continue;
      for (const auto& [u, c] : ring_adj[v]) {
        auto it = d.find(u);
        if (it == d.end() || dc + c < it->second) {
          d[u] = dc + c;
          par[u] = v;
          queue.push({dc + c, u});
        }
      }
    }
    return std::pair{d, par};
  };

  std::vector<std::map<VertexId, double>> dists;
  std::vector<std::map<VertexId, VertexId>> parents;
  for (VertexId v : odd) {
    auto [d, par] = shortest(v);
    dists.push_back(std::move(d));
    parents.push_back(std::move(par));
  }
  std::vector<std::vector<double>> table(odd.size(),
                                         std::vector<double>(odd.size(), kInf));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j) {
      auto it = dists[i].find(odd[j]);
      if (it != dists[i].end()) table[i][j] = it->second;
    }

  PairingSearch search{table, std::vector<int>(odd.size(), -1), {}, kInf};
  search.recurse(0, 0.0);
  if (!(search.best < kInf))
    throw AugmentationInfeasible(
        "odd vertices cannot be paired along the rings");

  MatchingOracle out;
  out.cost = search.best;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(search.best_partner[i]);
    if (j < i) continue;
    VertexId at = odd[j];
    while (at != odd[i]) {
      VertexId prev = parents[i].at(at);
      out.duplicates.push_back(EdgeKey(prev, at));
      at = prev;
    }
  }
  std::sort(out.duplicates.begin(), out.duplicates.end());
  return out;
}

PartialOracle brute_force_partial(const TransitionGraph& g,
                                  const FullPlan& full,
                                  const CoverageRequest& req) {
  TraceTargets targets =
      trace_targets(g, full.route, req.target_vertices, req.target_edges);
  if (targets.size() > 9)
    throw BudgetExceeded("partial oracle is limited to 9 targets, got " +
                         std::to_string(targets.size()));
  SegmentTable table(g, full.route, targets, req.start, req.end);

  IndexOrder order(targets.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<int>(i);

  PartialOracle out;
  out.cost = kInf;
  IndexOrder perm = order;
  do {
    double c = table.order_cost(perm);
    if (c < out.cost) {
      out.cost = c;
      out.order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!(out.cost < kInf))
    throw NoFeasiblePath("no permutation of the targets is drivable");
  out.sequence = table.order_route(out.order).sequence;
  return out;
}

}  // namespace fieldroute
