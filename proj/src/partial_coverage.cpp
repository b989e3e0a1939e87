#include "fieldroute/partial_coverage.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace fieldroute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

long long default_budget(std::size_t n_targets) {
  long long f = 1;
  for (std::size_t i = 2; i <= n_targets && f < 350; ++i) f *= static_cast<long long>(i);
  return std::min<long long>(f, 350);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool TabuList::contains(const IndexOrder& order) const {
  return std::find(items_.begin(), items_.end(), order) != items_.end();
}

void TabuList::insert_front(const IndexOrder& order) {
  items_.push_front(order);
  while (items_.size() > capacity_) items_.pop_back();
}

TraceTargets trace_targets(const TransitionGraph& g, const Route& full_route,
                           const std::vector<VertexId>& target_vertices,
                           const std::vector<EdgeKey>& target_edges) {
  Adjacency adj(g);
  std::vector<VertexId> tv;
  for (VertexId v : target_vertices) {
    adj.vertex(v);
    if (std::find(tv.begin(), tv.end(), v) == tv.end()) tv.push_back(v);
  }
  std::vector<EdgeKey> te;
  for (const EdgeKey& e : target_edges) {
    adj.edge(e.a, e.b);
    if (std::find(te.begin(), te.end(), e) == te.end()) te.push_back(e);
  }

  const auto& seq = full_route.sequence;
  std::map<VertexId, std::size_t> first_seen;
  std::map<VertexId, std::vector<VertexId>> preds;
  std::map<EdgeKey, std::pair<std::pair<VertexId, VertexId>, std::size_t>>
      first_drive;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    first_seen.try_emplace(seq[k], k);
    if (k == 0) continue;
    VertexId p = seq[k - 1];
    auto& in = preds[seq[k]];
    if (std::find(in.begin(), in.end(), p) == in.end()) in.push_back(p);
    first_drive.try_emplace(EdgeKey(p, seq[k]), std::pair{p, seq[k]}, k);
  }

  // Entries come out in the order the tour first reaches them; an edge whose
  // first drive ends at index k sorts ahead of the vertex reached there.
  struct Keyed {
    std::size_t idx;
    int kind;
    TraceEntry entry;
  };
  std::vector<Keyed> keyed;
  for (const EdgeKey& e : te) {
    auto it = first_drive.find(e);
    if (it == first_drive.end())
      throw TargetNotCovered("edge (" + std::to_string(e.a) + "," +
                             std::to_string(e.b) +
                             ") is never driven by the full tour");
    TraceEntry entry;
    entry.in_vertices = {it->second.first.first};
    entry.out_vertex = it->second.first.second;
    entry.is_edge = true;
    keyed.push_back({it->second.second, 0, entry});
  }
  for (VertexId v : tv) {
    auto it = first_seen.find(v);
    if (it == first_seen.end())
      throw TargetNotCovered("vertex " + std::to_string(v) +
                             " is never reached by the full tour");
    TraceEntry entry;
    auto pit = preds.find(v);
    if (pit != preds.end()) entry.in_vertices = pit->second;
    entry.out_vertex = v;
    entry.is_edge = false;
    keyed.push_back({it->second, 1, entry});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.idx, a.kind) < std::tie(b.idx, b.kind);
  });

  TraceTargets out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.entry));
  return out;
}

std::map<EdgeKey, std::pair<VertexId, VertexId>> interior_directions(
    const TransitionGraph& g, const Route& full_route) {
  Adjacency adj(g);
  std::map<EdgeKey, std::pair<VertexId, VertexId>> dirs;
  const auto& seq = full_route.sequence;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const Edge& e = adj.edge(seq[k - 1], seq[k]);
    if (e.cls != EdgeClass::interior) continue;
    dirs.try_emplace(EdgeKey(e.u, e.v), seq[k - 1], seq[k]);
  }
  return dirs;
}

SegmentTable::SegmentTable(const TransitionGraph& g, const Route& full_route,
                           const TraceTargets& targets, VertexId start,
                           VertexId end)
    : g_(&g), targets_(targets), start_(start), end_(end) {
  Adjacency adj(g);
  adj.vertex(start);
  adj.vertex(end);

  // Restrictions shared by every leg: interior edges keep the working
  // direction of the full tour, and no leg may back out of a target the way
  // the tour came in.
  for (const auto& [key, dir] : interior_directions(g, full_route))
    mc_.forbidden_directed.insert({dir.second, dir.first});
  for (const TraceEntry& t : targets_)
    for (VertexId in : t.in_vertices)
      mc_.forbidden_directed.insert({t.out_vertex, in});

  const int n = static_cast<int>(targets_.size());
  std::vector<VertexId> row_vertex(static_cast<std::size_t>(n) + 1, start);
  for (int i = 0; i < n; ++i)
    row_vertex[static_cast<std::size_t>(i) + 1] = targets_[i].out_vertex;

  cost_.assign(row_vertex.size(),
               std::vector<double>(static_cast<std::size_t>(n) + 1, kInf));
  leg_.assign(row_vertex.size(),
              std::vector<Route>(static_cast<std::size_t>(n) + 1));

  for (std::size_t r = 0; r < row_vertex.size(); ++r) {
    for (int c = 0; c <= n; ++c) {
      if (c == n) {
        try {
          Route leg = constrained_shortest_path(g, row_vertex[r], end_, mc_);
          cost_[r][static_cast<std::size_t>(c)] = leg.cost;
          leg_[r][static_cast<std::size_t>(c)] = std::move(leg);
        } catch (const NoFeasiblePath&) {
        }
        continue;
      }
      const TraceEntry& t = targets_[static_cast<std::size_t>(c)];
      double best = kInf;
      Route best_leg;
      for (VertexId in : t.in_vertices) {
        Route approach;
        try {
          approach = constrained_shortest_path(g, row_vertex[r], in, mc_);
        } catch (const NoFeasiblePath&) {
          continue;
        }
        VertexId prev = approach.sequence.size() >= 2
                            ? approach.sequence[approach.sequence.size() - 2]
                            : no_vertex;
        if (!mc_.allows(adj, prev, in, t.out_vertex)) continue;
        double total = approach.cost + adj.cost(in, t.out_vertex);
        if (total < best) {
          best = total;
          Route hop = make_route(adj, {in, t.out_vertex});
          approach.append(hop);
          best_leg = std::move(approach);
        }
      }
      if (best < kInf) {
        cost_[r][static_cast<std::size_t>(c)] = best;
        leg_[r][static_cast<std::size_t>(c)] = std::move(best_leg);
      }
    }
  }
}

double SegmentTable::at(int from_row, int to_col) const {
  return cost_.at(static_cast<std::size_t>(from_row))
      .at(static_cast<std::size_t>(to_col));
}

double SegmentTable::order_cost(const IndexOrder& order) const {
  const int n = static_cast<int>(targets_.size());
  double total = 0.0;
  int row = 0;
  for (int idx : order) {
    if (idx < 0 || idx >= n)
      throw Error("order index " + std::to_string(idx) + " out of range");
    total += at(row, idx);
    row = idx + 1;
  }
  total += at(row, n);
  return total;
}

Route SegmentTable::order_route(const IndexOrder& order) const {
  const int n = static_cast<int>(targets_.size());
  Route out;
  out.sequence = {start_};
  int row = 0;
  auto take = [&](int col) {
    if (!(at(row, col) < kInf)) {
      std::string to = col == n ? "end vertex " + std::to_string(end_)
                                : "target " + std::to_string(col);
      throw NoFeasiblePath("no feasible leg from " +
                           std::to_string(row == 0
                                              ? start_
                                              : targets_[static_cast<std::size_t>(
                                                             row - 1)]
                                                    .out_vertex) +
                           " to " + to);
    }
    out.append(leg_.at(static_cast<std::size_t>(row))
                   .at(static_cast<std::size_t>(col)));
  };
  for (int idx : order) {
    if (idx < 0 || idx >= n)
      throw Error("order index " + std::to_string(idx) + " out of range");
    take(idx);
    row = idx + 1;
  }
  take(n);
  return out;
}

Route concat_shortest_paths(const TraceTargets& targets,
                            const IndexOrder& order,
                            const TransitionGraph& g, const Route& full_route,
                            VertexId start, VertexId end) {
  SegmentTable table(g, full_route, targets, start, end);
  return table.order_route(order);
}

IndexOrder swap_random_neighbors(const IndexOrder& order, SplitMix64& rng) {
  IndexOrder out = order;
  if (out.size() < 2) return out;
  std::size_t j = static_cast<std::size_t>(rng.next() % (out.size() - 1));
  std::swap(out[j], out[j + 1]);
  return out;
}

PartialPlan plan_partial_coverage(const TransitionGraph& g,
                                  const FullPlan& full,
                                  const CoverageRequest& req) {
  Adjacency adj(g);
  adj.vertex(req.start);
  adj.vertex(req.end);

  PartialPlan plan;
  plan.targets =
      trace_targets(g, full.route, req.target_vertices, req.target_edges);
  const std::size_t n = plan.targets.size();

  if (n == 0) {
    if (req.start == req.end) {
      plan.route.sequence = {req.start};
    } else {
      MotionConstraints mc;
      for (const auto& [key, dir] : interior_directions(g, full.route))
        mc.forbidden_directed.insert({dir.second, dir.first});
      plan.route = constrained_shortest_path(g, req.start, req.end, mc);
    }
    plan.cost = plan.route.cost;
    return plan;
  }

  SegmentTable table(g, full.route, plan.targets, req.start, req.end);
  const long long n_iter =
      req.n_iterations < 0 ? default_budget(n) : req.n_iterations;
  const long long n_tabu = req.n_tabu < 0 ? default_budget(n) : req.n_tabu;

  IndexOrder best(n);
  std::iota(best.begin(), best.end(), 0);
  double best_cost = table.order_cost(best);
  plan.evaluations = 1;

  TabuList tabu(static_cast<std::size_t>(std::max<long long>(n_tabu, 0)));
  tabu.insert_front(best);
  SplitMix64 rng(req.seed);

  for (long long k = 0; k < n_iter; ++k) {
    IndexOrder cand = swap_random_neighbors(best, rng);
    for (long long j = 0; tabu.contains(cand) && j < n_tabu; ++j)
      cand = swap_random_neighbors(cand, rng);
    if (tabu.contains(cand)) continue;
    tabu.insert_front(cand);
    double c = table.order_cost(cand);
    ++plan.evaluations;
    if (c < best_cost) {
      best_cost = c;
      best = cand;
    }
  }

  if (!(best_cost < kInf))
    throw NoFeasiblePath("no feasible visiting order for the requested targets");
  plan.route = table.order_route(best);
  plan.cost = best_cost;
  plan.best_order = best;
  return plan;
}

}  // namespace fieldroute
