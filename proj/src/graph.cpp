#include "fieldroute/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace fieldroute {

namespace {

std::string vid(VertexId v) { return std::to_string(v); }

std::string pair_str(VertexId u, VertexId v) {
  return "(" + vid(u) + "," + vid(v) + ")";
}

}  // namespace

bool ValidationReport::has(const std::string& code) const {
  for (const auto& v : violations)
    if (v.code == code) return true;
  return false;
}

ValidationReport validate_graph(const TransitionGraph& g) {
  ValidationReport rep;
  auto add = [&rep](const std::string& code, const std::string& detail) {
    rep.violations.push_back({code, detail});
  };

  std::map<VertexId, const Vertex*> verts;
  for (const auto& v : g.vertices) {
    if (!verts.emplace(v.id, &v).second)
      add("DuplicateVertex", "vertex id " + vid(v.id) + " declared twice");
  }

  std::map<VertexId, int> degree;
  std::map<EdgeKey, const Edge*> by_key;
  for (const auto& e : g.edges) {
    if (e.u == e.v) {
      add("SelfLoop", "edge " + pair_str(e.u, e.v));
      continue;
    }
    bool known = true;
    for (VertexId w : {e.u, e.v}) {
      if (!verts.count(w)) {
        add("UnknownVertex", "edge " + pair_str(e.u, e.v) +
                                 " references unknown vertex " + vid(w));
        known = false;
      }
    }
    if (e.cost < 0.0)
      add("NegativeCost", "edge " + pair_str(e.u, e.v) + " has cost " +
                              std::to_string(e.cost));
    if (!known) continue;
    if (!by_key.emplace(EdgeKey(e.u, e.v), &e).second) {
      add("DuplicateEdge", "transition " + pair_str(e.u, e.v) +
                               " appears more than once");
      continue;
    }
    degree[e.u]++;
    degree[e.v]++;
  }

  for (const auto& v : g.vertices) {
    int d = degree.count(v.id) ? degree[v.id] : 0;
    if (d < 2 || d > 3)
      add("DegreeViolation",
          "vertex " + vid(v.id) + " has degree " + std::to_string(d));
  }

  if (!verts.count(g.entry))
    add("UnknownVertex", "entry vertex " + vid(g.entry) + " does not exist");
  else if (verts.at(g.entry)->cls != VertexClass::headland)
    add("EntryNotHeadland", "entry vertex " + vid(g.entry) +
                                " is not a headland vertex");

  // Ring structure: every class vertex on exactly one ring of its class,
  // consecutive ring vertices joined by an edge of the matching class.
  auto check_ring = [&](const std::vector<VertexId>& ring, EdgeClass want,
                        const std::string& label,
                        std::set<VertexId>& seen_on_rings) {
    if (ring.size() < 3) {
      add("RingSize", label + " has " + std::to_string(ring.size()) +
                          " vertices, need at least 3");
      return;
    }
    for (VertexId v : ring) {
      if (!verts.count(v)) {
        add("UnknownVertex", label + " references unknown vertex " + vid(v));
        return;
      }
      if (!seen_on_rings.insert(v).second)
        add("RingCoverage", "vertex " + vid(v) + " appears on two rings");
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      VertexId a = ring[i];
      VertexId b = ring[(i + 1) % ring.size()];
      auto it = by_key.find(EdgeKey(a, b));
      if (it == by_key.end())
        add("RingMismatch",
            label + ": consecutive vertices " + pair_str(a, b) +
                " are not joined by an edge");
      else if (it->second->cls != want)
        add("RingMismatch", label + ": edge " + pair_str(a, b) +
                                " does not have the ring's edge class");
    }
  };

  std::set<VertexId> on_rings;
  check_ring(g.headland_ring, EdgeClass::headland, "headland ring", on_rings);
  for (std::size_t k = 0; k < g.island_rings.size(); ++k)
    check_ring(g.island_rings[k], EdgeClass::island_headland,
               "island ring " + std::to_string(k), on_rings);

  std::set<VertexId> hdl_ring_set(g.headland_ring.begin(),
                                  g.headland_ring.end());
  std::set<VertexId> isl_ring_set;
  for (const auto& ring : g.island_rings)
    isl_ring_set.insert(ring.begin(), ring.end());
  for (const auto& v : g.vertices) {
    bool on_hdl = hdl_ring_set.count(v.id) != 0;
    bool on_isl = isl_ring_set.count(v.id) != 0;
    if (v.cls == VertexClass::headland && !on_hdl)
      add("RingCoverage",
          "headland vertex " + vid(v.id) + " is not on the headland ring");
    if (v.cls == VertexClass::island && !on_isl)
      add("RingCoverage",
          "island vertex " + vid(v.id) + " is not on any island ring");
  }

  // Edge classes against endpoint classes and ring membership.
  for (const auto& [key, e] : by_key) {
    auto cu = verts.count(e->u) ? verts.at(e->u)->cls : VertexClass::headland;
    auto cv = verts.count(e->v) ? verts.at(e->v)->cls : VertexClass::headland;
    switch (e->cls) {
      case EdgeClass::headland:
        if (cu != VertexClass::headland || cv != VertexClass::headland)
          add("ClassMismatch", "headland edge " + pair_str(e->u, e->v) +
                                   " touches an island vertex");
        break;
      case EdgeClass::island_headland:
        if (cu != VertexClass::island || cv != VertexClass::island)
          add("ClassMismatch", "island-headland edge " +
                                   pair_str(e->u, e->v) +
                                   " touches a non-island vertex");
        break;
      case EdgeClass::interior:
        break;
    }
  }
  // Headland-class edges must be exactly the consecutive main-ring pairs
  // (and island-headland edges consecutive island-ring pairs).
  std::set<EdgeKey> ring_pairs;
  for (std::size_t i = 0; i < g.headland_ring.size(); ++i)
    ring_pairs.insert(EdgeKey(g.headland_ring[i],
                              g.headland_ring[(i + 1) % g.headland_ring.size()]));
  std::set<EdgeKey> island_pairs;
  for (const auto& ring : g.island_rings)
    for (std::size_t i = 0; i < ring.size(); ++i)
      island_pairs.insert(EdgeKey(ring[i], ring[(i + 1) % ring.size()]));
  for (const auto& [key, e] : by_key) {
    if (e->cls == EdgeClass::headland && !ring_pairs.count(key))
      add("RingMismatch", "headland edge " + pair_str(e->u, e->v) +
                              " is not a consecutive headland-ring pair");
    if (e->cls == EdgeClass::island_headland && !island_pairs.count(key))
      add("RingMismatch", "island-headland edge " + pair_str(e->u, e->v) +
                              " is not a consecutive island-ring pair");
  }

  // Connectivity over every declared vertex.
  if (!g.vertices.empty()) {
    std::map<VertexId, std::vector<VertexId>> nbr;
    for (const auto& [key, e] : by_key) {
      nbr[e->u].push_back(e->v);
      nbr[e->v].push_back(e->u);
    }
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(g.vertices.front().id);
    seen.insert(g.vertices.front().id);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : nbr[v])
        if (seen.insert(w).second) q.push(w);
    }
    if (seen.size() != verts.size()) {
      std::ostringstream os;
      os << verts.size() - seen.size() << " vertices unreachable from "
         << g.vertices.front().id;
      add("Disconnected", os.str());
    }
  }

  rep.ok = rep.violations.empty();

  // Orientation is advisory: with coordinates present, the declared
  // counter-clockwise ring should enclose positive signed area (y up).
  if (rep.ok && g.headland_ring.size() >= 3) {
    bool have_xy = true;
    double area2 = 0.0;
    for (std::size_t i = 0; i < g.headland_ring.size(); ++i) {
      const Vertex* a = verts.at(g.headland_ring[i]);
      const Vertex* b =
          verts.at(g.headland_ring[(i + 1) % g.headland_ring.size()]);
      if (!a->x || !a->y || !b->x || !b->y) {
        have_xy = false;
        break;
      }
      area2 += *a->x * *b->y - *b->x * *a->y;
    }
    if (have_xy && area2 <= 0.0)
      add("OrientationWarning",
          "headland ring coordinates wind clockwise; declared order is "
          "taken as the driving direction");
  }
  return rep;
}

Adjacency::Adjacency(const TransitionGraph& g) : g_(&g) {
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vindex_[g.vertices[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    eindex_[EdgeKey(e.u, e.v)] = static_cast<int>(i);
    neighbors_[e.u].push_back({e.v, static_cast<int>(i)});
    neighbors_[e.v].push_back({e.u, static_cast<int>(i)});
  }
  for (auto& [v, ns] : neighbors_) std::sort(ns.begin(), ns.end());
  for (std::size_t i = 0; i < g.headland_ring.size(); ++i)
    ring_next_[g.headland_ring[i]] =
        g.headland_ring[(i + 1) % g.headland_ring.size()];
}

const Vertex& Adjacency::vertex(VertexId v) const {
  auto it = vindex_.find(v);
  if (it == vindex_.end())
    throw InvalidEndpoint("unknown vertex " + std::to_string(v));
  return g_->vertices[it->second];
}

bool Adjacency::has_edge(VertexId u, VertexId v) const {
  return eindex_.count(EdgeKey(u, v)) != 0;
}

const Edge& Adjacency::edge(VertexId u, VertexId v) const {
  auto it = eindex_.find(EdgeKey(u, v));
  if (it == eindex_.end())
    throw NotAnEdge("no edge between " + std::to_string(u) + " and " +
                    std::to_string(v));
  return g_->edges[it->second];
}

double Adjacency::cost(VertexId u, VertexId v) const {
  return edge(u, v).cost;
}

const std::vector<std::pair<VertexId, int>>& Adjacency::neighbors(
    VertexId v) const {
  static const std::vector<std::pair<VertexId, int>> empty;
  auto it = neighbors_.find(v);
  return it == neighbors_.end() ? empty : it->second;
}

bool Adjacency::direction_ok(VertexId u, VertexId v) const {
  const Edge& e = edge(u, v);
  if (e.cls != EdgeClass::headland) return true;
  auto it = ring_next_.find(u);
  return it != ring_next_.end() && it->second == v;
}

std::vector<VertexId> Adjacency::ring_from(VertexId start) const {
  const auto& ring = g_->headland_ring;
  auto it = std::find(ring.begin(), ring.end(), start);
  if (it == ring.end())
    throw InvalidEndpoint("vertex " + std::to_string(start) +
                          " is not on the headland ring");
  std::vector<VertexId> out;
  out.reserve(ring.size());
  std::size_t at = static_cast<std::size_t>(it - ring.begin());
  for (std::size_t i = 0; i < ring.size(); ++i)
    out.push_back(ring[(at + i) % ring.size()]);
  return out;
}

int AugmentedGraph::left(VertexId u, VertexId v) const {
  auto it = remaining.find(EdgeKey(u, v));
  if (it == remaining.end())
    throw NotAnEdge("no edge between " + std::to_string(u) + " and " +
                    std::to_string(v));
  return it->second;
}

bool AugmentedGraph::duplicate_outstanding(VertexId u, VertexId v) const {
  EdgeKey k(u, v);
  auto d = duplicate_mult.find(k);
  if (d == duplicate_mult.end() || d->second == 0) return false;
  auto r = remaining.find(k);
  return r != remaining.end() && r->second >= 1;
}

void AugmentedGraph::consume(VertexId u, VertexId v) {
  auto it = remaining.find(EdgeKey(u, v));
  if (it == remaining.end())
    throw NotAnEdge("no edge between " + std::to_string(u) + " and " +
                    std::to_string(v));
  if (it->second <= 0)
    throw EdgeExhausted("edge " + pair_str(u, v) +
                        " has no traversals left");
  --it->second;
}

AugmentedGraph consume_edge(AugmentedGraph ag, VertexId u, VertexId v) {
  ag.consume(u, v);
  return ag;
}

namespace {

// Matching of the odd-degree vertices of one ring, measured along the ring.
struct RingMatchProblem {
  std::vector<VertexId> ring;
  std::vector<double> edge_cost;       // cost of ring edge i -> i+1
  std::vector<std::size_t> odd_pos;    // ring positions of odd vertices
  double total = 0.0;
  std::vector<double> prefix;          // prefix[i]: cost from pos 0 to pos i

  double arc_forward(std::size_t p, std::size_t q) const {
    double d = prefix[q] - prefix[p];
    if (q < p) d += total;
    return d;
  }

  // Min arc between two ring positions plus the realized ring edges.
  std::pair<double, std::vector<EdgeKey>> pair_cost(std::size_t p,
                                                    std::size_t q) const {
    double fwd = arc_forward(p, q);
    double bwd = total - fwd;
    auto collect = [&](std::size_t from, std::size_t to) {
      std::vector<EdgeKey> out;
      for (std::size_t i = from; i != to; i = (i + 1) % ring.size())
        out.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
      std::sort(out.begin(), out.end());
      return out;
    };
    if (fwd < bwd) return {fwd, collect(p, q)};
    if (bwd < fwd) return {bwd, collect(q, p)};
    auto a = collect(p, q);
    auto b = collect(q, p);
    return {fwd, std::min(a, b)};
  }
};

using Multiset = std::vector<EdgeKey>;

struct MatchChoice {
  double cost = std::numeric_limits<double>::infinity();
  Multiset edges;
  std::vector<std::pair<VertexId, VertexId>> pairs;

  bool better_than(const MatchChoice& o) const {
    if (cost != o.cost) return cost < o.cost;
    return edges < o.edges;
  }
};

Multiset merge_sorted(const Multiset& a, const Multiset& b) {
  Multiset out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Exhaustive minimum over all pairings, ties broken by the lexicographically
// smallest duplicated-edge multiset. Fine up to 12 odd vertices.
void exhaustive_match(const RingMatchProblem& rp, std::vector<bool>& used,
                      MatchChoice& acc, MatchChoice& best) {
  std::size_t i = 0;
  while (i < used.size() && used[i]) ++i;
  if (i == used.size()) {
    if (acc.better_than(best)) best = acc;
    return;
  }
  used[i] = true;
  for (std::size_t j = i + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    auto [c, edges] = rp.pair_cost(rp.odd_pos[i], rp.odd_pos[j]);
    MatchChoice saved = acc;
    acc.cost += c;
    acc.edges = merge_sorted(acc.edges, edges);
    acc.pairs.push_back({rp.ring[rp.odd_pos[i]], rp.ring[rp.odd_pos[j]]});
    if (acc.cost < best.cost ||
        (acc.cost == best.cost && !(best.edges < acc.edges)))
      exhaustive_match(rp, used, acc, best);
    acc = std::move(saved);
    used[j] = false;
  }
  used[i] = false;
}

// Non-crossing interval DP for larger rings. Pairing chords on a cycle can
// always be uncrossed without extra cost, so restricting to non-crossing
// matchings keeps the minimum; ties inside the DP still prefer the smaller
// edge multiset.
class IntervalMatcher {
 public:
  explicit IntervalMatcher(const RingMatchProblem& rp) : rp_(rp) {
    n_ = rp.odd_pos.size();
    memo_.assign(n_ * n_, MatchChoice{});
    done_.assign(n_ * n_, false);
  }

  MatchChoice solve() {
    // Vertex 0's partner splits the cycle into two independent intervals.
    MatchChoice best;
    for (std::size_t j = 1; j < n_; j += 2) {
      auto [c, edges] = rp_.pair_cost(rp_.odd_pos[0], rp_.odd_pos[j]);
      MatchChoice cand;
      cand.cost = c;
      cand.edges = edges;
      cand.pairs = {{rp_.ring[rp_.odd_pos[0]], rp_.ring[rp_.odd_pos[j]]}};
      combine(cand, interval(1, j - 1));
      combine(cand, interval(j + 1, n_ - 1));
      if (cand.better_than(best)) best = cand;
    }
    return best;
  }

 private:
  static void combine(MatchChoice& into, const MatchChoice& part) {
    into.cost += part.cost;
    into.edges = merge_sorted(into.edges, part.edges);
    into.pairs.insert(into.pairs.end(), part.pairs.begin(), part.pairs.end());
  }

  const MatchChoice& interval(std::size_t i, std::size_t j) {
    static const MatchChoice empty{0.0, {}, {}};
    if (i > j || j >= n_) return empty;
    std::size_t id = i * n_ + j;
    if (done_[id]) return memo_[id];
    MatchChoice best;
    for (std::size_t m = i + 1; m <= j; m += 2) {
      auto [c, edges] = rp_.pair_cost(rp_.odd_pos[i], rp_.odd_pos[m]);
      MatchChoice cand;
      cand.cost = c;
      cand.edges = edges;
      cand.pairs = {{rp_.ring[rp_.odd_pos[i]], rp_.ring[rp_.odd_pos[m]]}};
      combine(cand, interval(i + 1, m - 1));
      combine(cand, interval(m + 1, j));
      if (cand.better_than(best)) best = cand;
    }
    done_[id] = true;
    memo_[id] = std::move(best);
    return memo_[id];
  }

  const RingMatchProblem& rp_;
  std::size_t n_ = 0;
  std::vector<MatchChoice> memo_;
  std::vector<bool> done_;
};

}  // namespace

AugmentedGraph eulerian_augment(const TransitionGraph& g) {
  Adjacency adj(g);
  AugmentedGraph ag;
  for (const auto& e : g.edges) ag.remaining[EdgeKey(e.u, e.v)] = 1;

  std::map<VertexId, int> degree;
  for (const auto& e : g.edges) {
    degree[e.u]++;
    degree[e.v]++;
  }
  auto odd = [&](VertexId v) { return degree[v] % 2 == 1; };

  std::vector<const std::vector<VertexId>*> rings;
  rings.push_back(&g.headland_ring);
  for (const auto& r : g.island_rings) rings.push_back(&r);

  std::set<VertexId> on_ring;
  MatchChoice total;
  total.cost = 0.0;
  for (const auto* ring : rings) {
    RingMatchProblem rp;
    rp.ring = *ring;
    rp.prefix.resize(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) {
      rp.prefix[i] = rp.total;
      rp.total += adj.cost((*ring)[i], (*ring)[(i + 1) % ring->size()]);
      on_ring.insert((*ring)[i]);
      if (odd((*ring)[i])) rp.odd_pos.push_back(i);
    }
    if (rp.odd_pos.size() % 2 != 0)
      throw AugmentationInfeasible(
          "ring through vertex " + std::to_string(ring->front()) + " has " +
          std::to_string(rp.odd_pos.size()) +
          " odd-degree vertices; no on-ring pairing exists");
    if (rp.odd_pos.empty()) continue;

    MatchChoice ring_best;
    if (rp.odd_pos.size() <= 12) {
      std::vector<bool> used(rp.odd_pos.size(), false);
      MatchChoice acc;
      acc.cost = 0.0;
      exhaustive_match(rp, used, acc, ring_best);
    } else {
      ring_best = IntervalMatcher(rp).solve();
    }
    total.cost += ring_best.cost;
    total.edges = merge_sorted(total.edges, ring_best.edges);
    total.pairs.insert(total.pairs.end(), ring_best.pairs.begin(),
                       ring_best.pairs.end());
  }

  for (const auto& [v, d] : degree) {
    if (d % 2 == 1 && !on_ring.count(v))
      throw AugmentationInfeasible("odd-degree vertex " + std::to_string(v) +
                                   " is not on any ring");
  }

  ag.duplicates = total.edges;
  ag.duplicate_cost = total.cost;
  ag.matched_pairs = total.pairs;
  for (const auto& k : ag.duplicates) {
    ag.duplicate_mult[k]++;
    ag.remaining[k]++;
  }
  return ag;
}

}  // namespace fieldroute
