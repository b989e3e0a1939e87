#include "fieldroute/synth.hpp"

#include <cmath>
#include <set>
#include <string>

#include "fieldroute/partial_coverage.hpp"

namespace fieldroute {
namespace synth {

namespace {

constexpr double kPi = 3.14159265358979323846;

void add_vertex(TransitionGraph& g, VertexId id, VertexClass cls, double x,
                double y) {
  g.vertices.push_back(Vertex{id, cls, x, y});
}

void add_edge(TransitionGraph& g, VertexId u, VertexId v, EdgeClass cls,
              double cost) {
  g.edges.push_back(Edge{u, v, cls, cost});
}

// Common ladder scaffold: entry vertex 0 at the bottom middle, right rail
// 1..n going up, left rail n+1..2n coming back down (n+1 at the top), and
// optionally a split vertex 2n+1 in the middle of the top edge. Rails are
// 40 m apart with 10 m between rows.
struct Ladder {
  TransitionGraph g;
  int rail;        // vertices per rail
  int rows;        // rows that may carry a track
  bool has_split;

  VertexId right(int k) const { return k; }
  VertexId left(int k) const { return 2 * rail + 1 - k; }
};

Ladder make_ladder(const std::string& name, int rail, bool with_split,
                   double entry_cost, double split_cost) {
  Ladder lad;
  lad.g.name = name;
  lad.g.entry = 0;
  lad.rail = rail;
  lad.rows = with_split ? rail : rail - 1;
  lad.has_split = with_split;

  add_vertex(lad.g, 0, VertexClass::headland, 20.0, 0.0);
  for (int k = 1; k <= rail; ++k)
    add_vertex(lad.g, k, VertexClass::headland, 40.0, 10.0 * k);
  for (int k = rail; k >= 1; --k)
    add_vertex(lad.g, lad.left(k), VertexClass::headland, 0.0, 10.0 * k);
  if (with_split)
    add_vertex(lad.g, 2 * rail + 1, VertexClass::headland, 20.0,
               10.0 * rail + 10.0);

  auto& ring = lad.g.headland_ring;
  ring.push_back(0);
  for (int k = 1; k <= rail; ++k) ring.push_back(lad.right(k));
  if (with_split) ring.push_back(2 * rail + 1);
  for (int k = rail; k >= 1; --k) ring.push_back(lad.left(k));

  for (std::size_t i = 0; i < ring.size(); ++i) {
    VertexId u = ring[i];
    VertexId v = ring[(i + 1) % ring.size()];
    double c = 10.0;
    if (u == 0 || v == 0) c = entry_cost;
    if (with_split && (u == 2 * rail + 1 || v == 2 * rail + 1))
      c = split_cost;
    add_edge(lad.g, u, v, EdgeClass::headland, c);
  }
  return lad;
}

// Four-vertex island centred between the rails across rows k and k+1. Takes
// the place of those rows' tracks; crossing through it costs the same 40 m.
void add_island4(TransitionGraph& g, const Ladder& lad, int k,
                 VertexId base) {
  double y = 10.0 * k;
  VertexId a = base, b = base + 1, c = base + 2, d = base + 3;
  add_vertex(g, a, VertexClass::island, 25.0, y);
  add_vertex(g, b, VertexClass::island, 15.0, y);
  add_vertex(g, c, VertexClass::island, 15.0, y + 10.0);
  add_vertex(g, d, VertexClass::island, 25.0, y + 10.0);
  g.island_rings.push_back({a, d, c, b});
  add_edge(g, a, d, EdgeClass::island_headland, 5.0);
  add_edge(g, d, c, EdgeClass::island_headland, 5.0);
  add_edge(g, c, b, EdgeClass::island_headland, 5.0);
  add_edge(g, b, a, EdgeClass::island_headland, 5.0);
  add_edge(g, lad.right(k), a, EdgeClass::interior, 17.5);
  add_edge(g, lad.left(k), b, EdgeClass::interior, 17.5);
  add_edge(g, lad.right(k + 1), d, EdgeClass::interior, 17.5);
  add_edge(g, lad.left(k + 1), c, EdgeClass::interior, 17.5);
}

TransitionGraph ladder_field(const std::string& name, int rail,
                             bool with_split, double entry_cost,
                             double split_cost,
                             const std::vector<int>& island_rows) {
  Ladder lad =
      make_ladder(name, rail, with_split, entry_cost, split_cost);
  std::set<int> skip;
  for (int k : island_rows) {
    skip.insert(k);
    skip.insert(k + 1);
  }
  for (int k = 1; k <= lad.rows; ++k)
    if (!skip.count(k))
      add_edge(lad.g, lad.right(k), lad.left(k), EdgeClass::interior, 40.0);
  VertexId base = static_cast<VertexId>(lad.g.vertices.size());
  for (int k : island_rows) {
    add_island4(lad.g, lad, k, base);
    base += 4;
  }
  return lad.g;
}

}  // namespace

TransitionGraph hex8() {
  TransitionGraph g;
  g.name = "hex8";
  g.entry = 0;
  for (VertexId k = 0; k < 8; ++k) {
    double th = (22.5 + 45.0 * k) * kPi / 180.0;
    add_vertex(g, k, VertexClass::headland, 4.0 * std::cos(th),
               4.0 * std::sin(th));
    g.headland_ring.push_back(k);
  }
  for (VertexId k = 0; k < 8; ++k)
    add_edge(g, k, (k + 1) % 8, EdgeClass::headland, 1.0);
  add_edge(g, 1, 6, EdgeClass::interior, 3.0);
  add_edge(g, 2, 5, EdgeClass::interior, 3.0);
  return g;
}

TransitionGraph field1() {
  TransitionGraph g = make_ladder("field1", 11, true, 4.0, 5.0).g;
  for (int k = 1; k <= 11; ++k)
    add_edge(g, k, 23 - k, EdgeClass::interior, 40.0);
  return g;
}

TransitionGraph field2() {
  return ladder_field("field2", 42, false, 10.0, 0.0, {6, 14, 22, 30});
}

TransitionGraph field3() {
  return ladder_field("field3", 38, true, 4.0, 5.0, {6, 12, 18, 24, 30, 34});
}

FieldComplex tworing() {
  FieldComplex fc;
  fc.main.name = "tworing-main";
  fc.main.entry = 0;
  for (VertexId k = 0; k < 6; ++k) {
    double th = (90.0 + 60.0 * k) * kPi / 180.0;
    add_vertex(fc.main, k, VertexClass::headland, 10.0 * std::cos(th),
               10.0 * std::sin(th));
    fc.main.headland_ring.push_back(k);
  }
  add_edge(fc.main, 0, 1, EdgeClass::headland, 2.0);
  add_edge(fc.main, 1, 2, EdgeClass::headland, 2.0);
  add_edge(fc.main, 2, 3, EdgeClass::headland, 1.0);
  add_edge(fc.main, 3, 4, EdgeClass::headland, 1.0);
  add_edge(fc.main, 4, 5, EdgeClass::headland, 1.0);
  add_edge(fc.main, 5, 0, EdgeClass::headland, 2.0);
  add_edge(fc.main, 2, 5, EdgeClass::interior, 2.0);

  Subfield sf;
  sf.graph.name = "tworing-sub";
  sf.graph.entry = 1;
  // 0..3 play the roles A..D; A and B coincide with main 3 and 2.
  add_vertex(sf.graph, 0, VertexClass::headland, 0.0, -10.0);
  add_vertex(sf.graph, 1, VertexClass::headland, -8.66, -5.0);
  add_vertex(sf.graph, 2, VertexClass::headland, -12.66, -11.93);
  add_vertex(sf.graph, 3, VertexClass::headland, -4.0, -16.93);
  sf.graph.headland_ring = {0, 1, 2, 3};
  add_edge(sf.graph, 0, 1, EdgeClass::headland, 1.0);
  add_edge(sf.graph, 1, 2, EdgeClass::headland, 2.0);
  add_edge(sf.graph, 2, 3, EdgeClass::headland, 2.0);
  add_edge(sf.graph, 3, 0, EdgeClass::headland, 1.0);
  add_edge(sf.graph, 1, 3, EdgeClass::interior, 2.0);
  sf.shared_path = {{2, 1}, {3, 0}};

  fc.subfields.push_back(std::move(sf));
  return fc;
}

TransitionGraph random_field(std::uint64_t seed, int max_islands) {
  SplitMix64 rng(seed);
  const int n = 3 + static_cast<int>(rng.next() % 4);  // rungs per rail
  TransitionGraph g;
  g.name = "random-" + std::to_string(seed);
  g.entry = 0;

  for (int k = 1; k <= n; ++k)
    add_vertex(g, k - 1, VertexClass::headland, static_cast<double>(n),
               static_cast<double>(k));
  for (int k = n; k >= 1; --k)
    add_vertex(g, 2 * n - k, VertexClass::headland, 0.0,
               static_cast<double>(k));
  for (VertexId v = 0; v < 2 * n; ++v) {
    g.headland_ring.push_back(v);
    add_edge(g, v, (v + 1) % (2 * n), EdgeClass::headland, 1.0);
  }

  auto quarter = [&](int lo_quarters, int hi_quarters) {
    return static_cast<double>(
               lo_quarters +
               static_cast<int>(rng.next() %
                                static_cast<std::uint64_t>(
                                    hi_quarters - lo_quarters + 1))) /
           4.0;
  };

  // Shortest headland arc between the two ends of row k. Tracks and stub
  // pairs are priced at or above this detour so that duplicating ring edges
  // is never beaten by re-driving an interior edge.
  auto ring_gap = [n](int k) {
    return std::min(2 * n - 2 * k + 1, 2 * k - 1);
  };

  int budget = 14 - 2 * n;
  std::vector<int> rows;
  for (int k = 2; k <= n - 1; ++k) rows.push_back(k);

  int islands = 0;
  int want = std::min(max_islands, budget / 5);
  want = std::min<int>(want, static_cast<int>(rows.size()));
  if (want > 0) islands = static_cast<int>(rng.next() % (want + 1));

  VertexId base = 2 * n;
  for (int i = 0; i < islands; ++i) {
    std::size_t pick = rng.next() % rows.size();
    int k = rows[pick];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick));
    double y = static_cast<double>(k);
    VertexId a = base, b = base + 1, c = base + 2;
    add_vertex(g, a, VertexClass::island, 0.6 * n, y);
    add_vertex(g, c, VertexClass::island, 0.5 * n, y + 0.4);
    add_vertex(g, b, VertexClass::island, 0.4 * n, y);
    g.island_rings.push_back({a, c, b});
    add_edge(g, a, c, EdgeClass::island_headland, 0.5);
    add_edge(g, c, b, EdgeClass::island_headland, 0.5);
    add_edge(g, b, a, EdgeClass::island_headland, 0.5);
    double half = ring_gap(k) / 2.0;
    add_edge(g, k - 1, a, EdgeClass::interior, half + quarter(2, 4));
    add_edge(g, 2 * n - k, b, EdgeClass::interior, half + quarter(2, 4));
    base += 3;
    budget -= 5;
  }
  for (int k : rows) {
    if (budget <= 0) break;
    if (rng.next() % 2 == 0) continue;
    add_edge(g, k - 1, 2 * n - k, EdgeClass::interior,
             ring_gap(k) + quarter(0, 4));
    --budget;
  }
  return g;
}

}  // namespace synth
}  // namespace fieldroute
