#include <algorithm>

#include "doctest.h"
#include "fieldroute/oracle.hpp"
#include "fieldroute/synth.hpp"

using namespace fieldroute;

namespace {

TransitionGraph ring_only(int n) {
  TransitionGraph g;
  g.name = "ring" + std::to_string(n);
  g.entry = 0;
  for (VertexId v = 0; v < n; ++v) {
    g.vertices.push_back({v, VertexClass::headland, {}, {}});
    g.headland_ring.push_back(v);
    g.edges.push_back({v, (v + 1) % n, EdgeClass::headland, 1.0});
  }
  return g;
}

}  // namespace

TEST_CASE("fixtures pass validation") {
  for (const TransitionGraph& g :
       {synth::hex8(), synth::field1(), synth::field2(), synth::field3()}) {
    ValidationReport rep = validate_graph(g);
    CAPTURE(g.name);
    for (const Violation& v : rep.violations) CAPTURE(v.code + ": " + v.detail);
    CHECK(rep.ok);
  }
  CHECK(synth::field1().vertices.size() == 24);
  CHECK(synth::field2().vertices.size() == 101);
  CHECK(synth::field3().vertices.size() == 102);
}

TEST_CASE("validation is pure") {
  TransitionGraph g = synth::hex8();
  ValidationReport a = validate_graph(g);
  ValidationReport b = validate_graph(g);
  CHECK(a.ok == b.ok);
  CHECK(a.violations.size() == b.violations.size());
}

TEST_CASE("degree violation reported") {
  TransitionGraph g = synth::hex8();
  g.edges.push_back({1, 4, EdgeClass::interior, 3.0});  // vertex 1 now deg 4
  ValidationReport rep = validate_graph(g);
  CHECK_FALSE(rep.ok);
  CHECK(rep.has("DegreeViolation"));
}

TEST_CASE("structural violations") {
  SUBCASE("self loop") {
    TransitionGraph g = synth::hex8();
    g.edges.push_back({3, 3, EdgeClass::interior, 1.0});
    CHECK(validate_graph(g).has("SelfLoop"));
  }
  SUBCASE("unknown vertex in edge") {
    TransitionGraph g = synth::hex8();
    g.edges.push_back({1, 99, EdgeClass::interior, 1.0});
    CHECK(validate_graph(g).has("UnknownVertex"));
  }
  SUBCASE("negative cost") {
    TransitionGraph g = synth::hex8();
    g.edges[0].cost = -1.0;
    CHECK(validate_graph(g).has("NegativeCost"));
  }
  SUBCASE("duplicate undirected edge") {
    TransitionGraph g = synth::hex8();
    g.edges.push_back({6, 1, EdgeClass::interior, 2.0});
    CHECK(validate_graph(g).has("DuplicateEdge"));
  }
  SUBCASE("duplicate vertex id") {
    TransitionGraph g = synth::hex8();
    g.vertices.push_back({3, VertexClass::headland, {}, {}});
    CHECK(validate_graph(g).has("DuplicateVertex"));
  }
  SUBCASE("entry must be headland") {
    TransitionGraph g = synth::field2();
    g.entry = 85;  // island vertex
    CHECK(validate_graph(g).has("EntryNotHeadland"));
  }
  SUBCASE("ring too small") {
    TransitionGraph g = ring_only(2);
    CHECK(validate_graph(g).has("RingSize"));
  }
  SUBCASE("headland vertex not on the ring") {
    TransitionGraph g = synth::hex8();
    g.headland_ring.pop_back();
    ValidationReport rep = validate_graph(g);
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("ring order disagrees with edges") {
    TransitionGraph g = synth::hex8();
    std::swap(g.headland_ring[3], g.headland_ring[4]);
    CHECK(validate_graph(g).has("RingMismatch"));
  }
  SUBCASE("disconnected component") {
    TransitionGraph g = synth::hex8();
    g.vertices.push_back({100, VertexClass::island, {}, {}});
    g.vertices.push_back({101, VertexClass::island, {}, {}});
    g.vertices.push_back({102, VertexClass::island, {}, {}});
    g.island_rings.push_back({100, 101, 102});
    g.edges.push_back({100, 101, EdgeClass::island_headland, 1.0});
    g.edges.push_back({101, 102, EdgeClass::island_headland, 1.0});
    g.edges.push_back({102, 100, EdgeClass::island_headland, 1.0});
    CHECK(validate_graph(g).has("Disconnected"));
  }
  SUBCASE("island edge classed as interior") {
    TransitionGraph g = synth::field2();
    for (Edge& e : g.edges)
      if (e.cls == EdgeClass::island_headland) {
        e.cls = EdgeClass::interior;
        break;
      }
    ValidationReport rep = validate_graph(g);
    CHECK_FALSE(rep.ok);
  }
}

TEST_CASE("orientation warning is advisory") {
  TransitionGraph g = synth::hex8();
  std::reverse(g.headland_ring.begin(), g.headland_ring.end());
  ValidationReport rep = validate_graph(g);
  CHECK(rep.has("OrientationWarning"));
  CHECK(rep.ok);  // ring edges still consistent, only coordinates disagree
}

TEST_CASE("adjacency basics") {
  TransitionGraph g = synth::hex8();
  Adjacency adj(g);
  CHECK(adj.has_vertex(7));
  CHECK_FALSE(adj.has_vertex(8));
  CHECK(adj.has_edge(2, 5));
  CHECK(adj.has_edge(5, 2));
  CHECK_FALSE(adj.has_edge(0, 4));
  CHECK(adj.cost(1, 6) == 3.0);
  CHECK_THROWS_AS((void)adj.vertex(42), InvalidEndpoint);
  CHECK_THROWS_AS((void)adj.edge(0, 4), NotAnEdge);

  auto& nb = adj.neighbors(1);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0].first == 0);
  CHECK(nb[1].first == 2);
  CHECK(nb[2].first == 6);
}

TEST_CASE("direction rule binds only headland edges") {
  TransitionGraph g = synth::field2();
  Adjacency adj(g);
  CHECK(adj.direction_ok(0, 1));
  CHECK_FALSE(adj.direction_ok(1, 0));
  // interior stub and island ring edges go both ways
  CHECK(adj.direction_ok(6, 85));
  CHECK(adj.direction_ok(85, 6));
  CHECK(adj.direction_ok(85, 88));
  CHECK(adj.direction_ok(88, 85));
}

TEST_CASE("ring_from rotates the declared ring") {
  TransitionGraph g = synth::hex8();
  Adjacency adj(g);
  std::vector<VertexId> want{3, 4, 5, 6, 7, 0, 1, 2};
  CHECK(adj.ring_from(3) == want);
  CHECK_THROWS_AS(adj.ring_from(99), InvalidEndpoint);
}

TEST_CASE("augmentation of hex8") {
  AugmentedGraph ag = eulerian_augment(synth::hex8());
  std::vector<EdgeKey> want{EdgeKey(1, 2), EdgeKey(5, 6)};
  CHECK(ag.duplicates == want);
  CHECK(ag.duplicate_cost == 2.0);
}

TEST_CASE("augmentation of field1 pairs the entry section") {
  AugmentedGraph ag = eulerian_augment(synth::field1());
  std::vector<EdgeKey> want{EdgeKey(0, 1),   EdgeKey(0, 22),  EdgeKey(2, 3),
                            EdgeKey(4, 5),   EdgeKey(6, 7),   EdgeKey(8, 9),
                            EdgeKey(10, 11), EdgeKey(12, 13), EdgeKey(14, 15),
                            EdgeKey(16, 17), EdgeKey(18, 19), EdgeKey(20, 21)};
  std::sort(want.begin(), want.end());
  CHECK(ag.duplicates == want);
  CHECK(ag.duplicate_cost == 108.0);
}

TEST_CASE("pure ring needs no duplicates") {
  AugmentedGraph ag = eulerian_augment(ring_only(5));
  CHECK(ag.duplicates.empty());
  CHECK(ag.duplicate_cost == 0.0);
}

TEST_CASE("remaining counts and consume") {
  TransitionGraph g = synth::hex8();
  AugmentedGraph ag = eulerian_augment(g);
  CHECK(ag.left(1, 2) == 2);
  CHECK(ag.left(0, 1) == 1);
  CHECK(ag.left(2, 5) == 1);
  CHECK(ag.duplicate_outstanding(1, 2));
  CHECK_FALSE(ag.duplicate_outstanding(0, 1));

  ag.consume(1, 2);
  CHECK(ag.left(1, 2) == 1);
  CHECK(ag.duplicate_outstanding(2, 1));
  ag.consume(2, 1);
  CHECK(ag.left(1, 2) == 0);
  CHECK_FALSE(ag.duplicate_outstanding(1, 2));
  CHECK_THROWS_AS(ag.consume(1, 2), EdgeExhausted);

  ag.consume(2, 5);
  CHECK(ag.left(2, 5) == 0);
  CHECK_THROWS_AS(ag.consume(2, 5), EdgeExhausted);
  CHECK_THROWS_AS(ag.consume(0, 4), NotAnEdge);

  AugmentedGraph copy = consume_edge(eulerian_augment(g), 0, 1);
  CHECK(copy.left(0, 1) == 0);
}

TEST_CASE("augmentation leaves every vertex even") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    TransitionGraph g = synth::random_field(seed);
    REQUIRE(validate_graph(g).ok);
    AugmentedGraph ag = eulerian_augment(g);
    std::map<VertexId, int> deg;
    for (const Edge& e : g.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (const EdgeKey& k : ag.duplicates) {
      ++deg[k.a];
      ++deg[k.b];
    }
    for (auto& [v, d] : deg) {
      CAPTURE(seed);
      CAPTURE(v);
      CHECK(d % 2 == 0);
    }
    for (const EdgeKey& k : ag.duplicates) {
      Adjacency adj(g);
      CHECK(adj.edge(k.a, k.b).cls != EdgeClass::interior);
    }
  }
}

TEST_CASE("augmentation cost matches exhaustive matching") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    TransitionGraph g = synth::random_field(seed);
    AugmentedGraph ag = eulerian_augment(g);
    MatchingOracle ref = brute_force_matching(g);
    CAPTURE(seed);
    CHECK(ag.duplicate_cost == ref.cost);
  }
}

TEST_CASE("odd parity inside one ring is infeasible") {
  // A triangle island hanging off the ring by a single stub leaves that
  // island ring with one odd vertex; no on-ring pairing can fix it.
  TransitionGraph g = ring_only(4);
  g.vertices.push_back({10, VertexClass::island, {}, {}});
  g.vertices.push_back({11, VertexClass::island, {}, {}});
  g.vertices.push_back({12, VertexClass::island, {}, {}});
  g.island_rings.push_back({10, 11, 12});
  g.edges.push_back({10, 11, EdgeClass::island_headland, 1.0});
  g.edges.push_back({11, 12, EdgeClass::island_headland, 1.0});
  g.edges.push_back({12, 10, EdgeClass::island_headland, 1.0});
  g.edges.push_back({0, 10, EdgeClass::interior, 1.0});
  REQUIRE(validate_graph(g).ok);
  CHECK_THROWS_AS(eulerian_augment(g), AugmentationInfeasible);
  CHECK_THROWS_AS(brute_force_matching(g), AugmentationInfeasible);
}
