#include "doctest.h"
#include "fieldroute/full_coverage.hpp"
#include "fieldroute/oracle.hpp"
#include "fieldroute/synth.hpp"

using namespace fieldroute;

namespace {

const std::vector<VertexId> kField1Tour{
    0,  1,  22, 0,  1,  2,  3,  20, 21, 2,  3,  4,  5,  18, 19, 4,
    5,  6,  7,  16, 17, 6,  7,  8,  9,  14, 15, 8,  9,  10, 11, 12,
    13, 10, 11, 23, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0};

}  // namespace

TEST_CASE("headland trace is one rotated lap") {
  TransitionGraph g = synth::hex8();
  Route lap = trace_headland(g, 3);
  CHECK(lap.sequence == std::vector<VertexId>{3, 4, 5, 6, 7, 0, 1, 2, 3});
  CHECK(lap.cost == 8.0);
  CHECK_THROWS_AS(trace_headland(g, 42), InvalidEndpoint);

  TransitionGraph f2 = synth::field2();
  CHECK_THROWS_AS(trace_headland(f2, 85), InvalidEndpoint);  // island vertex
}

TEST_CASE("route cost sums the traversed edges") {
  TransitionGraph g = synth::hex8();
  CHECK(route_cost(g, {0, 1, 2, 5}) == 5.0);
  CHECK(route_cost(g, {4}) == 0.0);
  CHECK(route_cost(g, {}) == 0.0);
  CHECK_THROWS_AS(route_cost(g, {0, 4}), NotAnEdge);
}

TEST_CASE("hex8 closed tour") {
  FullPlan plan = plan_full_coverage(synth::hex8(), 0, 0);
  CHECK(plan.route.sequence ==
        std::vector<VertexId>{0, 1, 2, 5, 6, 1, 2, 3, 4, 5, 6, 7, 0});
  CHECK(plan.route.cost == 16.0);
  CHECK(plan.duplicate_cost == 2.0);
}

TEST_CASE("hex8 open tour triple-covers the bridge edge") {
  FullPlan plan = plan_full_coverage(synth::hex8(), 0, 4);
  CHECK(plan.route.sequence ==
        std::vector<VertexId>{0, 1, 2, 5, 6, 1, 2, 3, 4, 5, 6, 7, 0, 1, 2, 3,
                              4});
  CHECK(plan.route.cost == 20.0);
  CHECK(plan.route.traversals.at(EdgeKey(1, 2)) == 3);
}

TEST_CASE("field1 closed tour reproduces the published sequence") {
  FullPlan plan = plan_full_coverage(synth::field1(), 0, 0);
  CHECK(plan.route.sequence == kField1Tour);
  CHECK(plan.route.cost == 766.0);
}

TEST_CASE("endpoints must be headland vertices") {
  TransitionGraph g = synth::field2();
  CHECK_THROWS_AS(plan_full_coverage(g, 85, 85), InvalidEndpoint);
  CHECK_THROWS_AS(plan_full_coverage(g, 0, 85), InvalidEndpoint);
  CHECK_THROWS_AS(plan_full_coverage(g, 0, 4242), InvalidEndpoint);
}

TEST_CASE("every edge is covered on the big fixtures") {
  for (const TransitionGraph& g :
       {synth::hex8(), synth::field1(), synth::field2(), synth::field3()}) {
    FullPlan plan = plan_full_coverage(g, g.entry, g.entry);
    CAPTURE(g.name);
    CHECK(plan.route.sequence.front() == g.entry);
    CHECK(plan.route.sequence.back() == g.entry);
    for (const Edge& e : g.edges) {
      auto it = plan.route.traversals.find(EdgeKey(e.u, e.v));
      REQUIRE(it != plan.route.traversals.end());
      CHECK(it->second >= 1);
      CHECK(it->second <= 2);
      if (e.cls == EdgeClass::interior) CHECK(it->second == 1);
    }
  }
}

TEST_CASE("closed tours match the exhaustive optimum") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    TransitionGraph g = synth::random_field(seed);
    FullPlan plan = plan_full_coverage(g, g.entry, g.entry);
    OracleResult ref = brute_force_full_coverage(g, g.entry, g.entry);
    CAPTURE(seed);
    CHECK(plan.route.cost == ref.cost);
  }
}

TEST_CASE("open tours match the exhaustive optimum") {
  for (std::uint64_t seed = 40; seed < 55; ++seed) {
    TransitionGraph g = synth::random_field(seed);
    VertexId end = g.headland_ring[g.headland_ring.size() / 2];
    FullPlan plan = plan_full_coverage(g, g.entry, end);
    OracleResult ref = brute_force_full_coverage(g, g.entry, end);
    CAPTURE(seed);
    CHECK(plan.route.cost == ref.cost);
  }
}

TEST_CASE("tour cost decomposes into base plus duplicates") {
  for (const TransitionGraph& g : {synth::hex8(), synth::field1()}) {
    double base = 0.0;
    for (const Edge& e : g.edges) base += e.cost;
    FullPlan plan = plan_full_coverage(g, g.entry, g.entry);
    CHECK(plan.route.cost == base + plan.duplicate_cost);
  }
}
