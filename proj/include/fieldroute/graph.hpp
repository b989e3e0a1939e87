#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fieldroute/errors.hpp"

namespace fieldroute {

using VertexId = int;

enum class VertexClass { headland, island };
enum class EdgeClass { headland, island_headland, interior };

struct Vertex {
  VertexId id = 0;
  VertexClass cls = VertexClass::headland;
  std::optional<double> x;
  std::optional<double> y;
  bool operator==(const Vertex&) const = default;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeClass cls = EdgeClass::interior;
  double cost = 0.0;
  bool operator==(const Edge&) const = default;
};

// Undirected edge key; endpoints are stored low-high so (u,v) == (v,u).
struct EdgeKey {
  VertexId a = 0;
  VertexId b = 0;
  EdgeKey() = default;
  EdgeKey(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}
  auto operator<=>(const EdgeKey&) const = default;
};

// A field as a graph of headland/island rings plus interior tracks.
// headland_ring lists the headland vertices in counter-clockwise driving
// order; each island ring does the same for one obstacle boundary.
struct TransitionGraph {
  std::string name;
  VertexId entry = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<VertexId> headland_ring;
  std::vector<std::vector<VertexId>> island_rings;
  bool operator==(const TransitionGraph&) const = default;
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  bool has(const std::string& code) const;
};

// Checks structure, classes, degrees, ring consistency, connectivity and
// costs. Never throws; all problems come back as violations. A mismatch
// between coordinate orientation and the declared ring order is reported
// with code "OrientationWarning" but does not clear `ok`.
ValidationReport validate_graph(const TransitionGraph& g);

// Neighbor/edge index over a graph that passed validation.
class Adjacency {
 public:
  explicit Adjacency(const TransitionGraph& g);
  // The index keeps a pointer into `g`; a temporary would dangle.
  explicit Adjacency(TransitionGraph&&) = delete;

  const TransitionGraph& graph() const { return *g_; }
  bool has_vertex(VertexId v) const { return vindex_.count(v) != 0; }
  const Vertex& vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  const Edge& edge(VertexId u, VertexId v) const;  // throws NotAnEdge
  double cost(VertexId u, VertexId v) const;

  // Neighbors of v sorted by vertex id, paired with the edge index.
  const std::vector<std::pair<VertexId, int>>& neighbors(VertexId v) const;

  // False exactly when (u,v) is a headland-class edge driven against the
  // declared ring direction. Island-headland and interior edges are free.
  bool direction_ok(VertexId u, VertexId v) const;

  // Main headland ring rotated so it starts at `start`, throws
  // InvalidEndpoint when `start` is not on the ring.
  std::vector<VertexId> ring_from(VertexId start) const;

 private:
  const TransitionGraph* g_;
  std::map<VertexId, int> vindex_;
  std::map<EdgeKey, int> eindex_;
  std::map<VertexId, std::vector<std::pair<VertexId, int>>> neighbors_;
  std::map<VertexId, VertexId> ring_next_;  // CCW successor on the main ring
};

// Traversal bookkeeping for one planning run: how many copies of each edge
// are still to be driven (one base copy plus any duplicates), and how many
// of the copies came from the Eulerian augmentation.
struct AugmentedGraph {
  std::vector<EdgeKey> duplicates;  // sorted multiset of duplicated edges
  double duplicate_cost = 0.0;
  std::vector<std::pair<VertexId, VertexId>> matched_pairs;
  std::map<EdgeKey, int> remaining;
  std::map<EdgeKey, int> duplicate_mult;

  int left(VertexId u, VertexId v) const;
  // True while the edge still has an undriven copy and was duplicated at
  // all: those are the transitions that spawn subtours.
  bool duplicate_outstanding(VertexId u, VertexId v) const;
  void consume(VertexId u, VertexId v);  // throws EdgeExhausted / NotAnEdge
};

// Minimum-cost pairing of odd-degree vertices with distances measured on
// the headland and island-headland edges only; interior edges are never
// duplicated. Throws AugmentationInfeasible when some ring holds an odd
// number of odd-degree vertices (no pairing can stay on that ring).
AugmentedGraph eulerian_augment(const TransitionGraph& g);

// Value-style wrapper over AugmentedGraph::consume.
AugmentedGraph consume_edge(AugmentedGraph ag, VertexId u, VertexId v);

}  // namespace fieldroute
