#include "fieldroute/subfield.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fieldroute {

namespace {

std::string pair_str(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Position of `v` in `ring`, or -1.
int ring_pos(const std::vector<VertexId>& ring, VertexId v) {
  auto it = std::find(ring.begin(), ring.end(), v);
  return it == ring.end() ? -1 : static_cast<int>(it - ring.begin());
}

}  // namespace

void validate_complex(const FieldComplex& fc) {
  Adjacency main_adj(fc.main);
  for (std::size_t s = 0; s < fc.subfields.size(); ++s) {
    const Subfield& sf = fc.subfields[s];
    const auto& sp = sf.shared_path;
    std::string where = "subfield " + std::to_string(s) + ": ";
    if (sp.size() < 2)
      throw SharedPathMismatch(where +
                               "shared path needs at least two vertices");
    Adjacency sub_adj(sf.graph);

    for (const SharedVertex& sv : sp) {
      if (!main_adj.has_vertex(sv.main_id) ||
          main_adj.vertex(sv.main_id).cls != VertexClass::headland)
        throw SharedPathMismatch(where + "main vertex " +
                                 std::to_string(sv.main_id) +
                                 " is not a headland vertex");
      if (!sub_adj.has_vertex(sv.sub_id) ||
          sub_adj.vertex(sv.sub_id).cls != VertexClass::headland)
        throw SharedPathMismatch(where + "subfield vertex " +
                                 std::to_string(sv.sub_id) +
                                 " is not a headland vertex");
    }
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = i + 1; j < sp.size(); ++j)
        if (sp[i].main_id == sp[j].main_id || sp[i].sub_id == sp[j].sub_id)
          throw SharedPathMismatch(where + "shared path repeats a vertex");

    const auto& main_ring = fc.main.headland_ring;
    const auto& sub_ring = sf.graph.headland_ring;
    for (std::size_t i = 0; i + 1 < sp.size(); ++i) {
      int mp = ring_pos(main_ring, sp[i].main_id);
      int mq = ring_pos(main_ring, sp[i + 1].main_id);
      if (mp < 0 || mq < 0 ||
          mq != (mp + 1) % static_cast<int>(main_ring.size()))
        throw SharedPathMismatch(
            where + "main vertices " + pair_str(sp[i].main_id, sp[i + 1].main_id) +
            " are not consecutive on the main ring");
      // The pairs run with the main ring, hence against the subfield ring.
      int sq = ring_pos(sub_ring, sp[i].sub_id);
      int sr = ring_pos(sub_ring, sp[i + 1].sub_id);
      if (sq < 0 || sr < 0 ||
          sq != (sr + 1) % static_cast<int>(sub_ring.size()))
        throw SharedPathMismatch(
            where + "subfield vertices " + pair_str(sp[i].sub_id, sp[i + 1].sub_id) +
            " do not run against the subfield ring");
      if (!main_adj.has_edge(sp[i].main_id, sp[i + 1].main_id) ||
          !sub_adj.has_edge(sp[i].sub_id, sp[i + 1].sub_id))
        throw SharedPathMismatch(where + "shared edge " +
                                 pair_str(sp[i].main_id, sp[i + 1].main_id) +
                                 " is missing on one side");
      double cm = main_adj.cost(sp[i].main_id, sp[i + 1].main_id);
      double cs = sub_adj.cost(sp[i].sub_id, sp[i + 1].sub_id);
      if (cm != cs)
        throw SharedPathMismatch(
            where + "shared edge " + pair_str(sp[i].main_id, sp[i + 1].main_id) +
            " costs differ: " + std::to_string(cm) + " vs " +
            std::to_string(cs));
    }
  }
}

TransitionGraph flatten(const FieldComplex& fc,
                        std::vector<std::map<VertexId, VertexId>>* id_maps) {
  TransitionGraph flat = fc.main;
  if (id_maps) id_maps->clear();
  VertexId next_id = 0;
  for (const Vertex& v : fc.main.vertices) next_id = std::max(next_id, v.id);
  ++next_id;

  for (const Subfield& sf : fc.subfields) {
    std::map<VertexId, VertexId> map;
    std::set<EdgeKey> seam;
    for (const SharedVertex& sv : sf.shared_path) map[sv.sub_id] = sv.main_id;
    for (std::size_t i = 0; i + 1 < sf.shared_path.size(); ++i)
      seam.insert(EdgeKey(sf.shared_path[i].sub_id, sf.shared_path[i + 1].sub_id));
    for (const Vertex& v : sf.graph.vertices) {
      if (map.count(v.id)) continue;
      map[v.id] = next_id++;
      Vertex copy = v;
      copy.id = map[v.id];
      flat.vertices.push_back(copy);
    }
    for (const Edge& e : sf.graph.edges) {
      if (seam.count(EdgeKey(e.u, e.v))) continue;
      Edge copy = e;
      copy.u = map[e.u];
      copy.v = map[e.v];
      flat.edges.push_back(copy);
    }
    for (const auto& ring : sf.graph.island_rings) {
      std::vector<VertexId> mapped;
      mapped.reserve(ring.size());
      for (VertexId v : ring) mapped.push_back(map[v]);
      flat.island_rings.push_back(std::move(mapped));
    }
    if (id_maps) id_maps->push_back(std::move(map));
  }
  return flat;
}

ComplexPlan plan_with_subfields(const FieldComplex& fc, VertexId start,
                                VertexId end) {
  validate_complex(fc);

  ComplexPlan plan;
  plan.main_plan = plan_full_coverage(fc.main, start, end);
  plan.flat = flatten(fc, &plan.id_maps);

  std::vector<VertexId> seq = plan.main_plan.route.sequence;
  for (std::size_t s = 0; s < fc.subfields.size(); ++s) {
    const Subfield& sf = fc.subfields[s];
    // Reversing the declared ring makes the planner drive this subfield
    // clockwise, which lines up with the main tour along the seam.
    TransitionGraph cw = sf.graph;
    std::reverse(cw.headland_ring.begin(), cw.headland_ring.end());
    VertexId sub_start = sf.shared_path.front().sub_id;
    FullPlan sub_plan = plan_full_coverage(cw, sub_start, sub_start);

    const auto& map = plan.id_maps[s];
    std::vector<VertexId> mapped;
    mapped.reserve(sub_plan.route.sequence.size());
    for (VertexId v : sub_plan.route.sequence) mapped.push_back(map.at(v));

    VertexId anchor = sf.shared_path.front().main_id;
    auto it = std::find(seq.begin(), seq.end(), anchor);
    if (it == seq.end())
      throw SharedPathMismatch("subfield " + std::to_string(s) +
                               ": entry vertex " + std::to_string(anchor) +
                               " never appears in the main tour");
    seq.insert(it + 1, mapped.begin() + 1, mapped.end());
    plan.sub_plans.push_back(std::move(sub_plan));
  }

  plan.route = make_route(Adjacency(plan.flat), seq);
  return plan;
}

}  // namespace fieldroute
