#pragma once

#include "fieldroute/full_coverage.hpp"

namespace fieldroute {

// Main field plus optional subfields, each its own graph joined to the main
// field along a shared stretch of headland. shared_path lists the coinciding
// vertices as (main id, sub id) pairs in main-ring counter-clockwise order;
// because the subfield is driven clockwise, those pairs run against the
// subfield's declared ring order.
struct SharedVertex {
  VertexId main_id = 0;
  VertexId sub_id = 0;
  bool operator==(const SharedVertex&) const = default;
};

struct Subfield {
  TransitionGraph graph;
  std::vector<SharedVertex> shared_path;
  bool operator==(const Subfield&) const = default;
};

struct FieldComplex {
  TransitionGraph main;
  std::vector<Subfield> subfields;
  bool operator==(const FieldComplex&) const = default;
};

struct ComplexPlan {
  Route route;          // combined walk over the flattened graph
  FullPlan main_plan;   // main-field plan in main ids
  std::vector<FullPlan> sub_plans;  // per subfield, in subfield ids
  TransitionGraph flat;             // union graph the combined route lives on
  // Per subfield: subfield vertex id -> flattened id (shared vertices map to
  // the main id, private ones to fresh ids past the main range).
  std::vector<std::map<VertexId, VertexId>> id_maps;
};

// Checks shared_path contiguity, classes, edge existence and matching costs
// on both sides. Throws SharedPathMismatch with the first offence.
void validate_complex(const FieldComplex& fc);

// Union graph with shared vertices identified. id_maps (optional out) gets
// one map per subfield.
TransitionGraph flatten(const FieldComplex& fc,
                        std::vector<std::map<VertexId, VertexId>>* id_maps);

// Plans the main field counter-clockwise and every subfield clockwise (its
// ring is reversed before planning), then splices each subfield tour into
// the main tour at the first arrival at that subfield's shared-segment entry
// vertex. Start/end address the main graph.
ComplexPlan plan_with_subfields(const FieldComplex& fc, VertexId start,
                                VertexId end);

}  // namespace fieldroute
