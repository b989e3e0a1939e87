#pragma once

#include <cstdint>

#include "fieldroute/subfield.hpp"

namespace fieldroute {
namespace synth {

// Built-in fields used by tests and the bench harness. All costs are dyadic
// rationals (multiples of 0.25) so cost sums are exact in doubles no matter
// the summation order.

// Octagon headland, unit ring costs, two parallel tracks of cost 3.
TransitionGraph hex8();

// 24-vertex field: ladder with 11 tracks, a split vertex (23) in the top
// edge and a short entry section (edges 22-0 and 0-1 cost 4, other ring
// hops 10, tracks 40).
TransitionGraph field1();

// 101-vertex field: 85-vertex ladder ring (no split vertex) and 4
// four-vertex islands replacing pairs of tracks.
TransitionGraph field2();

// 102-vertex field: 78-vertex ladder ring and 6 four-vertex islands.
TransitionGraph field3();

// Hexagonal main field joined to a four-vertex subfield along one shared
// headland edge; both sides duplicate the shared edge, so the combined plan
// drives it four times.
FieldComplex tworing();

// Deterministic small random field for property tests: ladder ring of 3-6
// rungs, random subset of tracks, at most `max_islands` (0-2) three-vertex
// islands, 5..14 edges, dyadic costs. Tracks and island stub pairs cost at
// least the headland detour between their endpoints, so duplicating ring
// edges stays the cheapest way to fix parity.
TransitionGraph random_field(std::uint64_t seed, int max_islands = 2);

}  // namespace synth
}  // namespace fieldroute
