#pragma once

#include "fieldroute/search.hpp"
#include "fieldroute/subfield.hpp"

namespace fieldroute {

// Renders the field (headland polygon, island polygons, interior tracks)
// and the route as one polyline over the vertex coordinates. Repeat passes
// over an edge are nudged sideways a few pixels per pass so overlapping
// strokes stay distinguishable. Routes with fewer than two vertices render
// the field plus a start marker only. Throws MissingCoordinates when some
// vertex on the route has no x/y.
std::string render_svg(const TransitionGraph& g, const Route& route);

}  // namespace fieldroute
