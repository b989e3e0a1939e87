#include "fieldroute/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace fieldroute {

namespace {

struct Pt {
  double x = 0.0;
  double y = 0.0;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << v;
  return os.str();
}

void polygon(std::ostringstream& os, const std::vector<Pt>& pts,
             const char* stroke) {
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << fmt(pts[i].x) << ',' << fmt(pts[i].y);
  }
  os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string render_svg(const TransitionGraph& g, const Route& route) {
  std::map<VertexId, const Vertex*> verts;
  for (const Vertex& v : g.vertices) verts[v.id] = &v;

  for (VertexId v : route.sequence) {
    auto it = verts.find(v);
    if (it == verts.end() || !it->second->x || !it->second->y)
      throw MissingCoordinates("vertex " + std::to_string(v) +
                               " on the route has no coordinates");
  }

  double minx = 0.0, maxx = 1.0, miny = 0.0, maxy = 1.0;
  bool first = true;
  for (const Vertex& v : g.vertices) {
    if (!v.x || !v.y) continue;
    if (first) {
      minx = maxx = *v.x;
      miny = maxy = *v.y;
      first = false;
    } else {
      minx = std::min(minx, *v.x);
      maxx = std::max(maxx, *v.x);
      miny = std::min(miny, *v.y);
      maxy = std::max(maxy, *v.y);
    }
  }
  const double margin = 20.0;
  const double extent = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = 760.0 / extent;
  const double width = (maxx - minx) * scale + 2 * margin;
  const double height = (maxy - miny) * scale + 2 * margin;

  auto at = [&](VertexId id) {
    const Vertex* v = verts.at(id);
    return Pt{(*v->x - minx) * scale + margin, (maxy - *v->y) * scale + margin};
  };
  auto has = [&](VertexId id) {
    auto it = verts.find(id);
    return it != verts.end() && it->second->x && it->second->y;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
     << ' ' << fmt(height) << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (g.headland_ring.size() >= 3 &&
      std::all_of(g.headland_ring.begin(), g.headland_ring.end(), has)) {
    std::vector<Pt> pts;
    for (VertexId v : g.headland_ring) pts.push_back(at(v));
    polygon(os, pts, "#888888");
  }
  for (const auto& ring : g.island_rings) {
    if (ring.size() < 3 || !std::all_of(ring.begin(), ring.end(), has))
      continue;
    std::vector<Pt> pts;
    for (VertexId v : ring) pts.push_back(at(v));
    polygon(os, pts, "#bb8844");
  }
  for (const Edge& e : g.edges) {
    if (e.cls != EdgeClass::interior || !has(e.u) || !has(e.v)) continue;
    Pt a = at(e.u), b = at(e.v);
    os << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
       << fmt(b.x) << "\" y2=\"" << fmt(b.y)
       << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const Vertex& v : g.vertices) {
    if (!v.x || !v.y) continue;
    Pt p = at(v.id);
    os << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
       << "\" r=\"2.5\" fill=\"#444444\"/>\n";
    os << "  <text x=\"" << fmt(p.x + 4) << "\" y=\"" << fmt(p.y - 4)
       << "\" font-size=\"10\" fill=\"#666666\">" << v.id << "</text>\n";
  }

  if (route.sequence.size() >= 2) {
    // Single polyline; repeat passes get their midsection pushed sideways a
    // few pixels per pass so every traversal stays visible.
    std::map<EdgeKey, int> pass;
    os << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.6\""
          " stroke-opacity=\"0.85\" points=\"";
    Pt start = at(route.sequence.front());
    os << fmt(start.x) << ',' << fmt(start.y);
    for (std::size_t i = 0; i + 1 < route.sequence.size(); ++i) {
      Pt a = at(route.sequence[i]);
      Pt b = at(route.sequence[i + 1]);
      int k = pass[EdgeKey(route.sequence[i], route.sequence[i + 1])]++;
      double dx = b.x - a.x, dy = b.y - a.y;
      double len = std::max(std::hypot(dx, dy), 1e-9);
      double off = 3.0 * k;
      double nx = -dy / len * off, ny = dx / len * off;
      os << ' ' << fmt(a.x + 0.25 * dx + nx) << ','
         << fmt(a.y + 0.25 * dy + ny);
      os << ' ' << fmt(a.x + 0.75 * dx + nx) << ','
         << fmt(a.y + 0.75 * dy + ny);
      os << ' ' << fmt(b.x) << ',' << fmt(b.y);
    }
    os << "\"/>\n";
  }
  if (!route.sequence.empty()) {
    Pt s = at(route.sequence.front());
    os << "  <circle cx=\"" << fmt(s.x) << "\" cy=\"" << fmt(s.y)
       << "\" r=\"5\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    Pt e = at(route.sequence.back());
    os << "  <rect x=\"" << fmt(e.x - 4) << "\" y=\"" << fmt(e.y - 4)
       << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"#1f77b4\""
          " stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fieldroute
