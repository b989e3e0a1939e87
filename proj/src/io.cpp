#include "fieldroute/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fieldroute {

using nlohmann::json;

namespace {

const char* class_token(VertexClass c) {
  return c == VertexClass::headland ? "headland" : "island";
}

const char* class_token(EdgeClass c) {
  switch (c) {
    case EdgeClass::headland: return "headland";
    case EdgeClass::island_headland: return "island_headland";
    default: return "interior";
  }
}

VertexClass vertex_class(const std::string& tok) {
  if (tok == "headland") return VertexClass::headland;
  if (tok == "island") return VertexClass::island;
  throw ParseError("unknown vertex class '" + tok + "'");
}

EdgeClass edge_class(const std::string& tok) {
  if (tok == "headland") return EdgeClass::headland;
  if (tok == "island_headland") return EdgeClass::island_headland;
  if (tok == "interior") return EdgeClass::interior;
  throw ParseError("unknown edge class '" + tok + "'");
}

json graph_to_json(const TransitionGraph& g) {
  json j;
  j["name"] = g.name;
  j["entry"] = g.entry;
  j["vertices"] = json::array();
  for (const Vertex& v : g.vertices) {
    json jv{{"id", v.id}, {"class", class_token(v.cls)}};
    if (v.x) jv["x"] = *v.x;
    if (v.y) jv["y"] = *v.y;
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = json::array();
  for (const Edge& e : g.edges)
    j["edges"].push_back(
        {{"u", e.u}, {"v", e.v}, {"class", class_token(e.cls)}, {"cost", e.cost}});
  j["headland_ring"] = g.headland_ring;
  j["island_rings"] = g.island_rings;
  return j;
}

TransitionGraph graph_from_json(const json& j) {
  TransitionGraph g;
  g.name = j.at("name").get<std::string>();
  g.entry = j.at("entry").get<VertexId>();
  for (const json& jv : j.at("vertices")) {
    Vertex v;
    v.id = jv.at("id").get<VertexId>();
    v.cls = vertex_class(jv.at("class").get<std::string>());
    if (jv.contains("x")) v.x = jv.at("x").get<double>();
    if (jv.contains("y")) v.y = jv.at("y").get<double>();
    g.vertices.push_back(v);
  }
  std::map<VertexId, const Vertex*> byid;
  for (const Vertex& v : g.vertices) byid[v.id] = &v;
  for (const json& je : j.at("edges")) {
    Edge e;
    e.u = je.at("u").get<VertexId>();
    e.v = je.at("v").get<VertexId>();
    e.cls = edge_class(je.at("class").get<std::string>());
    if (je.contains("cost")) {
      e.cost = je.at("cost").get<double>();
    } else {
      // No explicit cost: fall back to the Euclidean distance between the
      // endpoints' coordinates.
      auto a = byid.find(e.u);
      auto b = byid.find(e.v);
      if (a == byid.end() || b == byid.end() || !a->second->x ||
          !a->second->y || !b->second->x || !b->second->y)
        throw ParseError("edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) +
                         ") has no cost and no coordinates to derive one");
      e.cost = std::hypot(*a->second->x - *b->second->x,
                          *a->second->y - *b->second->y);
    }
    g.edges.push_back(e);
  }
  g.headland_ring = j.at("headland_ring").get<std::vector<VertexId>>();
  if (j.contains("island_rings"))
    g.island_rings =
        j.at("island_rings").get<std::vector<std::vector<VertexId>>>();
  return g;
}

}  // namespace

std::string task_name(Task t) {
  return "t" + std::to_string(static_cast<int>(t) + 1);
}

Task task_from_name(const std::string& name) {
  if (name.size() == 2 && name[0] == 't' && name[1] >= '1' && name[1] <= '9')
    return static_cast<Task>(name[1] - '1');
  throw ParseError("unknown task '" + name + "', expected t1..t9");
}

FieldComplex field_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("field file is not valid JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
  try {
    FieldComplex fc;
    fc.main = graph_from_json(j);
    if (j.contains("subfields")) {
      for (const json& js : j.at("subfields")) {
        Subfield sf;
        sf.graph = graph_from_json(js.at("field"));
        for (const json& jp : js.at("shared_path"))
          sf.shared_path.push_back(SharedVertex{
              jp.at("main").get<VertexId>(), jp.at("sub").get<VertexId>()});
        fc.subfields.push_back(std::move(sf));
      }
    }
    return fc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field file: ") + e.what());
  }
}

FieldComplex load_field(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open field file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  FieldComplex fc = field_from_json(buf.str());

  auto check = [&](const TransitionGraph& g, const std::string& which) {
    ValidationReport rep = validate_graph(g);
    if (rep.ok) return;
    std::string msg = path.string() + ": " + which + " graph is invalid:";
    for (const Violation& v : rep.violations)
      msg += "\n  " + v.code + ": " + v.detail;
    throw ValidationError(msg);
  };
  check(fc.main, "main");
  for (std::size_t i = 0; i < fc.subfields.size(); ++i)
    check(fc.subfields[i].graph, "subfield " + std::to_string(i));
  return fc;
}

std::string field_to_json(const FieldComplex& fc) {
  json j = graph_to_json(fc.main);
  if (!fc.subfields.empty()) {
    j["subfields"] = json::array();
    for (const Subfield& sf : fc.subfields) {
      json js;
      js["field"] = graph_to_json(sf.graph);
      js["shared_path"] = json::array();
      for (const SharedVertex& sv : sf.shared_path)
        js["shared_path"].push_back({{"main", sv.main_id}, {"sub", sv.sub_id}});
      j["subfields"].push_back(std::move(js));
    }
  }
  return j.dump(2) + "\n";
}

void save_field(const FieldComplex& fc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write field file " + path.string());
  out << field_to_json(fc);
}

RouteFile load_route(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open route file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("route file is not valid JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
  try {
    RouteFile rf;
    rf.task = task_from_name(j.at("task").get<std::string>());
    rf.field_name = j.at("field").get<std::string>();
    rf.start = j.at("start").get<VertexId>();
    rf.end = j.at("end").get<VertexId>();
    rf.sequence = j.at("sequence").get<std::vector<VertexId>>();
    rf.cost = j.at("cost").get<double>();
    for (const json& jt : j.at("traversals"))
      rf.traversals[EdgeKey(jt.at("u").get<VertexId>(),
                            jt.at("v").get<VertexId>())] =
          jt.at("count").get<int>();
    rf.n_iterations = j.value("n_iterations", 0LL);
    rf.n_tabu = j.value("n_tabu", 0LL);
    rf.seed = j.value("seed", std::uint64_t{0});
    rf.wall_ms = j.value("wall_ms", 0.0);
    return rf;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad route file: ") + e.what());
  }
}

std::string route_to_json(const RouteFile& rf) {
  json j;
  j["task"] = task_name(rf.task);
  j["field"] = rf.field_name;
  j["start"] = rf.start;
  j["end"] = rf.end;
  j["sequence"] = rf.sequence;
  j["cost"] = rf.cost;
  j["traversals"] = json::array();
  for (const auto& [key, count] : rf.traversals)
    j["traversals"].push_back({{"u", key.a}, {"v", key.b}, {"count", count}});
  j["n_iterations"] = rf.n_iterations;
  j["n_tabu"] = rf.n_tabu;
  j["seed"] = rf.seed;
  j["wall_ms"] = rf.wall_ms;
  return j.dump(2) + "\n";
}

void save_route(const RouteFile& rf, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write route file " + path.string());
  out << route_to_json(rf);
}

}  // namespace fieldroute
