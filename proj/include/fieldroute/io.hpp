#pragma once

#include <filesystem>

#include "fieldroute/partial_coverage.hpp"
#include "fieldroute/subfield.hpp"

namespace fieldroute {

// Planned route plus enough request metadata to reproduce it.
struct RouteFile {
  Task task = Task::t1;
  std::string field_name;
  VertexId start = 0;
  VertexId end = 0;
  std::vector<VertexId> sequence;
  double cost = 0.0;
  std::map<EdgeKey, int> traversals;
  long long n_iterations = 0;
  long long n_tabu = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  bool operator==(const RouteFile&) const = default;
};

std::string task_name(Task t);
Task task_from_name(const std::string& name);  // throws ParseError

// JSON field files. Parse problems (bad JSON, wrong types, unknown class
// tokens, missing keys) throw ParseError with the byte offset or the
// offending token. Edges without a "cost" key get the Euclidean distance of
// their endpoints. load_field additionally runs validate_graph on every
// graph and throws ValidationError listing the violations;
// field_from_json parses only.
FieldComplex load_field(const std::filesystem::path& path);
FieldComplex field_from_json(const std::string& text);
std::string field_to_json(const FieldComplex& fc);
void save_field(const FieldComplex& fc, const std::filesystem::path& path);

// JSON route files. Costs are written with enough digits to round-trip the
// exact double.
RouteFile load_route(const std::filesystem::path& path);
std::string route_to_json(const RouteFile& rf);
void save_route(const RouteFile& rf, const std::filesystem::path& path);

}  // namespace fieldroute
