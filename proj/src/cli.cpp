#include "fieldroute/cli.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fieldroute/bench.hpp"
#include "fieldroute/io.hpp"
#include "fieldroute/svg.hpp"

namespace fieldroute {

namespace {

std::vector<EdgeKey> parse_edge_list(const std::string& text) {
  std::vector<EdgeKey> out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ';') {
      ++pos;
      continue;
    }
    std::size_t close = s.find(')', pos);
    std::size_t comma = s.find(',', pos);
    if (s[pos] != '(' || close == std::string::npos || comma == std::string::npos ||
        comma > close)
      throw ParseError("bad edge list '" + text + "', expected \"(u,v);(x,y)\"");
    out.emplace_back(std::stoi(s.substr(pos + 1, comma - pos - 1)),
                     std::stoi(s.substr(comma + 1, close - comma - 1)));
    pos = close + 1;
  }
  return out;
}

std::vector<VertexId> parse_vertex_list(const std::string& text) {
  std::vector<VertexId> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

long long resolved_budget(long long requested, std::size_t n) {
  if (requested >= 0) return requested;
  long long f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= static_cast<long long>(k);
    if (f >= 350) return 350;
  }
  return std::min<long long>(f, 350);
}

int run_validate(const std::string& field_path) {
  std::ifstream in(field_path);
  if (!in) {
    std::cerr << "cannot open " << field_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  FieldComplex fc = field_from_json(buf.str());

  bool ok = true;
  auto report = [&](const TransitionGraph& g, const std::string& which) {
    ValidationReport rep = validate_graph(g);
    for (const Violation& v : rep.violations)
      std::cout << which << ": " << v.code << ": " << v.detail << "\n";
    ok = ok && rep.ok;
  };
  report(fc.main, fc.main.name.empty() ? "main" : fc.main.name);
  for (std::size_t i = 0; i < fc.subfields.size(); ++i)
    report(fc.subfields[i].graph, "subfield " + std::to_string(i));
  if (ok && !fc.subfields.empty()) {
    try {
      validate_complex(fc);
    } catch (const SharedPathMismatch& e) {
      std::cout << e.what() << "\n";
      ok = false;
    }
  }
  if (!ok) return 2;
  std::cout << "ok: " << fc.main.vertices.size() << " vertices, "
            << fc.main.edges.size() << " edges";
  if (!fc.subfields.empty())
    std::cout << ", " << fc.subfields.size() << " subfield(s)";
  std::cout << "\n";
  return 0;
}

struct PlanArgs {
  std::string task = "t1";
  std::string field;
  VertexId start = 0;
  VertexId end = 0;
  bool end_given = false;
  std::string edges;
  std::string vertices;
  long long ni = -1;
  long long ntabu = -1;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg;
};

int run_plan(const PlanArgs& a) {
  Task task = task_from_name(a.task);
  FieldComplex fc = load_field(a.field);

  const bool open_task = task == Task::t2 || task == Task::t4 ||
                         task == Task::t6 || task == Task::t8 ||
                         task == Task::t9;
  VertexId end = a.end_given ? a.end : a.start;
  if (open_task && !a.end_given) throw ParseError(a.task + " needs --end");
  if (open_task && task != Task::t9 && end == a.start)
    throw ParseError(a.task + " is an open tour, --end must differ from --start");
  if (!open_task && a.end_given && end != a.start)
    throw ParseError(a.task + " is a closed tour, --end must equal --start");

  std::vector<EdgeKey> target_edges = parse_edge_list(a.edges);
  std::vector<VertexId> target_vertices = parse_vertex_list(a.vertices);
  const bool wants_vertices =
      task == Task::t3 || task == Task::t4 || task == Task::t7 || task == Task::t8;
  const bool wants_edges =
      task == Task::t5 || task == Task::t6 || task == Task::t7 || task == Task::t8;
  if (!wants_vertices && !target_vertices.empty())
    throw ParseError(a.task + " takes no --vertices");
  if (!wants_edges && !target_edges.empty())
    throw ParseError(a.task + " takes no --edges");
  if (wants_vertices && target_vertices.empty())
    throw ParseError(a.task + " needs --vertices");
  if (wants_edges && target_edges.empty())
    throw ParseError(a.task + " needs --edges");

  const bool partial = wants_vertices || wants_edges;
  if (partial && !fc.subfields.empty())
    throw ParseError(
        "partial coverage tasks address a single field, this file has "
        "subfields");

  RouteFile rf;
  rf.task = task;
  rf.field_name = fc.main.name;
  rf.start = a.start;
  rf.end = end;
  rf.seed = a.seed;

  const TransitionGraph* drawn = &fc.main;
  TransitionGraph flat;
  Route route;
  auto t0 = std::chrono::steady_clock::now();
  if (task == Task::t9) {
    route = constrained_shortest_path(fc.main, a.start, end, MotionConstraints{});
  } else if (task == Task::t1 || task == Task::t2) {
    if (fc.subfields.empty()) {
      route = plan_full_coverage(fc.main, a.start, end).route;
    } else {
      validate_complex(fc);
      ComplexPlan plan = plan_with_subfields(fc, a.start, end);
      route = plan.route;
      flat = std::move(plan.flat);
      drawn = &flat;
    }
  } else {
    FullPlan full = plan_full_coverage(fc.main, a.start, end);
    CoverageRequest req;
    req.task = task;
    req.start = a.start;
    req.end = end;
    req.target_vertices = target_vertices;
    req.target_edges = target_edges;
    req.n_iterations = a.ni;
    req.n_tabu = a.ntabu;
    req.seed = a.seed;
    PartialPlan plan = plan_partial_coverage(fc.main, full, req);
    route = plan.route;
    rf.n_iterations = resolved_budget(a.ni, plan.targets.size());
    rf.n_tabu = resolved_budget(a.ntabu, plan.targets.size());
  }
  auto t1 = std::chrono::steady_clock::now();
  rf.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rf.sequence = route.sequence;
  rf.cost = route.cost;
  rf.traversals = route.traversals;

  if (!a.out.empty()) save_route(rf, a.out);
  if (!a.svg.empty()) {
    std::ofstream out(a.svg);
    if (!out) throw ParseError("cannot write " + a.svg);
    out << render_svg(*drawn, route);
  }
  std::cout << a.task << " on " << rf.field_name << ": cost " << route.cost
            << ", " << route.sequence.size() << " vertices";
  if (!a.out.empty()) std::cout << ", wrote " << a.out;
  if (!a.svg.empty()) std::cout << " and " << a.svg;
  std::cout << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Field coverage route planner"};
  app.require_subcommand(1);

  std::string validate_field;
  CLI::App* validate =
      app.add_subcommand("validate", "Check a field file against the graph rules");
  validate->add_option("field", validate_field, "field JSON file")->required();

  PlanArgs pa;
  CLI::App* plan = app.add_subcommand("plan", "Plan a route on a field");
  plan->add_option("--task", pa.task, "task t1..t9")->required();
  plan->add_option("--field", pa.field, "field JSON file")->required();
  plan->add_option("--start", pa.start, "start vertex")->required();
  plan->add_option("--end", pa.end, "end vertex (open tasks)")
      ->each([&](const std::string&) { pa.end_given = true; });
  plan->add_option("--edges", pa.edges, "target edges \"(u,v);(x,y)\"");
  plan->add_option("--vertices", pa.vertices, "target vertices \"a,b,c\"");
  plan->add_option("--ni", pa.ni, "tabu search iterations");
  plan->add_option("--ntabu", pa.ntabu, "tabu list length");
  plan->add_option("--seed", pa.seed, "random seed");
  plan->add_option("--out", pa.out, "route JSON output");
  plan->add_option("--svg", pa.svg, "SVG rendering output");

  BenchOptions bo;
  const char* env_dir = std::getenv("FIELDROUTE_FIXTURES");
  bo.fixtures_dir = env_dir ? env_dir : "fixtures";
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the planners on fixtures");
  bench_cmd->add_option("--dir", bo.fixtures_dir, "fixture directory");
  bench_cmd->add_option("--repeat", bo.repeats, "timing repeats per task");
  bench_cmd->add_option("--out", bo.out_csv, "CSV report path");
  bench_cmd->add_flag("--oracle", bo.with_oracle,
                      "cross-check small fixtures exhaustively");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(validate_field);
    if (plan->parsed()) return run_plan(pa);
    bench(bo, std::cout);
    return 0;
  } catch (const AugmentationInfeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const NoFeasiblePath& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const NoFeasibleSubtour& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const InfeasibleCoverage& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const EdgeExhausted& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fieldroute
