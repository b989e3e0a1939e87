#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fieldroute/cli.hpp"
#include "fieldroute/io.hpp"
#include "fieldroute/synth.hpp"

using namespace fieldroute;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  fs::path dir = fs::temp_directory_path() / "fieldroute_tests";
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Valid graph whose single island hangs off one stub; both rings then hold
// an odd number of odd-degree vertices, so augmentation must give up.
TransitionGraph stub_island() {
  TransitionGraph g;
  g.name = "stub-island";
  g.entry = 0;
  for (VertexId v = 0; v < 4; ++v)
    g.vertices.push_back({v, VertexClass::headland});
  for (VertexId v : {10, 11, 12})
    g.vertices.push_back({v, VertexClass::island});
  auto edge = [&](VertexId u, VertexId v, EdgeClass c) {
    g.edges.push_back({u, v, c, 1.0});
  };
  edge(0, 1, EdgeClass::headland);
  edge(1, 2, EdgeClass::headland);
  edge(2, 3, EdgeClass::headland);
  edge(3, 0, EdgeClass::headland);
  edge(10, 11, EdgeClass::island_headland);
  edge(11, 12, EdgeClass::island_headland);
  edge(12, 10, EdgeClass::island_headland);
  edge(0, 10, EdgeClass::interior);
  g.headland_ring = {0, 1, 2, 3};
  g.island_rings = {{10, 11, 12}};
  return g;
}

struct CaptureIO {
  std::ostringstream out;
  std::streambuf* old_out;
  std::streambuf* old_err;
  CaptureIO()
      : old_out(std::cout.rdbuf(out.rdbuf())),
        old_err(std::cerr.rdbuf(out.rdbuf())) {}
  ~CaptureIO() {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
  }
};

int cli(const std::vector<std::string>& args, std::string* text = nullptr) {
  std::vector<std::string> full{"fieldroute"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : full) argv.push_back(s.c_str());
  CaptureIO cap;
  int code = run_cli(static_cast<int>(argv.size()), argv.data());
  if (text) *text = cap.out.str();
  return code;
}

}  // namespace

TEST_CASE("task names round trip") {
  for (int k = 0; k < 9; ++k) {
    Task t = static_cast<Task>(k);
    CHECK(task_from_name(task_name(t)) == t);
  }
  CHECK(task_name(Task::t5) == "t5");
  CHECK_THROWS_AS(task_from_name("t0"), ParseError);
  CHECK_THROWS_AS(task_from_name("t10"), ParseError);
  CHECK_THROWS_AS(task_from_name("full"), ParseError);
}

TEST_CASE("field files round trip") {
  std::vector<FieldComplex> fields;
  fields.push_back({synth::hex8(), {}});
  fields.push_back({synth::field1(), {}});
  fields.push_back({synth::field2(), {}});
  fields.push_back({synth::field3(), {}});
  fields.push_back({stub_island(), {}});
  fields.push_back(synth::tworing());
  for (const FieldComplex& fc : fields) {
    CAPTURE(fc.main.name);
    CHECK(field_from_json(field_to_json(fc)) == fc);
  }

  fs::path path = tmp_dir() / "tworing_roundtrip.json";
  save_field(synth::tworing(), path);
  CHECK(load_field(path) == synth::tworing());
}

TEST_CASE("broken JSON reports the byte offset") {
  try {
    field_from_json("{ \"name\": ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("unknown tokens are rejected") {
  CHECK_THROWS_AS(field_from_json(R"({
    "name": "x", "entry": 0,
    "vertices": [{"id": 0, "class": "grass"}],
    "edges": [], "headland_ring": [0]})"),
                  ParseError);
  CHECK_THROWS_AS(field_from_json(R"({
    "name": "x", "entry": 0,
    "vertices": [{"id": 0, "class": "headland"}, {"id": 1, "class": "headland"}],
    "edges": [{"u": 0, "v": 1, "class": "fence", "cost": 1}],
    "headland_ring": [0, 1]})"),
                  ParseError);
  CHECK_THROWS_AS(field_from_json(R"({"name": "x"})"), ParseError);
}

TEST_CASE("edge cost falls back to the endpoint distance") {
  FieldComplex fc = field_from_json(R"({
    "name": "x", "entry": 0,
    "vertices": [{"id": 0, "class": "headland", "x": 0, "y": 0},
                 {"id": 1, "class": "headland", "x": 3, "y": 4}],
    "edges": [{"u": 0, "v": 1, "class": "headland"}],
    "headland_ring": [0, 1]})");
  CHECK(fc.main.edges.at(0).cost == 5.0);

  CHECK_THROWS_AS(field_from_json(R"({
    "name": "x", "entry": 0,
    "vertices": [{"id": 0, "class": "headland"},
                 {"id": 1, "class": "headland", "x": 3, "y": 4}],
    "edges": [{"u": 0, "v": 1, "class": "headland"}],
    "headland_ring": [0, 1]})"),
                  ParseError);
}

TEST_CASE("load_field validates every graph in the file") {
  fs::path path = tmp_dir() / "broken.json";

  FieldComplex fc{synth::hex8(), {}};
  fc.main.entry = 99;
  save_field(fc, path);
  CHECK_THROWS_AS(load_field(path), ValidationError);

  FieldComplex tw = synth::tworing();
  tw.subfields[0].graph.entry = 99;
  save_field(tw, path);
  try {
    load_field(path);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("subfield 0") != std::string::npos);
  }
}

TEST_CASE("route files round trip") {
  RouteFile rf;
  rf.task = Task::t6;
  rf.field_name = "hex8";
  rf.start = 0;
  rf.end = 4;
  rf.sequence = {0, 1, 2, 5, 4};
  rf.cost = 6.25;
  rf.traversals[EdgeKey(0, 1)] = 1;
  rf.traversals[EdgeKey(2, 5)] = 2;
  rf.n_iterations = 6;
  rf.n_tabu = 3;
  rf.seed = 42;
  rf.wall_ms = 1.5;

  fs::path path = tmp_dir() / "route_roundtrip.json";
  save_route(rf, path);
  CHECK(load_route(path) == rf);
}

TEST_CASE("command line") {
  fs::path dir = tmp_dir();
  fs::path hex = dir / "hex8.json";
  fs::path tworing = dir / "tworing.json";
  fs::path stub = dir / "stub_island.json";
  save_field({synth::hex8(), {}}, hex);
  save_field(synth::tworing(), tworing);
  save_field({stub_island(), {}}, stub);

  SUBCASE("help exits cleanly") { CHECK(cli({"--help"}) == 0); }

  SUBCASE("validate accepts the shipped fields") {
    std::string out;
    CHECK(cli({"validate", hex.string()}, &out) == 0);
    CHECK(out.find("ok: 8 vertices, 10 edges") != std::string::npos);
    CHECK(cli({"validate", tworing.string()}, &out) == 0);
    CHECK(out.find("1 subfield(s)") != std::string::npos);
  }

  SUBCASE("validate rejects rule violations") {
    FieldComplex fc{synth::hex8(), {}};
    fc.main.entry = 99;
    fs::path bad = dir / "bad_entry.json";
    save_field(fc, bad);
    CHECK(cli({"validate", bad.string()}) == 2);
    CHECK(cli({"validate", (dir / "no_such.json").string()}) == 2);
  }

  SUBCASE("full coverage plan writes a route file") {
    fs::path out = dir / "hex_t1.json";
    std::string text;
    CHECK(cli({"plan", "--task", "t1", "--field", hex.string(), "--start", "0",
               "--out", out.string()},
              &text) == 0);
    CHECK(text.find("cost 16") != std::string::npos);
    RouteFile rf = load_route(out);
    CHECK(rf.task == Task::t1);
    CHECK(rf.field_name == "hex8");
    CHECK(rf.cost == 16.0);
    CHECK(rf.sequence.size() == 13);
    CHECK(rf.traversals.at(EdgeKey(1, 2)) == 2);
  }

  SUBCASE("point-to-point plan") {
    fs::path out = dir / "hex_t9.json";
    CHECK(cli({"plan", "--task", "t9", "--field", hex.string(), "--start", "3",
               "--end", "1", "--out", out.string()}) == 0);
    RouteFile rf = load_route(out);
    CHECK(rf.cost == 6.0);
    CHECK(rf.sequence == std::vector<VertexId>{3, 4, 5, 6, 7, 0, 1});
  }

  SUBCASE("partial plan resolves the default budgets") {
    fs::path out = dir / "hex_t5.json";
    CHECK(cli({"plan", "--task", "t5", "--field", hex.string(), "--start", "0",
               "--edges", "(2,5)", "--out", out.string()}) == 0);
    RouteFile rf = load_route(out);
    CHECK(rf.cost == 8.0);
    CHECK(rf.sequence == std::vector<VertexId>{0, 1, 2, 5, 6, 7, 0});
    CHECK(rf.n_iterations == 1);
    CHECK(rf.n_tabu == 1);
  }

  SUBCASE("full coverage spans the subfields") {
    fs::path out = dir / "tworing_t1.json";
    CHECK(cli({"plan", "--task", "t1", "--field", tworing.string(), "--start",
               "0", "--out", out.string()}) == 0);
    RouteFile rf = load_route(out);
    CHECK(rf.cost == 24.0);
    CHECK(rf.sequence.size() == 18);
  }

  SUBCASE("argument errors exit with 2") {
    CHECK(cli({"plan", "--task", "t2", "--field", hex.string(), "--start", "0",
               "--end", "0"}) == 2);
    CHECK(cli({"plan", "--task", "t2", "--field", hex.string(), "--start",
               "0"}) == 2);
    CHECK(cli({"plan", "--task", "t3", "--field", hex.string(), "--start",
               "0"}) == 2);
    CHECK(cli({"plan", "--task", "t1", "--field", hex.string(), "--start", "0",
               "--edges", "(2,5)"}) == 2);
    CHECK(cli({"plan", "--task", "t5", "--field", hex.string(), "--start", "0",
               "--edges", "2,5"}) == 2);
    CHECK(cli({"plan", "--task", "t3", "--field", tworing.string(), "--start",
               "0", "--vertices", "4"}) == 2);
    CHECK(cli({"plan", "--task", "t1", "--start", "0"}) == 2);
    CHECK(cli({"frobnicate"}) == 2);
  }

  SUBCASE("infeasible augmentation exits with 1") {
    std::string text;
    CHECK(cli({"plan", "--task", "t1", "--field", stub.string(), "--start",
               "0"},
              &text) == 1);
    CHECK(text.find("infeasible") != std::string::npos);
  }

  SUBCASE("svg rendering") {
    fs::path svg = dir / "hex_t1.svg";
    CHECK(cli({"plan", "--task", "t1", "--field", hex.string(), "--start", "0",
               "--svg", svg.string()}) == 0);
    std::string body = read_file(svg);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("<polyline") != std::string::npos);

    FieldComplex blind{synth::hex8(), {}};
    for (Vertex& v : blind.main.vertices) {
      v.x.reset();
      v.y.reset();
    }
    fs::path blind_path = dir / "hex8_no_coords.json";
    save_field(blind, blind_path);
    CHECK(cli({"plan", "--task", "t1", "--field", blind_path.string(),
               "--start", "0", "--svg", (dir / "blind.svg").string()}) == 2);
  }

  SUBCASE("bench reports every fixture") {
    fs::path bench_dir = dir / "bench_fixtures";
    fs::create_directories(bench_dir);
    save_field({synth::hex8(), {}}, bench_dir / "hex8.json");
    fs::path csv = dir / "bench.csv";
    CHECK(cli({"bench", "--dir", bench_dir.string(), "--repeat", "1", "--out",
               csv.string(), "--oracle"}) == 0);
    std::string body = read_file(csv);
    CHECK(body.find("fixture,task") != std::string::npos);
    CHECK(body.find("hex8") != std::string::npos);
    CHECK(body.find("yes") != std::string::npos);
    CHECK(body.find("NO") == std::string::npos);
  }
}
