#include "fieldroute/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fieldroute/oracle.hpp"
#include "fieldroute/subfield.hpp"
#include "fieldroute/svg.hpp"

namespace fieldroute {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

template <typename F>
std::pair<double, double> time_ms(int repeats, F&& body) {
  std::vector<double> samples;
  for (int i = 0; i < std::max(repeats, 1); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    samples.push_back(
        std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(samples.begin(), samples.end());
  return {samples.front(), samples[samples.size() / 2]};
}

BenchRow base_row(const std::string& fixture, const std::string& task,
                  const TransitionGraph& g) {
  BenchRow row;
  row.fixture = fixture;
  row.task = task;
  row.vertices = g.vertices.size();
  row.edges = g.edges.size();
  row.oracle_cost = "-";
  row.oracle_match = "-";
  return row;
}

}  // namespace

std::vector<BenchRow> bench(const BenchOptions& opt, std::ostream& log) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(opt.fixtures_dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows;
  for (const auto& path : files) {
    FieldComplex fc = load_field(path);
    const TransitionGraph& g = fc.main;
    const std::string fixture = path.stem().string();
    log << fixture << ": " << g.vertices.size() << " vertices, "
        << g.edges.size() << " edges";
    if (!fc.subfields.empty())
      log << ", " << fc.subfields.size() << " subfield(s)";
    log << "\n";

    {
      BenchRow row = base_row(fixture, "t1", g);
      row.repeats = opt.repeats;
      if (fc.subfields.empty()) {
        FullPlan plan;
        auto [mn, md] =
            time_ms(opt.repeats, [&] { plan = plan_full_coverage(g, g.entry, g.entry); });
        row.cost = plan.route.cost;
        row.sequence_len = plan.route.sequence.size();
        row.min_ms = mn;
        row.median_ms = md;
        if (opt.with_oracle && g.edges.size() <= 20) {
          OracleResult ref = brute_force_full_coverage(g, g.entry, g.entry);
          row.oracle_cost = num(ref.cost);
          row.oracle_match = plan.route.cost == ref.cost ? "yes" : "NO";
        }
      } else {
        ComplexPlan plan;
        auto [mn, md] = time_ms(opt.repeats, [&] {
          plan = plan_with_subfields(fc, g.entry, g.entry);
        });
        row.vertices = plan.flat.vertices.size();
        row.edges = plan.flat.edges.size();
        row.cost = plan.route.cost;
        row.sequence_len = plan.route.sequence.size();
        row.min_ms = mn;
        row.median_ms = md;
      }
      rows.push_back(row);
    }

    {
      BenchRow row = base_row(fixture, "t9", g);
      row.repeats = opt.repeats;
      VertexId dst = g.headland_ring[g.headland_ring.size() / 2];
      Route leg;
      auto [mn, md] = time_ms(opt.repeats, [&] {
        leg = constrained_shortest_path(g, g.entry, dst, MotionConstraints{});
      });
      row.cost = leg.cost;
      row.sequence_len = leg.sequence.size();
      row.min_ms = mn;
      row.median_ms = md;
      if (opt.with_oracle && g.edges.size() <= 20) {
        OracleResult ref = brute_force_shortest_walk(
            g, g.entry, dst, MotionConstraints{},
            static_cast<int>(2 * g.edges.size()));
        row.oracle_cost = num(ref.cost);
        row.oracle_match = leg.cost == ref.cost ? "yes" : "NO";
      }
      rows.push_back(row);
    }

    {
      CoverageRequest req;
      req.task = Task::t3;
      req.start = g.entry;
      req.end = g.entry;
      int stride = 0;
      for (const Edge& e : g.edges)
        if (e.cls == EdgeClass::interior && req.target_edges.size() < 3 &&
            stride++ % 2 == 0)
          req.target_edges.push_back(EdgeKey(e.u, e.v));
      if (!req.target_edges.empty()) {
        BenchRow row = base_row(fixture, "partial", g);
        row.repeats = opt.repeats;
        FullPlan full = plan_full_coverage(g, g.entry, g.entry);
        PartialPlan plan;
        auto [mn, md] = time_ms(opt.repeats, [&] {
          plan = plan_partial_coverage(g, full, req);
        });
        row.cost = plan.cost;
        row.sequence_len = plan.route.sequence.size();
        row.min_ms = mn;
        row.median_ms = md;
        if (opt.with_oracle && req.target_edges.size() <= 9) {
          PartialOracle ref = brute_force_partial(g, full, req);
          row.oracle_cost = num(ref.cost);
          row.oracle_match = plan.cost == ref.cost ? "yes" : "NO";
        }
        rows.push_back(row);
      }
    }
  }

  for (const BenchRow& row : rows)
    log << "  " << row.fixture << ' ' << row.task << ": cost " << num(row.cost)
        << ", median " << num(row.median_ms) << " ms (min " << num(row.min_ms)
        << "), oracle " << row.oracle_cost << '/' << row.oracle_match << "\n";

  if (!opt.out_csv.empty()) {
    std::ofstream out(opt.out_csv);
    if (!out) throw ParseError("cannot write " + opt.out_csv.string());
    out << bench_csv(rows);
    log << "wrote " << opt.out_csv.string() << "\n";
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "fixture,task,vertices,edges,cost,sequence_len,repeats,min_ms,"
        "median_ms,oracle_cost,oracle_match\n";
  for (const BenchRow& r : rows)
    os << r.fixture << ',' << r.task << ',' << r.vertices << ',' << r.edges
       << ',' << num(r.cost) << ',' << r.sequence_len << ',' << r.repeats
       << ',' << num(r.min_ms) << ',' << num(r.median_ms) << ','
       << r.oracle_cost << ',' << r.oracle_match << "\n";
  return os.str();
}

}  // namespace fieldroute
