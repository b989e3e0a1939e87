#pragma once

#include <filesystem>
#include <iosfwd>

#include "fieldroute/io.hpp"

namespace fieldroute {

struct BenchOptions {
  std::filesystem::path fixtures_dir;
  int repeats = 5;
  bool with_oracle = false;
  std::filesystem::path out_csv;  // empty: stdout only
};

struct BenchRow {
  std::string fixture;
  std::string task;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double cost = 0.0;
  std::size_t sequence_len = 0;
  int repeats = 0;
  double min_ms = 0.0;
  double median_ms = 0.0;
  std::string oracle_cost;  // "-" when not checked
  std::string oracle_match;
};

// Times full coverage (and a canned shortest-path and partial request) on
// every field file in the directory. With `with_oracle`, small fixtures get
// exhaustive reference costs alongside.
std::vector<BenchRow> bench(const BenchOptions& opt, std::ostream& log);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace fieldroute
