#pragma once

#include <json.hpp>

#include "kdeg/charts.hpp"
#include "kdeg/picard.hpp"
#include "kdeg/probe.hpp"

namespace kdeg {

using Json = nlohmann::ordered_json;

// Full configuration of a CLI run, embedded into every output.
struct RunConfig {
  std::string command;
  int q = 0;
  int n = -1;
  std::uint64_t seed = 0;
  unsigned prime_bits = 61;
  int trials = 0;
  std::string method;
  std::string convention;
  std::string format = "json";
  std::string cache_dir;
  std::string precision;
};

Json to_json(const RunConfig& c);
Json to_json(const DegreeRecord& r);
Json to_json(const RealInterval& iv);
Json to_json(const ChartReport& r);
Json to_json(const FactorReport& r);
Json to_json(const SubspaceReport& r);
Json to_json(const DeltaReport& r);
Json matrix_json(const MatX<Int>& m);
Json poly_json(const UPoly<Int>& p);  // coefficient strings, constant first

std::string degree_table_csv(const std::vector<DegreeRecord>& records);

// Matrix/point literal: a JSON array of rows (or a flat array of q^2
// values) whose entries are integers or "num/den" strings.
ProjPoint<Rat> parse_point_json(const std::string& text);

}  // namespace kdeg
