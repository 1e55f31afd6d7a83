#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grplat/analyze.hpp"
#include "helpers.hpp"

using namespace grplat;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  TempFile() { path = grplat::test::temp_path(".jsonl"); }
  ~TempFile() { std::remove(path.c_str()); }

  std::vector<json> records() const {
    std::vector<json> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) out.push_back(json::parse(line));
    return out;
  }
};

std::vector<CatalogEntry> subset(std::initializer_list<std::pair<int, int>> keys) {
  std::vector<CatalogEntry> out;
  for (auto [d, i] : keys) out.push_back(grplat::test::fixture(d, i));
  return out;
}

json strip_timing(json j) {
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_SUITE("analyze") {

TEST_CASE("analysis of the PSL(3,2) flag interval") {
  AnalysisRecord rec = analyze_interval(grplat::test::fixture(21, 1), {});
  CHECK(rec.group_order == 168);
  CHECK(rec.stabilizer_order == 8);
  CHECK(rec.boolean_lattice);
  CHECK(rec.rank == 2);
  CHECK(rec.group_complemented == false);
  CHECK(rec.phi == 16);
  CHECK(rec.phi_hat == 8);
  CHECK(rec.core_free == true);
  CHECK(rec.lambda_value == 1);
}

TEST_CASE("analysis with homology, CM and el") {
  AnalyzeOptions options;
  options.homology = true;
  options.cm = true;
  options.el = true;
  AnalysisRecord rec = analyze_interval(grplat::test::fixture(6, 1), options);
  CHECK(rec.phi_hat == 2);
  REQUIRE(rec.betti.has_value());
  CHECK(rec.betti->at(2) == 2);  // beta_1 of the wedge of two circles
  CHECK(rec.cohen_macaulay == true);
  CHECK(rec.dual_el_ok == true);
  REQUIRE(rec.decreasing_chains.has_value());
  CHECK(*rec.decreasing_chains == 2);
  CHECK(rec.dedekind);

  AnalysisRecord c2 = analyze_interval(grplat::test::fixture(2, 1), {});
  CHECK(c2.rank == 1);
  CHECK(c2.phi == 1);
  CHECK(c2.phi_hat == 1);
}

TEST_CASE("json record round trip") {
  AnalysisRecord rec = analyze_interval(grplat::test::fixture(10, 4), {});
  json j = json::parse(rec.to_json_line());
  CHECK(j["schema"] == "grplat.analysis/1");
  CHECK(j["degree"] == 10);
  CHECK(j["id"] == 4);
  CHECK(j["boolean"] == true);
  CHECK(j["group_complemented"] == true);
  CHECK(j["dedekind"] == false);
  CHECK(j["strongly_w_cyclic"] == false);
  CHECK(j["phi"] == "4");
}

TEST_CASE("scan writes sorted records and resumes") {
  auto entries = subset({{6, 1}, {3, 2}, {4, 3}, {2, 1}});
  TempFile log;

  ScanSummary first = scan_catalog(entries, ScanFilter::all, 2, log.path, {});
  CHECK(first.considered == 4);
  CHECK(first.analyzed == 4);
  CHECK(first.resumed == 0);
  auto recs = log.records();
  REQUIRE(recs.size() == 4);
  std::vector<std::pair<int, int>> keys;
  for (const auto& r : recs) keys.emplace_back(r["degree"].get<int>(), r["id"].get<int>());
  CHECK(std::is_sorted(keys.begin(), keys.end()));

  // resume: nothing recomputed, no duplicates
  ScanSummary second = scan_catalog(entries, ScanFilter::all, 1, log.path, {});
  CHECK(second.analyzed == 0);
  CHECK(second.resumed == 4);
  CHECK(log.records().size() == 4);
}

TEST_CASE("scan output is deterministic across worker counts") {
  auto entries = subset({{6, 1}, {6, 3}, {5, 3}, {4, 4}, {8, 5}, {10, 4}});
  TempFile a, b;
  scan_catalog(entries, ScanFilter::all, 1, a.path, {});
  scan_catalog(entries, ScanFilter::all, 4, b.path, {});
  auto ra = a.records(), rb = b.records();
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(strip_timing(ra[i]) == strip_timing(rb[i]));
}

TEST_CASE("boolean filter") {
  // [1,S3] (regular degree-6 S3) is not Boolean and must be filtered out
  auto entries = subset({{6, 1}, {6, 2}});
  TempFile log;
  ScanSummary sum = scan_catalog(entries, ScanFilter::boolean_only, 1, log.path, {});
  CHECK(sum.analyzed == 1);
  CHECK(sum.boolean_count == 1);
  auto recs = log.records();
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["id"] == 1);
}

TEST_CASE("empty filter match leaves an empty log") {
  auto entries = subset({{6, 2}, {8, 4}});  // neither interval is Boolean
  TempFile log;
  ScanSummary sum = scan_catalog(entries, ScanFilter::boolean_only, 1, log.path, {});
  CHECK(sum.analyzed == 0);
  CHECK(sum.boolean_count == 0);
  CHECK(sum.phi_hat_zero == 0);
  CHECK(log.records().empty());
}

TEST_CASE("non-group-complemented census over the bundled fixtures") {
  TempFile log;
  ScanSummary sum =
      scan_catalog(grplat::test::core_catalog(), ScanFilter::boolean_only, 4, log.path, {});
  CHECK(sum.phi_hat_zero == 0);
  CHECK(sum.phi_hat_below_2_rank_minus_1 == 0);
  std::vector<std::pair<int, int>> want{{21, 1}, {28, 1}};
  CHECK(sum.non_group_complemented == want);
}

TEST_CASE("enumeration-limit errors are logged and skipped") {
  auto entries = subset({{7, 6}, {2, 1}});  // A7 exceeds a tiny cap
  TempFile log;
  AnalyzeOptions options;
  options.limits.enumeration_cap = 100;
  ScanSummary sum = scan_catalog(entries, ScanFilter::all, 1, log.path, options);
  CHECK(sum.analyzed == 1);
  CHECK(sum.errors == 1);
  auto recs = log.records();
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["degree"] == 2);
  CHECK(recs[1].contains("error"));

  // the error entry counts as logged: nothing recomputed on resume
  ScanSummary again = scan_catalog(entries, ScanFilter::all, 1, log.path, options);
  CHECK(again.resumed == 2);
  CHECK(again.analyzed == 0);
}

TEST_CASE("io errors abort a scan") {
  auto entries = subset({{2, 1}});
  CHECK_THROWS_AS(
      scan_catalog(entries, ScanFilter::all, 1, "/nonexistent-dir/out.jsonl", {}), Error);
}

TEST_CASE("config file loading") {
  TempFile cfg;
  {
    std::ofstream out(cfg.path);
    out << R"({"enumeration_cap": 5000, "face_cap": 1234})";
  }
  Limits limits = load_limits(cfg.path);
  CHECK(limits.enumeration_cap == 5000);
  CHECK(limits.face_cap == 1234);
  CHECK_THROWS_AS(load_limits("/nonexistent.json"), Error);
}

}  // TEST_SUITE
