#include <iostream>

#include <CLI11.hpp>

#include "grplat/analyze.hpp"
#include "grplat/verify.hpp"

#ifndef GRPLAT_DEFAULT_FIXTURES
#define GRPLAT_DEFAULT_FIXTURES "fixtures"
#endif

namespace {

// exit codes: 0 ok, 1 verification mismatch, 2 input error
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

grplat::Limits resolve_limits(const std::string& config_path, std::uint64_t enum_cap,
                              std::uint64_t face_cap) {
  grplat::Limits limits;
  if (!config_path.empty()) limits = grplat::load_limits(config_path);
  if (enum_cap != 0) limits.enumeration_cap = enum_cap;
  if (face_cap != 0) limits.face_cap = face_cap;
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice-theoretic invariants of intervals [H,G] of finite groups"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t enum_cap = 0, face_cap = 0;
  app.add_option("--config", config_path, "JSON config with enumeration_cap / face_cap");
  app.add_option("--enum-cap", enum_cap, "override: max elements per enumerated group");
  app.add_option("--face-cap", face_cap, "override: max faces per chain-group dimension");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze one catalog entry");
  std::string a_catalog;
  int a_degree = 0, a_id = 0;
  bool a_homology = false, a_cm = false, a_el = false;
  analyze->add_option("--catalog", a_catalog, "catalog file")->required();
  analyze->add_option("--degree", a_degree, "entry degree")->required();
  analyze->add_option("--id", a_id, "entry id")->required();
  analyze->add_flag("--homology", a_homology, "compute f-vector and Betti numbers of Delta(C)");
  analyze->add_flag("--cm", a_cm, "run the direct Cohen-Macaulay check on C^");
  analyze->add_flag("--el", a_el, "build el and verify the dual EL property");

  // scan
  auto* scan = app.add_subcommand("scan", "analyze a whole catalog, resumably");
  std::string s_catalog, s_filter = "all", s_out;
  int s_jobs = 1;
  bool s_homology = false, s_cm = false, s_el = false;
  scan->add_option("--catalog", s_catalog, "catalog file")->required();
  scan->add_option("--filter", s_filter, "all | boolean")->check(CLI::IsMember({"all", "boolean"}));
  scan->add_option("--jobs", s_jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", s_out, "append-only JSONL results log")->required();
  scan->add_flag("--homology", s_homology, "include homology per entry");
  scan->add_flag("--cm", s_cm, "include the Cohen-Macaulay check per entry");
  scan->add_flag("--el", s_el, "include dual-EL verification per entry");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance criteria suite");
  std::string v_out, v_fixtures = GRPLAT_DEFAULT_FIXTURES;
  bool v_skip_homology = false, v_stretch = false;
  verify->add_option("--out", v_out, "write the report to this file");
  verify->add_option("--fixtures", v_fixtures, "fixtures directory");
  verify->add_flag("--skip-homology", v_skip_homology, "skip criteria needing Betti numbers");
  verify->add_flag("--stretch", v_stretch, "also run the PSL(4,2) stretch criterion");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      grplat::AnalyzeOptions options;
      options.homology = a_homology;
      options.cm = a_cm;
      options.el = a_el;
      options.limits = resolve_limits(config_path, enum_cap, face_cap);
      auto entries = grplat::load_catalog(a_catalog);
      for (const auto& e : entries) {
        if (e.degree != a_degree || e.id != a_id) continue;
        std::cout << grplat::analyze_interval(e, options).to_json_line() << "\n";
        return kExitOk;
      }
      std::cerr << "entry (" << a_degree << "," << a_id << ") not found in " << a_catalog << "\n";
      return kExitInputError;
    }

    if (*scan) {
      grplat::AnalyzeOptions options;
      options.homology = s_homology;
      options.cm = s_cm;
      options.el = s_el;
      options.limits = resolve_limits(config_path, enum_cap, face_cap);
      auto entries = grplat::load_catalog(s_catalog);
      auto filter = s_filter == "boolean" ? grplat::ScanFilter::boolean_only
                                          : grplat::ScanFilter::all;
      grplat::ScanSummary sum = grplat::scan_catalog(entries, filter, s_jobs, s_out, options);
      std::cout << "considered " << sum.considered << ", analyzed " << sum.analyzed
                << ", resumed " << sum.resumed << ", errors " << sum.errors << "\n"
                << "boolean " << sum.boolean_count << ", phi^=0 counterexamples "
                << sum.phi_hat_zero << ", phi^ < 2^(rank-1): "
                << sum.phi_hat_below_2_rank_minus_1 << ", phi^ < 2^rank: "
                << sum.phi_hat_below_2_rank << ", non-CM boolean " << sum.non_cm_boolean << "\n";
      std::cout << "non-group-complemented boolean entries:";
      for (auto [d, i] : sum.non_group_complemented) std::cout << " (" << d << "," << i << ")";
      std::cout << "\n";
      return kExitOk;
    }

    grplat::VerifyOptions options;
    options.fixtures_dir = v_fixtures;
    options.out_path = v_out;
    options.skip_homology = v_skip_homology;
    options.stretch = v_stretch;
    options.limits = resolve_limits(config_path, enum_cap, face_cap);
    grplat::VerifyReport report = grplat::verify_paper(options);
    return report.all_passed() ? kExitOk : kExitMismatch;
  } catch (const grplat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
