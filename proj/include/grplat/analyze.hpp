#ifndef GRPLAT_ANALYZE_HPP
#define GRPLAT_ANALYZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "grplat/catalog.hpp"
#include "grplat/config.hpp"
#include "grplat/integer.hpp"

namespace grplat {

struct AnalyzeOptions {
  bool homology = false;  // f-vector + Betti numbers of Delta(C(H,G))
  bool cm = false;        // direct Cohen-Macaulay check of C^(H,G)
  bool el = false;        // el labeling + dual-EL verification (Boolean only)
  Limits limits;
};

/// Everything the pipeline computes for one interval [H,G], H the stabilizer
/// of point 0. All cross-module consistency assertions have run before a
/// record exists.
struct AnalysisRecord {
  int degree = 0;
  int id = 0;
  std::string name;

  std::uint64_t group_order = 0;
  std::uint64_t stabilizer_order = 0;
  std::uint64_t index = 0;
  int member_count = 0;

  bool boolean_lattice = false;
  std::optional<int> rank;  // Boolean rank (atom count), when Boolean
  bool distributive = false;
  std::optional<bool> group_complemented;  // Boolean intervals only
  bool dedekind = false;
  bool w_cyclic = false;
  bool strongly_w_cyclic = false;
  std::optional<bool> core_free;  // absent when H = G

  Integer phi;
  Integer phi_hat;
  Integer coset_poset_mu;

  std::optional<std::vector<std::uint64_t>> f_vector;  // --homology
  std::optional<std::vector<std::uint64_t>> betti;
  std::optional<bool> cohen_macaulay;        // --cm; absent if C^ not graded
  std::optional<bool> dual_el_ok;            // --el; Boolean intervals only
  std::optional<Integer> decreasing_chains;  // on the dual orientation

  std::optional<int> lambda_value;  // absent = NO_CHAIN
  bool lambda_no_chain = false;

  double elapsed_ms = 0.0;

  std::string to_json_line() const;
};

AnalysisRecord analyze_interval(const CatalogEntry& entry, const AnalyzeOptions& options);

enum class ScanFilter { all, boolean_only };

struct ScanSummary {
  int considered = 0;
  int analyzed = 0;       // records written in this run
  int resumed = 0;        // already present in the log
  int errors = 0;         // logged and skipped
  int boolean_count = 0;  // over records written this run
  // conjecture probes over the Boolean records of this run:
  int phi_hat_zero = 0;                    // phi^ = 0 (would refute the conjecture)
  int phi_hat_below_2_rank_minus_1 = 0;    // phi^ < 2^(rank-1)
  int phi_hat_below_2_rank = 0;            // phi^ < 2^rank (other rank convention)
  int non_cm_boolean = 0;                  // only counted when --cm ran
  std::vector<std::pair<int, int>> non_group_complemented;  // (degree,id)
};

/// Analyzes every catalog entry matching the filter, appending one JSON record
/// per line to out_path; (degree,id) pairs already logged are skipped, output
/// is sorted by (degree,id) regardless of the worker count.
ScanSummary scan_catalog(const std::vector<CatalogEntry>& entries, ScanFilter filter,
                         int jobs, const std::string& out_path, const AnalyzeOptions& options);

}  // namespace grplat

#endif
