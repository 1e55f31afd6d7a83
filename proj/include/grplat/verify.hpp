#ifndef GRPLAT_VERIFY_HPP
#define GRPLAT_VERIFY_HPP

#include <string>
#include <vector>

#include "grplat/config.hpp"

namespace grplat {

enum class CriterionStatus { pass, fail, skip };

struct CriterionResult {
  int number = 0;
  std::string title;
  CriterionStatus status = CriterionStatus::fail;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::string fixtures_dir = "fixtures";
  std::string out_path;        // report file; empty = stdout only
  bool skip_homology = false;  // criteria needing Betti numbers become SKIP
  bool stretch = false;        // also run the non-CI stretch criterion
  Limits limits;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;  // skips do not fail the run
  int failures() const;
};

/// Runs the paper-verification suite: every acceptance criterion, one
/// pass/fail/skip line per criterion, paper value vs computed value.
VerifyReport verify_paper(const VerifyOptions& options);

}  // namespace grplat

#endif
