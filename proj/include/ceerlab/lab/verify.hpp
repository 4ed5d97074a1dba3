#pragma once

// Invariant suites that re-check a finished run using nothing but its log.

#include <string>
#include <vector>

#include "ceerlab/lab/run_log.hpp"

namespace ceerlab {

struct SuiteReport {
  std::string suite;
  bool passed = true;
  /// Set when there was nothing to check.
  bool vacuous = false;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  std::string describe() const;
};

/// triangularity, level-census, vi-vs-U, membership, protection,
/// gs-audit, injury.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite or one that does not apply to
/// the log's construction.
SuiteReport verify_log(const RunLog& log, const std::string& suite);

}  // namespace ceerlab
