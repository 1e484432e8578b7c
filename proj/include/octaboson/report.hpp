#pragma once

#include <string>
#include <vector>

#include "octaboson/rational.hpp"

namespace octaboson {

struct CaseResult {
  std::string label;
  std::string residual;
  bool pass = true;
  /// The case documents a relation that must NOT hold; pass means it indeed failed.
  bool expected_failure = false;
};

/// Residuals, tolerance and verdicts of one verification run.
struct VerificationReport {
  std::string relation;
  int n = 0;
  int max_part = 0;
  std::string mode = "exact";
  std::string max_residual = "0";
  double tolerance = 0.0;
  bool pass = true;
  std::vector<CaseResult> cases;

  /// Exact case: passes iff the residual is zero (or nonzero when a failure is expected).
  void record_exact(std::string label, const Rational& residual, bool expect_failure = false);
  /// Floating case: passes iff residual < tolerance.
  void record_float(std::string label, double residual);
  /// Folds the cases and maximum of `other` into this report.
  void absorb(const VerificationReport& other);

  std::size_t failures() const;
};

}  // namespace octaboson
