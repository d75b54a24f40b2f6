#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fracperiod::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured values vs thresholds
};

/// Runs the full verification suite (12 criteria). Each criterion pins its
/// tolerances in code; `on_done`, when set, is invoked after each criterion
/// finishes. An exception inside a criterion marks it failed with the
/// exception text as detail.
std::vector<CriterionResult> run_all(
    const std::function<void(const CriterionResult&)>& on_done = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// "PASS  3  semigroup-identity  <detail>" one-line format.
std::string format_line(const CriterionResult& r);

}  // namespace fracperiod::verify
