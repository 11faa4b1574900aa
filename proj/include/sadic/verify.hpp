#pragma once

#include <string>
#include <vector>

namespace sadic {

struct Check {
  std::string label;
  bool pass = false;
  std::string measured;  // the observed value, always filled
};

// One verification target: a named bundle of checks with a pinned runtime
// budget. The target passes when every check passes within the budget.
struct CriterionResult {
  std::string name;
  std::string claim;
  double budget_seconds = 0.0;
  double seconds = 0.0;
  std::vector<Check> checks;

  bool pass() const {
    if (seconds >= budget_seconds) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

// The verification targets in fixed order.
std::vector<std::string> criterion_names();

// Runs one target by name; throws an unknown-fixture error otherwise.
CriterionResult run_criterion(const std::string& name);

// The sturmian target with a caller-chosen exponent schedule (the named
// target fixes all-ones).
CriterionResult run_sturmian(const std::vector<long long>& k);

std::vector<CriterionResult> run_all_criteria();

}  // namespace sadic
