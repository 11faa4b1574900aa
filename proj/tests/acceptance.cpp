// Verification gate: runs every named target and prints one pass/fail line
// per target plus the measured value of each check. Exits nonzero when any
// target fails.

#include <cstdio>

#include "sadic/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& name : sadic::criterion_names()) {
    sadic::CriterionResult r;
    try {
      r = sadic::run_criterion(name);
    } catch (const std::exception& e) {
      std::printf("[FAIL] %s: exception: %s\n", name.c_str(), e.what());
      ++failed;
      continue;
    }
    std::printf("[%s] %s: %s (%.2fs of %.0fs budget)\n",
                r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.claim.c_str(),
                r.seconds, r.budget_seconds);
    for (const auto& c : r.checks)
      std::printf("    %s  %s: %s\n", c.pass ? "ok " : "FAIL", c.label.c_str(),
                  c.measured.c_str());
    if (!r.pass()) ++failed;
    std::fflush(stdout);
  }
  if (failed) std::printf("%d target(s) failed\n", failed);
  return failed ? 1 : 0;
}
