#pragma once

#include <string>
#include <vector>

namespace qwtrap {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Deterministic analytic-vs-numeric self-check suite backing the CLI
// `verify` command. Every check compares an engine quantity against its
// closed form or a structural invariant at a pinned tolerance.
std::vector<CheckResult> run_verification();

}  // namespace qwtrap
