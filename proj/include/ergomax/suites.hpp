#pragma once

#include <string>
#include <vector>

namespace ergomax {

// One named invariant check inside a suite; `checks` counts the individual
// exact comparisons behind it.
struct SuiteCase {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string detail;  // first few failures, itemized
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCase> cases;

  bool passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }
  long long checks() const {
    long long n = 0;
    for (const auto& c : cases) n += c.checks;
    return n;
  }
};

// trials scales the randomized sweeps; L_cap bounds the period in the
// exhaustive constant searches. Both can be lowered to run the same
// invariants on smaller instances.
struct SuiteConfig {
  unsigned long long seed = 1;
  long trials = 120;
  long L_cap = 6;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg = {});
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteConfig& cfg = {});

}  // namespace ergomax
