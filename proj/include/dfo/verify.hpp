#pragma once

#include <string>
#include <vector>

namespace dfo::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The acceptance criteria, in order. Each is deterministic (fixed internal
// seeds) and prints nothing; callers render the results.
CheckResult fd_fully_linear_bound();      // 1
CheckResult lemma_small_delta_success();  // 2
CheckResult successful_progress();        // 3
CheckResult radius_floor();               // 4
CheckResult geometry_run_length();        // 5
CheckResult improved_kappa_eg_bound();    // 6
CheckResult tightness_instance();         // 7
CheckResult haar_lemma();                 // 8
CheckResult complexity_conformance();     // 9
CheckResult scaling_probes();             // 10
CheckResult noisy_regime();               // 11

std::vector<CheckResult> run_all();

/// Named verification suites exposed by the CLI.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace dfo::verify
