#pragma once

#include <string>
#include <vector>

namespace braidinv {

struct VerifyConfig {
  int q_max = 40;   // twisted torus family sweep bound
  int k_max = 8;    // signature sweep bound
  int m_max = 8;    // signature sweep bound
  int n_max = 4;    // strand bound for the random positive-word sweep
  bool fail_fast = false;
};

struct CheckResult {
  std::string name;
  std::string ref;      // which claim the check pins down
  bool pass = false;
  bool informational = false;  // recorded, not counted as a failure
  std::string detail;
  double millis = 0.0;  // not printed; outputs stay byte-identical across runs
};

// The full re-verification suite. Deterministic: two runs produce identical
// results (fixed RNG seed, fixed sweep order).
std::vector<CheckResult> run_verification(const VerifyConfig& config);

int count_failures(const std::vector<CheckResult>& results);

}  // namespace braidinv
