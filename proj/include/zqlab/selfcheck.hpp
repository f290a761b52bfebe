#pragma once

// Library-level invariant checks, shared between `zqlab selftest` and the
// unit-test suite.

#include <string>
#include <vector>

namespace zqlab::selfcheck {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;   // measured deviation
  double bound = 0.0;   // allowed bound
  std::string detail;
};

std::vector<CheckResult> sieve_checks(bool fast);
std::vector<CheckResult> gamma_bessel_checks();
std::vector<CheckResult> zeta_checks(bool fast);
std::vector<CheckResult> mellin_pair_checks();
std::vector<CheckResult> smoothed_sum_checks(bool fast);  // empty when fast

std::vector<CheckResult> run_all(bool fast);

}  // namespace zqlab::selfcheck
