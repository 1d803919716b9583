#pragma once

#include <string>
#include <vector>

namespace fdd::validation {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs expected, or the caught error
};

// Fast self-consistency matrix: independently derived spot values,
// cross-method agreements, and exact identities. Designed to finish in well
// under thirty seconds on one core.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fdd::validation
