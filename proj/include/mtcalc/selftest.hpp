#pragma once

#include <string>
#include <vector>

namespace mtcalc {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // first failure or a short summary
};

// The acceptance fixtures: exact reproductions of the recorded values and the
// brute-force-oracle property suites, each with its runtime budget enforced.
std::vector<CriterionResult> run_acceptance_criteria();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace mtcalc
