// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "mtcalc/selftest.hpp"

int main() {
  const auto results = mtcalc::run_acceptance_criteria();
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.number,
                r.name.c_str(), r.seconds);
    if (!r.pass) std::printf("       %s\n", r.detail.c_str());
  }
  return mtcalc::all_passed(results) ? 0 : 1;
}
