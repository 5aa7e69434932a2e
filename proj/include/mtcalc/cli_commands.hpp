#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/json_io.hpp"
#include "mtcalc/loopspace.hpp"
#include "mtcalc/splitting.hpp"

namespace mtcalc::cli {

// One finished command: the machine-readable envelope plus the human text.
struct CommandOutput {
  int exit_code = 0;
  Json envelope;
  std::string human;
};

// Envelope assembly shared by every subcommand; citations are sorted and the
// JSON object keys are emitted in sorted order, so identical invocations are
// byte-identical.
CommandOutput make_output(const std::string& command, Json parameters, Json result,
                          std::vector<std::string> citations,
                          std::vector<std::string> warnings, std::string human);

CommandOutput cmd_ring(Family family, int n, CoefficientField coeff,
                       std::optional<int> series_trunc);
CommandOutput cmd_restrict(const std::string& map_kind, Family family, int n,
                           CoefficientField coeff, bool minus_convention);
CommandOutput cmd_pin(int n);
CommandOutput cmd_thom(Family family, int n, CoefficientField coeff, int trunc_degree,
                       bool check_ses, bool check_direct_sum);
CommandOutput cmd_qhomology(const std::vector<GeneratorSpec>& generators, bool s0, bool plus,
                            bool rational, int trunc_degree);
CommandOutput cmd_split_pair(SplitPair pair, int n, long long p);
CommandOutput cmd_split_s0(S0Family family, int n, long long p);
CommandOutput cmd_split_odd_p(int n, long long p, int trunc_degree);
CommandOutput cmd_split_nonexact(int m, int trunc_degree);
CommandOutput cmd_nu_degree(int m, long long degree);
CommandOutput cmd_nu_count(int m, long long max_degree);
CommandOutput cmd_xi(long long p, int trunc_degree);
CommandOutput cmd_reproduce_table();
CommandOutput cmd_selftest();

// Default truncation: MTCALC_MAX_DEGREE when set, 40 otherwise.
int default_truncation();

}  // namespace mtcalc::cli
