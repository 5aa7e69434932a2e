#include <doctest.h>

#include <cstdlib>

#include "mtcalc/cli_commands.hpp"

using namespace mtcalc;

TEST_CASE("envelopes are deterministic and carry the sorted keys") {
  const auto a = cli::cmd_ring(Family::O, 3, CoefficientField::f2(), 10);
  const auto b = cli::cmd_ring(Family::O, 3, CoefficientField::f2(), 10);
  CHECK(a.envelope.dump(2) == b.envelope.dump(2));

  std::vector<std::string> keys;
  for (auto it = a.envelope.begin(); it != a.envelope.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"citations", "command", "parameters", "result",
                                         "warnings"});
}

TEST_CASE("ring command on the zero-rank point") {
  const auto out = cli::cmd_ring(Family::O, 0, CoefficientField::f2(), 5);
  const auto& coeffs = out.envelope["result"]["series"]["coefficients"];
  CHECK(coeffs == Json::array({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("nu command carries the recorded degree-2 expression") {
  const auto out = cli::cmd_nu_degree(2, 2);
  CHECK(out.envelope["result"]["classes"][0]["mu_expression"] == "μ_{0,1}+μ_{1,0}^2");
  CHECK(out.envelope["citations"].size() > 0);
}

TEST_CASE("split command verdicts") {
  const auto out = cli::cmd_split_pair(SplitPair::O2n_in_SO2n1, 1, 2);
  CHECK(out.envelope["result"]["verdict"] == "splits");
  CHECK(out.envelope["result"]["quotient"] == "RP^2");
  const auto incon = cli::cmd_split_pair(SplitPair::SO2n_in_SO2n1, 1, 2);
  CHECK(incon.envelope["result"]["verdict"] == "inconclusive");
}

TEST_CASE("reproduce-table warns on the defective rows only") {
  const auto out = cli::cmd_reproduce_table();
  CHECK(out.envelope["warnings"].size() == 2);
  bool saw_seven = false;
  for (const auto& row : out.envelope["result"]["rows"]) {
    if (row["degree"] == 7) {
      saw_seven = true;
      CHECK(row["entries"][0]["mu_expression"] == "μ_{1,3}+μ_{5,1}");
      CHECK(row["matches_recorded"] == false);
    }
    if (row["degree"] == 9) CHECK(row["matches_recorded"] == true);
  }
  CHECK(saw_seven);
}

TEST_CASE("pin command flags the recorded case split") {
  const auto out = cli::cmd_pin(4);
  CHECK(out.envelope["result"]["pin_plus"] == true);
  CHECK(out.envelope["warnings"].size() == 1);
}

TEST_CASE("default truncation honors the environment override") {
  unsetenv("MTCALC_MAX_DEGREE");
  CHECK(cli::default_truncation() == kDefaultTruncation);
  setenv("MTCALC_MAX_DEGREE", "17", 1);
  CHECK(cli::default_truncation() == 17);
  setenv("MTCALC_MAX_DEGREE", "junk", 1);
  CHECK_THROWS_AS(cli::default_truncation(), validation_error);
  unsetenv("MTCALC_MAX_DEGREE");
}

TEST_CASE("thom command with both checks enabled") {
  const auto out =
      cli::cmd_thom(Family::U, 2, CoefficientField::q(), 20, true, true);
  CHECK(out.envelope["result"]["ses_check"]["pass"] == true);
  CHECK(out.envelope["result"]["direct_sum_check"]["pass"] == true);
  CHECK(out.envelope["result"]["bottom_degree"] == -4);
}

TEST_CASE("qhomology command modes") {
  const auto qs0 = cli::cmd_qhomology({}, true, false, false, 3);
  CHECK(qs0.envelope["result"]["series"]["coefficients"] == Json::array({1, 1, 2, 4}));
  const auto rational =
      cli::cmd_qhomology({{2, Parity::Even, 1}}, false, false, true, 4);
  CHECK(rational.envelope["result"]["series"]["coefficients"] == Json::array({1, 0, 1, 0, 1}));
}
