#include <doctest.h>

#include "mtcalc/splitting.hpp"

using namespace mtcalc;

TEST_CASE("euler characteristic catalog") {
  CHECK(euler_char(sphere(4)) == 2);
  CHECK(euler_char(sphere(5)) == 0);
  CHECK(euler_char(real_projective(6)) == 1);
  CHECK(euler_char(real_projective(7)) == 0);
  CHECK(euler_char(complex_projective(3)) == 4);
  CHECK(euler_char(quaternionic_projective(3)) == 4);
  CHECK(sphere(4).name() == "S^4");
  CHECK_THROWS_AS(sphere(-1), validation_error);
}

TEST_CASE("transfer splitting verdicts") {
  SUBCASE("O(2n) in SO(2n+1) splits at every prime") {
    const auto v = splitting_verdict(SplitPair::O2n_in_SO2n1, 2, 2);
    CHECK(v.splits);
    CHECK(v.quotient.name() == "RP^4");
    CHECK(v.chi_mod_p == 1);
    CHECK(v.statement == "BSO(5)_+ splits off MTO(4)");
  }
  SUBCASE("SO(2n) in SO(2n+1) needs an odd prime") {
    const auto v = splitting_verdict(SplitPair::SO2n_in_SO2n1, 3, 2);
    CHECK_FALSE(v.splits);
    CHECK(v.quotient.name() == "S^6");
    CHECK(v.chi_mod_p == 0);
    const auto odd = splitting_verdict(SplitPair::SO2n_in_SO2n1, 3, 3);
    CHECK(odd.splits);
    CHECK(odd.statement.find("Sigma MTSO(7)") != std::string::npos);  // the wedge clause
  }
  SUBCASE("U(n) in SU(n+1) needs p coprime to n+1") {
    const auto v = splitting_verdict(SplitPair::Un_in_SUn1, 2, 3);
    CHECK_FALSE(v.splits);
    CHECK(v.quotient.name() == "CP^2");
    CHECK(splitting_verdict(SplitPair::Un_in_SUn1, 2, 2).splits);
  }
  SUBCASE("Pin pairs ride on odd projective spaces' even cousins") {
    const auto plus = splitting_verdict(SplitPair::PinPlus4n_in_Spin4n1, 1, 2);
    CHECK(plus.splits);
    CHECK(plus.quotient.name() == "RP^4");
    const auto minus = splitting_verdict(SplitPair::PinMinus4n2_in_Spin4n3, 1, 7);
    CHECK(minus.splits);
    CHECK(minus.quotient.name() == "RP^6");
  }
  SUBCASE("verdicts never claim non-splitting") {
    for (int n = 1; n <= 6; ++n)
      for (long long p : {2LL, 3LL, 5LL}) {
        const auto v = splitting_verdict(SplitPair::Un_in_SUn1, n, p);
        if (v.splits) CHECK(v.chi_mod_p != 0);
        if (!v.splits) CHECK(v.statement.find("inconclusive") != std::string::npos);
      }
  }
  SUBCASE("rejects bad parameters") {
    CHECK_THROWS_AS(splitting_verdict(SplitPair::O2n_in_SO2n1, 0, 2), validation_error);
    CHECK_THROWS_AS(splitting_verdict(SplitPair::O2n_in_SO2n1, 1, 4), validation_error);
  }
}

TEST_CASE("S^0 splitting verdicts") {
  CHECK(s0_split_verdict(S0Family::O2n, 5, 7).splits);  // chi(RP^10) = 1
  const auto sp = s0_split_verdict(S0Family::Spn, 3, 2);
  CHECK_FALSE(sp.splits);  // chi(HP^3) = 4
  CHECK(sp.quotient.name() == "HP^3");
  const auto so = s0_split_verdict(S0Family::SO2n, 1, 3);
  CHECK(so.splits);  // chi(S^2) = 2
  CHECK(so.statement == "S^0 splits off MTSO(2)");
  CHECK(s0_split_verdict(S0Family::PinMinus4n2, 2, 5).quotient.name() == "RP^10");
}

TEST_CASE("pair and family names round-trip") {
  for (SplitPair pair : {SplitPair::O2n_in_SO2n1, SplitPair::PinPlus4n_in_Spin4n1,
                         SplitPair::PinMinus4n2_in_Spin4n3, SplitPair::SO2n_in_SO2n1,
                         SplitPair::O2n_in_O2n1, SplitPair::Un_in_SUn1})
    CHECK(split_pair_from_name(split_pair_name(pair)) == pair);
  CHECK_FALSE(split_pair_from_name("bogus").has_value());
  for (S0Family f : {S0Family::O2n, S0Family::SO2n, S0Family::PinPlus4n, S0Family::PinMinus4n2,
                     S0Family::Un, S0Family::Spn})
    CHECK(s0_family_from_name(s0_family_name(f)) == f);
}

TEST_CASE("odd-prime series consistency") {
  const auto r = odd_p_consistency(1, 3, 40);
  CHECK(r.pass);
  CHECK(r.compared.size() == 4);
  // the common series is 1/(1 - t^4)
  const auto ring = cohomology_presentation(Family::Sp, 1, CoefficientField::fp(3));
  CHECK(ring.series(40) == free_commutative_series({{4, Parity::Even, 1}}, 0, 40));
  CHECK_THROWS_AS(odd_p_consistency(1, 2, 40), validation_error);
  CHECK_THROWS_AS(odd_p_consistency(0, 3, 40), validation_error);
}

TEST_CASE("non-exactness explorer") {
  const auto r = nonexact_explore(2, 12);
  REQUIRE(r.dims_full.size() == 13);
  REQUIRE(r.dims_special.size() == 13);
  // degree 0: both sides are connected
  CHECK(r.dims_full[0] == 1);
  CHECK(r.dims_special[0] == 1);
  // degree 1: the w_1 side sees one more class
  CHECK(r.dims_full[1] == 2);
  CHECK(r.dims_special[1] == 1);
  // the BO side dominates degreewise, so no witness arises
  CHECK_FALSE(r.witness_degree.has_value());
  CHECK(r.verdict.find("inconclusive") != std::string::npos);
  CHECK_THROWS_AS(nonexact_explore(3, 10), validation_error);
  CHECK_THROWS_AS(nonexact_explore(0, 10), validation_error);
}
