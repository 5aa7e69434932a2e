#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/loopspace.hpp"
#include "mtcalc/poincare_series.hpp"

namespace mtcalc {

struct HomogeneousSpace {
  enum class Kind { Sphere, RealProj, ComplexProj, QuatProj } kind = Kind::Sphere;
  int m = 0;  // S^m, RP^m, CP^m, HP^m
  long long euler = 0;

  std::string name() const;
};

HomogeneousSpace sphere(int m);
HomogeneousSpace real_projective(int m);
HomogeneousSpace complex_projective(int m);
HomogeneousSpace quaternionic_projective(int m);

long long euler_char(const HomogeneousSpace& space);

// Subgroup pairs whose transfers the splitting rule covers.
enum class SplitPair {
  O2n_in_SO2n1,
  PinPlus4n_in_Spin4n1,
  PinMinus4n2_in_Spin4n3,
  SO2n_in_SO2n1,
  O2n_in_O2n1,
  Un_in_SUn1,
};

std::string split_pair_name(SplitPair pair);
std::optional<SplitPair> split_pair_from_name(std::string_view name);

struct SplittingVerdict {
  std::string pair;  // pair tag or S^0 family tag
  int n = 0;
  long long p = 2;
  HomogeneousSpace quotient;
  long long chi_mod_p = 0;
  bool splits = false;  // false means "inconclusive", never "does not split"
  std::string statement;
  std::vector<std::string> evidence;
};

// Transfer splitting rule: the named summand splits off when p does not
// divide the Euler characteristic of the quotient.
SplittingVerdict splitting_verdict(SplitPair pair, int n, long long p);

// Families accepted by the S^0-splitting rule.
enum class S0Family { O2n, SO2n, PinPlus4n, PinMinus4n2, Un, Spn };

std::string s0_family_name(S0Family family);
std::optional<S0Family> s0_family_from_name(std::string_view name);

// S^0 splits off MTK at p when p does not divide the Euler characteristic of
// the witness manifold (RP^{2n}, S^{2n}, CP^n, HP^n).
SplittingVerdict s0_split_verdict(S0Family family, int n, long long p);

struct OddPrimeConsistencyReport {
  int n = 0;
  long long p = 3;
  int trunc_degree = 0;
  bool pass = false;
  std::optional<int> first_violation;
  std::vector<std::string> compared;  // labels of the rings whose series must agree
};

// Series-level shadow of the odd-prime equivalences: H^*(BO(2n)), H^*(BSO(2n+1)),
// H^*(BSp(n)) and H^*(BO(2n+1)) all have the series of F_p[p_1..p_n].
OddPrimeConsistencyReport odd_p_consistency(int n, long long p,
                                            int trunc_degree = kDefaultTruncation);

struct NonexactReport {
  int m = 0;
  int trunc_degree = 0;
  std::vector<Int> dims_full;     // dim H_d(Q_0 BO(m+1)_+; F2)
  std::vector<Int> dims_special;  // dim H_d(Q_0 BSO(m+1)_+; F2)
  std::optional<int> witness_degree;
  std::string verdict;
};

// Dimension explorer for the non-exactness statement: compares the homology
// of Q_0 BO(m+1)_+ with the tensor-factor lower bound coming from
// Q_0 BSO(m+1)_+; any degree where the former is smaller would be a witness.
NonexactReport nonexact_explore(int m, int trunc_degree);

}  // namespace mtcalc
