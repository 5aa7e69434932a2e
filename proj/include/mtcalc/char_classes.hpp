#pragma once

#include <string>
#include <vector>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/poincare_series.hpp"

namespace mtcalc {

// mu_e^{2^k}: base exponents over w_1..w_m with at least one odd entry,
// power marker k >= 0.  Degree = 2^k * sum(i * e_i).
struct MuMonomial {
  std::vector<int> base;
  int power_log2 = 0;

  long long degree() const;
  std::vector<int> underlying_exponents() const;  // base * 2^k
  std::string to_string() const;                  // e.g. "mu_{1,0}^2"

  bool operator==(const MuMonomial&) const = default;
};

// F2 sum of mu-monomials in canonical order (ascending lex on the underlying
// w-exponents).
using MuSum = std::vector<MuMonomial>;

std::string mu_sum_to_string(const MuSum& sum);

// nu_{i_2,...,i_{m+1}}: exponents on w_2..w_{m+1} of H^*(BSO(m+1); F2).
struct NuClass {
  int m = 2;                  // even
  std::vector<int> exponents;  // (i_2, ..., i_{m+1})

  long long degree() const;  // sum k * i_k
  std::string to_string() const;  // e.g. "nu_{1,0}"
};

// Rewrite nu_{i_2..i_{m+1}} through the restriction to BO(m) as an F2 sum of
// mu-monomials: expand prod_k (Bj^*(w_k))^{i_k} and split each w-monomial
// w^e as mu_{e'}^{2^k} with e = 2^k e'.
MuSum nu_to_mu(int m, const std::vector<int>& exponents);

// The squaring law: squaring every mu-monomial of nu_to_mu(e) must give
// nu_to_mu(2e).
bool nu_square_check(int m, const std::vector<int>& exponents);

// Number of exponent vectors of degree d with at least one odd entry.
long long count_independent_nu(int m, long long degree);

// All nu-classes of the given degree (exponent vectors in descending lex
// order), with their rewritings.
struct NuTableEntry {
  NuClass nu;
  MuSum mu;
};
std::vector<NuTableEntry> nu_classes_of_degree(int m, long long degree);

// Subalgebra series of the xi-family: p = 2 gives one generator in every
// positive degree (the partition series); odd p gives generators in degrees
// 2m(p-1), m >= 1.
PoincareSeries xi_subalgebra_series(long long p, int trunc_degree);

// Recorded-vs-derived reproduction of the universal-class table at m = 2.
struct TableRow {
  long long degree = 0;
  std::vector<NuTableEntry> entries;    // derived values, canonical order
  std::vector<std::string> recorded;    // recorded expressions for this degree
  bool matches_recorded = true;
  std::string warning;                  // set when derived != recorded
};

struct TableReport {
  int m = 2;
  std::vector<TableRow> rows;  // degrees 2..9
};

TableReport reproduce_table();

}  // namespace mtcalc
