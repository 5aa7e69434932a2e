#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "mtcalc/errors.hpp"

namespace mtcalc {

using Int = boost::multiprecision::cpp_int;

// Default truncation bound for every series-valued computation.
inline constexpr int kDefaultTruncation = 40;

// Bounded-below integer formal series truncated at trunc_degree.
//
// Coefficients are stored for degrees min_degree..trunc_degree; degrees below
// min_degree are zero by convention and degrees above trunc_degree are
// unknown.  Values are immutable after construction.
class PoincareSeries {
 public:
  PoincareSeries(int min_degree, int trunc_degree, std::vector<Int> coefficients);

  static PoincareSeries zero(int trunc_degree);
  static PoincareSeries one(int trunc_degree);
  // t^degree
  static PoincareSeries monomial(int degree, int trunc_degree);
  // 1/(1 - t^step), step > 0
  static PoincareSeries geometric(int step, int trunc_degree);

  int min_degree() const { return min_degree_; }
  int trunc_degree() const { return trunc_degree_; }

  // Coefficient at degree d (zero below min_degree); requires d <= trunc_degree.
  const Int& coeff(int d) const;
  // Coefficients for degrees from..to inclusive; requires to <= trunc_degree.
  std::vector<Int> coeffs(int from, int to) const;

  // True if every stored coefficient is >= 0.
  bool nonnegative() const;

  std::string to_string() const;

 private:
  void normalize();

  int min_degree_;
  int trunc_degree_;
  std::vector<Int> coefficients_;  // index i holds degree min_degree_ + i
};

// Coefficientwise sum; trunc_degree = min of the inputs' truncations.
PoincareSeries ps_add(const PoincareSeries& a, const PoincareSeries& b);
// Truncated convolution; coefficients are kept only where they are complete.
PoincareSeries ps_mul(const PoincareSeries& a, const PoincareSeries& b);
// Degree shift: coefficient of the result at d is a's coefficient at d - k.
PoincareSeries ps_shift(const PoincareSeries& a, int k);

// Equal iff the coefficients agree for every degree up to the smaller
// truncation bound (treating degrees below min_degree as zero).
bool operator==(const PoincareSeries& a, const PoincareSeries& b);
inline bool operator!=(const PoincareSeries& a, const PoincareSeries& b) { return !(a == b); }

enum class Parity { Even, Odd };

struct GeneratorSpec {
  int degree = 1;
  Parity parity = Parity::Even;  // consulted only in characteristic 0
  int multiplicity = 1;
};

// Poincaré series of the free graded-commutative algebra on the given
// generators, truncated at trunc_degree.  characteristic 2: every generator
// contributes 1/(1-t^d).  characteristic 0: even generators contribute
// 1/(1-t^d), odd ones (1+t^d).  Generator degrees must be positive.
PoincareSeries free_commutative_series(const std::vector<GeneratorSpec>& gens,
                                       int characteristic, int trunc_degree);

}  // namespace mtcalc
