#pragma once

#include <cstdint>
#include <vector>

#include "mtcalc/poincare_series.hpp"
#include "mtcalc/polynomial.hpp"

namespace mtcalc::oracle {

// Brute-force count of graded multisets of the generators, by direct
// enumeration (one recursion step per chosen copy); independent of the
// Euler-product route in free_commutative_series.  characteristic 0 caps odd
// generators at exponent 1.
std::vector<Int> count_graded_multisets(const std::vector<GeneratorSpec>& gens,
                                        int characteristic, int max_degree);

// Independent enumeration of the admissible positive-excess words on a
// generator of the given degree (built left to right, unlike the library
// route); returns the word degrees, empty word excluded.
std::vector<int> admissible_word_degrees(int generator_degree, int max_degree);

// F2 polynomial on up to 12 variables with exponents < 32, stored as sorted
// packed monomials (5-bit lanes).  Just enough machinery to expand symmetric
// polynomials by force.
class PackedF2Poly {
 public:
  PackedF2Poly() = default;
  explicit PackedF2Poly(std::vector<std::uint64_t> monomials);  // xor-normalizes

  static PackedF2Poly one();
  static std::uint64_t pack_var(size_t index) { return std::uint64_t(1) << (5 * index); }

  bool is_zero() const { return monomials_.empty(); }
  size_t size() const { return monomials_.size(); }
  const std::vector<std::uint64_t>& monomials() const { return monomials_; }

  PackedF2Poly operator+(const PackedF2Poly& o) const;  // xor
  PackedF2Poly operator*(const PackedF2Poly& o) const;
  bool operator==(const PackedF2Poly& o) const = default;

 private:
  void normalize();
  std::vector<std::uint64_t> monomials_;  // sorted, duplicates cancelled
};

// sigma_k(t_1, ..., t_m) by subset enumeration.
PackedF2Poly packed_sigma(int m, int k);

// sigma_k(t+t_1, ..., t+t_m, t) with t = t_1+...+t_m, by the iterated
// two-term recurrence over the argument list (no closed form involved).
PackedF2Poly packed_sigma_shifted_with_extra(int m, int k);
// All of sigma_0..sigma_{m+1} of the same arguments in one recurrence pass.
std::vector<PackedF2Poly> packed_sigma_shifted_with_extra_all(int m);

// Expand a polynomial whose i-th variable stands for sigma_i(t_1..t_m); the
// input must have coefficients mod 2.
PackedF2Poly packed_expand_in_sigma(const Poly& q, int m);

// Convert an F2 polynomial on exactly m variables into the packed form.
PackedF2Poly pack_f2_poly(const Poly& p);

}  // namespace mtcalc::oracle
