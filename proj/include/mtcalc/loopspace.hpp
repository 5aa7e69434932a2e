#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtcalc/poincare_series.hpp"

namespace mtcalc {

// A Dyer-Lashof word Q^{i_1}...Q^{i_s} applied to a generator: admissible
// when i_j <= 2 i_{j+1}; excess is i_1 - (i_2 + ... + i_s + |y|), +infinity
// for the empty word.  Retained as a polynomial generator iff excess > 0.
struct AdmissibleWord {
  std::vector<int> indices;
  int generator_degree = 0;

  int degree() const;
  bool excess_infinite() const { return indices.empty(); }
  // Finite excess; requires a nonempty word.
  long long excess() const;
  bool retained() const;  // positive excess (the empty word counts)
  std::string to_string() const;

  bool operator==(const AdmissibleWord&) const = default;
};

// Degrees (with multiplicity) of an additive basis of reduced homology.
struct HomologyInput {
  std::vector<GeneratorSpec> generators;
};

// All admissible words of positive excess (including the empty word) on a
// generator of the given degree, with total degree <= max_degree, ordered by
// degree then lexicographically on the index sequence.
std::vector<AdmissibleWord> admissible_words(int generator_degree, int max_degree);

// H_*(QY; F2) for connected Y: the free commutative algebra on the retained
// admissible words over every generator.
PoincareSeries q_homology_series(const HomologyInput& input, int trunc_degree);

// Base-point component of QS^0: free algebra on the nonempty retained words
// on a degree-0 class.
PoincareSeries q0s0_series(int trunc_degree);

// H_*(Q_0(Y_+); F2) = q_homology_series(Y) * q0s0_series.
PoincareSeries q0_plus_series(const HomologyInput& input, int trunc_degree);

// Rational homology of the base-point component of an infinite loop space:
// the free graded-commutative algebra on the positive-degree homology.
PoincareSeries rational_omega_series(const HomologyInput& input, int trunc_degree);

// A monomial in the free-algebra basis: product of powers of retained words.
struct QMonomial {
  struct Factor {
    AdmissibleWord word;
    int exponent = 1;
  };
  std::vector<Factor> factors;
};

// Stable-suspension projection onto the generators: a bare generator (empty
// word, exponent 1) maps to itself, every product and every operated class
// maps to zero.
std::optional<AdmissibleWord> suspension_projection(const QMonomial& monomial);

}  // namespace mtcalc
