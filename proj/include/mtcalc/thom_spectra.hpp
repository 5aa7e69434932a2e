#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/poincare_series.hpp"

namespace mtcalc {

// Degree multiplier of the family: 1 for O/SO, 2 for U/SU, 4 for Sp.
int family_degree_multiplier(Family family);

// Free rank-one module z_n^{-1} k[z_1..z_n] describing H^*(MTG(n); k), with
// the bottom class in degree -d n.
struct ThomModule {
  Family family = Family::O;
  int n = 0;
  CoefficientField coeff;
  int d = 1;
  RingPresentation base;  // H^*(BG(n); k)
  int bottom_degree = 0;  // -d * n

  std::string label() const;  // e.g. "H^*(MTO(2); F2)"
};

// Validates the (family, coefficient) hypothesis: U/SU/Sp over any supported
// field, O over F2 only.
ThomModule thom_module(Family family, int n, CoefficientField coeff);

// Series of the Thom module: ps_shift(series of BG(n), -d n).
PoincareSeries mt_poincare_series(Family family, int n, CoefficientField coeff,
                                  int trunc_degree);

// Action of the restriction H^*(MTG(n)) -> H^*(Sigma^{-d} MTG(n-1)) on the
// basis monomial z_n^{-1} z^a: kills multiples of z_n (nullopt), otherwise
// drops the last exponent.
std::optional<Exponents> mt_restrict_monomial(const Exponents& a);

struct DegreeTriple {
  int degree = 0;
  Int domain_dim;
  Int kernel_dim;
  Int image_dim;
  Int target_dim;
};

// Basis-level data of the restriction map: per-degree domain/kernel/image
// dimensions, the identification of the kernel with H^*(BG(n)), and
// surjectivity onto the shifted module.
struct MTRestrictionReport {
  ThomModule module;
  int trunc_degree = 0;
  std::vector<DegreeTriple> degrees;  // bottom_degree .. trunc_degree
  bool kernel_is_base_ring = false;   // kernel dim equals dim H^k(BG(n)) everywhere
  bool surjective = false;            // image dim equals target dim everywhere
};

MTRestrictionReport mt_restriction_map(Family family, int n, CoefficientField coeff,
                                       int trunc_degree = kDefaultTruncation);

struct SesCheckRow {
  int degree = 0;
  Int total;      // dim H^k(MTG(n))
  Int base;       // dim H^k(BG(n)_+)
  Int suspended;  // dim H^k(Sigma^{-d} MTG(n-1))
};

struct SesReport {
  Family family = Family::O;
  int n = 0;
  CoefficientField coeff;
  int trunc_degree = 0;
  bool pass = false;
  std::optional<int> first_violation;
  std::vector<SesCheckRow> rows;
  std::string note;
};

// dim H^k(MTG(n)) = dim H^k(BG(n)_+) + dim H^{k+d}(MTG(n-1)) for all
// k <= trunc_degree; for SU at n = 1 the induction base PS(MTSU(1)) = t^{-2}
// is verified instead.
SesReport verify_ses_dimensions(Family family, int n, CoefficientField coeff,
                                int trunc_degree = kDefaultTruncation);

struct DirectSumReport {
  Family family = Family::O;
  int n = 0;
  CoefficientField coeff;
  int trunc_degree = 0;
  bool pass = false;
  std::optional<int> first_violation;
};

// PS(MTG(n)) = sum over j of t^{-d(n-j)} PS(BG(j)) up to the truncation (for
// SU the telescope ends at MTSU(1) = S^{-2}).
DirectSumReport mt_direct_sum_check(Family family, int n, CoefficientField coeff,
                                    int trunc_degree = kDefaultTruncation);

}  // namespace mtcalc
