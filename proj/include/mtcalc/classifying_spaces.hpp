#pragma once

#include <string>
#include <vector>

#include "mtcalc/poincare_series.hpp"
#include "mtcalc/polynomial.hpp"
#include "mtcalc/symmetric.hpp"

namespace mtcalc {

enum class Family { O, SO, U, SU, Sp, Torus, ElemAbelian2, RankOneProduct };

std::string family_name(Family f);

struct CoefficientField {
  enum class Kind { F2, Fp, Q } kind = Kind::F2;
  long long p = 2;  // the prime for F2/Fp

  static CoefficientField f2() { return {Kind::F2, 2}; }
  static CoefficientField fp(long long p);  // p odd
  static CoefficientField q() { return {Kind::Q, 0}; }
  static CoefficientField from_prime_or_zero(long long p);  // 0 -> Q, 2 -> F2, odd -> Fp

  long long modulus() const { return kind == Kind::Q ? 0 : p; }
  std::string name() const;
  bool operator==(const CoefficientField&) const = default;
};

// Polynomial-ring description of H^*(BG(n); k): weighted generators plus the
// single relation chi^2 = p_m in the even special-orthogonal case.
struct RingPresentation {
  Family family = Family::O;
  int rank = 0;
  CoefficientField coeff;
  ContextPtr ctx;
  std::vector<Poly> relations;
  // Rank-0 special orthogonal/unitary Grassmannians are S^0 / S^1 rather
  // than classifying spaces; the ring here is left trivial and flagged.
  bool grassmannian_rank0 = false;

  PoincareSeries series(int trunc_degree) const;
  std::string label() const;  // e.g. "H^*(BO(3); F2)"
};

// A degree-preserving map together with its endpoint presentations.
struct NamedRingMap {
  RingPresentation source;
  RingPresentation target;
  RingMap map;
};

struct PinVerdict {
  int n = 0;
  bool w1 = false;  // coefficient of x in w_1(T(RP^n)), computed in F2[x]/(x^{n+1})
  bool w2 = false;  // coefficient of x^2 in w_2(T(RP^n))
  bool pin_plus = false;
  bool pin_minus = false;
};

struct RpTangentClasses {
  bool w1 = false;
  bool w2 = false;
};

struct USelfMapResult {
  NamedRingMap map;
  bool invertible = false;
  long long c1_coefficient = 0;  // coefficient of c_1 in the image of c_1
};

// H^*(BG(n); k) for the supported (family, coefficient) pairs.
RingPresentation cohomology_presentation(Family family, int n, CoefficientField coeff);

// Splitting-principle injection into the rank-one product, x_i -> sigma_i.
NamedRingMap detection_map(Family family, int n, CoefficientField coeff);

// Restriction along G(n-1) < G(n): the top generator dies.
NamedRingMap standard_restriction(Family family, int n, CoefficientField coeff);

// Restriction along the determinant-twisted embedding O(2n) -> SO(2n+1):
// w_k -> symmetrize_reduce(sigma_k(t+t_1, ..., t+t_{2n}, t)), mod 2.
NamedRingMap j_restriction(int n);
// Image of a single w_k under the same map; usable at ranks where the full
// map's top-degree expansions are out of reach.
Poly j_restriction_image(int n, int k);

// Restriction along U(n) -> SU(n+1), X -> X + (det X)^{-1}:
// c_k -> symmetrize_reduce(sigma_k(t_1, ..., t_n, -(t_1+...+t_n))).
NamedRingMap su_restriction(int n, CoefficientField coeff);

// Self-map of BU(n) induced by A -> det(A)^{-1} A at an odd prime; the
// torus computation gives x_i -> x_i + c_1 (set plus_convention = false for
// the x_i -> x_i - c_1 variant).
USelfMapResult u_selfmap(int n, long long p, bool plus_convention = true);

// (w_1, w_2) of T(RP^n) in F2[x]/(x^{n+1}): ((n+1) x, binom(n+1,2) x^2).
RpTangentClasses rp_tangent_sw(int n);

// Pin^+/Pin^- existence for RP^n from the vanishing of w_2 / w_2 + w_1^2.
PinVerdict pin_structures(int n);

// C(a, b) reduced into F_p (p = 0 keeps the exact integer).
long long binomial_mod(int a, int b, long long p);

// Expansions of elementary symmetric polynomials of shifted arguments,
// written in the t-variables of tctx (c abbreviates t_1 + ... + t_m):
//   sigma_k(t_1 + c, ..., t_m + c, c)        [extra last argument]
Poly sigma_shifted_with_extra(const ContextPtr& tctx, int k);
//   sigma_k(t_1 + s c, ..., t_m + s c)
Poly sigma_shifted(const ContextPtr& tctx, int k, long long s);
//   sigma_k(t_1, ..., t_m, s c)
Poly sigma_with_appended_sum(const ContextPtr& tctx, int k, long long s);

}  // namespace mtcalc
