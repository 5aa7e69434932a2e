#include "mtcalc/splitting.hpp"

#include <algorithm>

namespace mtcalc {

namespace {

void require_prime(long long p, const char* who) {
  if (!is_prime(p)) throw validation_error(std::string(who) + ": p must be prime");
}

}  // namespace

std::string HomogeneousSpace::name() const {
  switch (kind) {
    case Kind::Sphere: return "S^" + std::to_string(m);
    case Kind::RealProj: return "RP^" + std::to_string(m);
    case Kind::ComplexProj: return "CP^" + std::to_string(m);
    case Kind::QuatProj: return "HP^" + std::to_string(m);
  }
  throw internal_error("HomogeneousSpace::name: unhandled kind");
}

HomogeneousSpace sphere(int m) {
  if (m < 0) throw validation_error("sphere: negative dimension");
  return {HomogeneousSpace::Kind::Sphere, m, m % 2 == 0 ? 2 : 0};
}

HomogeneousSpace real_projective(int m) {
  if (m < 0) throw validation_error("real_projective: negative dimension");
  return {HomogeneousSpace::Kind::RealProj, m, m % 2 == 0 ? 1 : 0};
}

HomogeneousSpace complex_projective(int m) {
  if (m < 0) throw validation_error("complex_projective: negative dimension");
  return {HomogeneousSpace::Kind::ComplexProj, m, m + 1};
}

HomogeneousSpace quaternionic_projective(int m) {
  if (m < 0) throw validation_error("quaternionic_projective: negative dimension");
  return {HomogeneousSpace::Kind::QuatProj, m, m + 1};
}

long long euler_char(const HomogeneousSpace& space) { return space.euler; }

std::string split_pair_name(SplitPair pair) {
  switch (pair) {
    case SplitPair::O2n_in_SO2n1: return "O2n-SO2n1";
    case SplitPair::PinPlus4n_in_Spin4n1: return "PinPlus4n-Spin4n1";
    case SplitPair::PinMinus4n2_in_Spin4n3: return "PinMinus4n2-Spin4n3";
    case SplitPair::SO2n_in_SO2n1: return "SO2n-SO2n1";
    case SplitPair::O2n_in_O2n1: return "O2n-O2n1";
    case SplitPair::Un_in_SUn1: return "Un-SUn1";
  }
  throw internal_error("split_pair_name: unhandled pair");
}

std::optional<SplitPair> split_pair_from_name(std::string_view name) {
  for (SplitPair pair :
       {SplitPair::O2n_in_SO2n1, SplitPair::PinPlus4n_in_Spin4n1,
        SplitPair::PinMinus4n2_in_Spin4n3, SplitPair::SO2n_in_SO2n1, SplitPair::O2n_in_O2n1,
        SplitPair::Un_in_SUn1})
    if (split_pair_name(pair) == name) return pair;
  return std::nullopt;
}

SplittingVerdict splitting_verdict(SplitPair pair, int n, long long p) {
  if (n < 1) throw validation_error("splitting_verdict: n must be >= 1");
  require_prime(p, "splitting_verdict");

  SplittingVerdict v;
  v.pair = split_pair_name(pair);
  v.n = n;
  v.p = p;

  std::string summand;
  std::string host;
  std::string wedge;
  switch (pair) {
    case SplitPair::O2n_in_SO2n1:
      v.quotient = real_projective(2 * n);
      summand = "BSO(" + std::to_string(2 * n + 1) + ")_+";
      host = "MTO(" + std::to_string(2 * n) + ")";
      break;
    case SplitPair::PinPlus4n_in_Spin4n1:
      if (n < 1) throw validation_error("splitting_verdict: Pin^+ pairs need n >= 1");
      v.quotient = real_projective(4 * n);
      summand = "BSpin(" + std::to_string(4 * n + 1) + ")_+";
      host = "MTPin^+(" + std::to_string(4 * n) + ")";
      break;
    case SplitPair::PinMinus4n2_in_Spin4n3:
      v.quotient = real_projective(4 * n + 2);
      summand = "BSpin(" + std::to_string(4 * n + 3) + ")_+";
      host = "MTPin^-(" + std::to_string(4 * n + 2) + ")";
      break;
    case SplitPair::SO2n_in_SO2n1:
      v.quotient = sphere(2 * n);
      summand = "BSO(" + std::to_string(2 * n + 1) + ")_+";
      host = "MTSO(" + std::to_string(2 * n) + ")";
      wedge = "MTSO(" + std::to_string(2 * n) + ") ~ BSO(" + std::to_string(2 * n + 1) +
              ")_+ v Sigma MTSO(" + std::to_string(2 * n + 1) + ")";
      break;
    case SplitPair::O2n_in_O2n1:
      v.quotient = sphere(2 * n);
      summand = "BO(" + std::to_string(2 * n + 1) + ")_+";
      host = "MTO(" + std::to_string(2 * n) + ")";
      wedge = "MTO(" + std::to_string(2 * n) + ") ~ BO(" + std::to_string(2 * n + 1) +
              ")_+ v Sigma MTO(" + std::to_string(2 * n + 1) + ")";
      break;
    case SplitPair::Un_in_SUn1:
      v.quotient = complex_projective(n);
      summand = "BSU(" + std::to_string(n + 1) + ")_+";
      host = "MTU(" + std::to_string(n) + ")";
      break;
  }

  v.chi_mod_p = ((euler_char(v.quotient) % p) + p) % p;
  v.splits = v.chi_mod_p != 0;
  v.evidence.push_back("chi(" + v.quotient.name() + ") = " + std::to_string(euler_char(v.quotient)));
  v.evidence.push_back("chi mod " + std::to_string(p) + " = " + std::to_string(v.chi_mod_p));
  if (v.splits) {
    v.statement = summand + " splits off " + host;
    if (!wedge.empty()) v.statement += "; " + wedge;
  } else {
    v.statement = "inconclusive: the transfer criterion needs p not dividing chi(" +
                  v.quotient.name() + ")";
  }
  return v;
}

std::string s0_family_name(S0Family family) {
  switch (family) {
    case S0Family::O2n: return "O";
    case S0Family::SO2n: return "SO";
    case S0Family::PinPlus4n: return "Pin+";
    case S0Family::PinMinus4n2: return "Pin-";
    case S0Family::Un: return "U";
    case S0Family::Spn: return "Sp";
  }
  throw internal_error("s0_family_name: unhandled family");
}

std::optional<S0Family> s0_family_from_name(std::string_view name) {
  for (S0Family f : {S0Family::O2n, S0Family::SO2n, S0Family::PinPlus4n, S0Family::PinMinus4n2,
                     S0Family::Un, S0Family::Spn})
    if (s0_family_name(f) == name) return f;
  return std::nullopt;
}

SplittingVerdict s0_split_verdict(S0Family family, int n, long long p) {
  if (n < 1) throw validation_error("s0_split_verdict: n must be >= 1");
  require_prime(p, "s0_split_verdict");

  SplittingVerdict v;
  v.n = n;
  v.p = p;
  std::string host;
  switch (family) {
    case S0Family::O2n:
      v.quotient = real_projective(2 * n);
      host = "MTO(" + std::to_string(2 * n) + ")";
      break;
    case S0Family::SO2n:
      v.quotient = sphere(2 * n);
      host = "MTSO(" + std::to_string(2 * n) + ")";
      break;
    case S0Family::PinPlus4n:
      v.quotient = real_projective(4 * n);
      host = "MTPin^+(" + std::to_string(4 * n) + ")";
      break;
    case S0Family::PinMinus4n2:
      v.quotient = real_projective(4 * n + 2);
      host = "MTPin^-(" + std::to_string(4 * n + 2) + ")";
      break;
    case S0Family::Un:
      v.quotient = complex_projective(n);
      host = "MTU(" + std::to_string(n) + ")";
      break;
    case S0Family::Spn:
      v.quotient = quaternionic_projective(n);
      host = "MTSp(" + std::to_string(n) + ")";
      break;
  }
  v.pair = "S0-" + s0_family_name(family);
  v.chi_mod_p = ((euler_char(v.quotient) % p) + p) % p;
  v.splits = v.chi_mod_p != 0;
  v.evidence.push_back("witness manifold " + v.quotient.name() + " with chi = " +
                       std::to_string(euler_char(v.quotient)));
  v.evidence.push_back("chi mod " + std::to_string(p) + " = " + std::to_string(v.chi_mod_p));
  v.statement = v.splits ? "S^0 splits off " + host
                         : "inconclusive: the degree-chi map criterion needs p not dividing chi(" +
                               v.quotient.name() + ")";
  return v;
}

OddPrimeConsistencyReport odd_p_consistency(int n, long long p, int trunc_degree) {
  if (n < 1) throw validation_error("odd_p_consistency: n must be >= 1");
  require_prime(p, "odd_p_consistency");
  if (p == 2) throw validation_error("odd_p_consistency: p must be odd");

  OddPrimeConsistencyReport report;
  report.n = n;
  report.p = p;
  report.trunc_degree = trunc_degree;

  const CoefficientField coeff = CoefficientField::fp(p);
  std::vector<RingPresentation> rings;
  rings.push_back(cohomology_presentation(Family::O, 2 * n, coeff));
  rings.push_back(cohomology_presentation(Family::SO, 2 * n + 1, coeff));
  rings.push_back(cohomology_presentation(Family::Sp, n, coeff));
  rings.push_back(cohomology_presentation(Family::O, 2 * n + 1, coeff));

  // reference series: F_p[p_1..p_n] with deg p_i = 4i
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({4 * i, Parity::Even, 1});
  const PoincareSeries reference = free_commutative_series(gens, 0, trunc_degree);

  report.pass = true;
  for (const RingPresentation& ring : rings) {
    report.compared.push_back(ring.label());
    const PoincareSeries s = ring.series(trunc_degree);
    for (int k = 0; k <= trunc_degree; ++k) {
      if (s.coeff(k) != reference.coeff(k)) {
        report.pass = false;
        if (!report.first_violation) report.first_violation = k;
        break;
      }
    }
  }
  return report;
}

NonexactReport nonexact_explore(int m, int trunc_degree) {
  if (m < 2 || m % 2 != 0) throw validation_error("nonexact_explore: m must be even and >= 2");
  if (trunc_degree < 0) throw validation_error("nonexact_explore: negative truncation");

  NonexactReport report;
  report.m = m;
  report.trunc_degree = trunc_degree;

  // additive bases of H_*(BO(m+1); F2) and H_*(BSO(m+1); F2) from the series
  const CoefficientField f2 = CoefficientField::f2();
  auto homology_input = [&](Family family) {
    const PoincareSeries s =
        cohomology_presentation(family, m + 1, f2).series(trunc_degree);
    HomologyInput input;
    for (int d = 1; d <= trunc_degree; ++d) {
      const Int& dim = s.coeff(d);
      if (dim > 0) input.generators.push_back({d, Parity::Even, dim.convert_to<int>()});
    }
    return input;
  };

  const PoincareSeries full = q0_plus_series(homology_input(Family::O), trunc_degree);
  const PoincareSeries special = q0_plus_series(homology_input(Family::SO), trunc_degree);
  report.dims_full = full.coeffs(0, trunc_degree);
  report.dims_special = special.coeffs(0, trunc_degree);

  for (int d = 0; d <= trunc_degree; ++d) {
    if (full.coeff(d) < special.coeff(d)) {
      report.witness_degree = d;
      break;
    }
  }
  report.verdict = report.witness_degree
                       ? "witness found: the middle term is too small in degree " +
                             std::to_string(*report.witness_degree)
                       : "inconclusive: the non-exactness argument runs through the homology "
                         "suspension, not through dimension counts";
  return report;
}

}  // namespace mtcalc
