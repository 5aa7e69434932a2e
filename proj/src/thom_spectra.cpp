#include "mtcalc/thom_spectra.hpp"

namespace mtcalc {

int family_degree_multiplier(Family family) {
  switch (family) {
    case Family::O:
    case Family::SO:
      return 1;
    case Family::U:
    case Family::SU:
      return 2;
    case Family::Sp:
      return 4;
    default:
      throw validation_error("family_degree_multiplier: not a Thom-module family");
  }
}

std::string ThomModule::label() const {
  return "H^*(MT" + family_name(family) + "(" + std::to_string(n) + "); " + coeff.name() + ")";
}

ThomModule thom_module(Family family, int n, CoefficientField coeff) {
  if (n < 1) throw validation_error("thom_module: n must be >= 1");
  switch (family) {
    case Family::U:
    case Family::SU:
    case Family::Sp:
      break;
    case Family::O:
      if (coeff.kind != CoefficientField::Kind::F2)
        throw validation_error("thom_module: O is supported over F2 only");
      break;
    default:
      throw validation_error("thom_module: supported families are U, SU, Sp, O");
  }
  ThomModule m;
  m.family = family;
  m.n = n;
  m.coeff = coeff;
  m.d = family_degree_multiplier(family);
  m.base = cohomology_presentation(family, n, coeff);
  m.bottom_degree = -m.d * n;
  return m;
}

PoincareSeries mt_poincare_series(Family family, int n, CoefficientField coeff,
                                  int trunc_degree) {
  const ThomModule m = thom_module(family, n, coeff);
  return ps_shift(m.base.series(trunc_degree - m.bottom_degree), m.bottom_degree);
}

std::optional<Exponents> mt_restrict_monomial(const Exponents& a) {
  if (a.empty()) throw validation_error("mt_restrict_monomial: empty exponent vector");
  if (a.back() >= 1) return std::nullopt;  // multiple of z_n: kernel
  return Exponents(a.begin(), a.end() - 1);
}

namespace {

// Monomial counts of the free commutative ring on the given variable
// degrees, indexed by total degree.
std::vector<Int> monomial_counts(const std::vector<int>& degrees, int max_degree) {
  std::vector<Int> c(static_cast<size_t>(max_degree) + 1, Int(0));
  c[0] = 1;
  for (int d : degrees)
    for (int t = d; t <= max_degree; ++t)
      c[static_cast<size_t>(t)] += c[static_cast<size_t>(t - d)];
  return c;
}

}  // namespace

MTRestrictionReport mt_restriction_map(Family family, int n, CoefficientField coeff,
                                       int trunc_degree) {
  if (n < 1) throw validation_error("mt_restriction_map: n must be >= 1");
  if (family == Family::SU && n < 2)
    throw validation_error("mt_restriction_map: SU starts at n = 2 (MTSU(1) is a sphere)");
  MTRestrictionReport report;
  report.module = thom_module(family, n, coeff);
  report.trunc_degree = trunc_degree;
  const int d = report.module.d;
  const int bottom = report.module.bottom_degree;

  // Count basis monomials z_n^{-1} z^a directly: a_n >= 1 gives the kernel
  // (divide by z_n), a_n = 0 the complement mapping onto the shifted module.
  std::vector<int> gen_degrees;
  for (const auto& v : report.module.base.ctx->vars()) gen_degrees.push_back(v.degree);
  const std::vector<Int> all = monomial_counts(gen_degrees, trunc_degree - bottom);
  std::vector<int> without_top = gen_degrees;
  if (!without_top.empty()) without_top.pop_back();
  const std::vector<Int> rest = monomial_counts(without_top, trunc_degree - bottom);

  const PoincareSeries base_series = report.module.base.series(trunc_degree);
  // target: Sigma^{-d} MTG(n-1); at n = 1 this is the shifted sphere
  const PoincareSeries target =
      n >= 2 ? ps_shift(mt_poincare_series(family, n - 1, coeff, trunc_degree + d), -d)
             : PoincareSeries::monomial(-d, trunc_degree);

  report.kernel_is_base_ring = true;
  report.surjective = true;
  for (int k = bottom; k <= trunc_degree; ++k) {
    DegreeTriple row;
    row.degree = k;
    row.domain_dim = all[static_cast<size_t>(k - bottom)];
    // z_n^{-1} z^a with a_n >= 1 has the degree of z^{a - e_n}
    row.kernel_dim = k >= 0 ? all[static_cast<size_t>(k)] : Int(0);
    row.image_dim = rest[static_cast<size_t>(k - bottom)];
    row.target_dim = target.coeff(k);
    if (row.domain_dim != row.kernel_dim + row.image_dim)
      throw internal_error("mt_restriction_map: monomial bookkeeping is inconsistent");
    if (row.kernel_dim != base_series.coeff(k)) report.kernel_is_base_ring = false;
    if (row.image_dim != row.target_dim) report.surjective = false;
    report.degrees.push_back(std::move(row));
  }
  return report;
}

SesReport verify_ses_dimensions(Family family, int n, CoefficientField coeff,
                                int trunc_degree) {
  if (n < 1) throw validation_error("verify_ses_dimensions: n must be >= 1");
  SesReport report;
  report.family = family;
  report.n = n;
  report.coeff = coeff;
  report.trunc_degree = trunc_degree;
  report.pass = true;

  const int d = family_degree_multiplier(family);
  const PoincareSeries total = mt_poincare_series(family, n, coeff, trunc_degree);

  if (family == Family::SU && n == 1) {
    // induction base: MTSU(1) is the sphere S^{-2}
    report.note = "SU base case: verifying PS(MTSU(1)) = t^{-2}";
    const PoincareSeries sphere = PoincareSeries::monomial(-2, trunc_degree);
    for (int k = -2; k <= trunc_degree; ++k) {
      SesCheckRow row{k, total.coeff(k), Int(0), sphere.coeff(k)};
      if (row.total != row.suspended && report.pass) {
        report.pass = false;
        report.first_violation = k;
      }
      report.rows.push_back(std::move(row));
    }
    return report;
  }

  const PoincareSeries base = cohomology_presentation(family, n, coeff).series(trunc_degree);
  const PoincareSeries suspended =
      n >= 2 ? ps_shift(mt_poincare_series(family, n - 1, coeff, trunc_degree + d), -d)
             : PoincareSeries::monomial(-d, trunc_degree);

  for (int k = -d * n; k <= trunc_degree; ++k) {
    SesCheckRow row{k, total.coeff(k), base.coeff(k), suspended.coeff(k)};
    if (row.total != row.base + row.suspended && report.pass) {
      report.pass = false;
      report.first_violation = k;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

DirectSumReport mt_direct_sum_check(Family family, int n, CoefficientField coeff,
                                    int trunc_degree) {
  if (n < 1) throw validation_error("mt_direct_sum_check: n must be >= 1");
  DirectSumReport report;
  report.family = family;
  report.n = n;
  report.coeff = coeff;
  report.trunc_degree = trunc_degree;

  const int d = family_degree_multiplier(family);
  const PoincareSeries lhs = mt_poincare_series(family, n, coeff, trunc_degree);

  PoincareSeries rhs = PoincareSeries::zero(trunc_degree);
  if (family == Family::SU) {
    // telescope ends at MTSU(1) = S^{-2}
    rhs = ps_add(rhs, PoincareSeries::monomial(-d * n, trunc_degree));
    for (int j = 2; j <= n; ++j) {
      const int shift = -d * (n - j);
      const PoincareSeries term =
          cohomology_presentation(family, j, coeff).series(trunc_degree - shift);
      rhs = ps_add(rhs, ps_shift(term, shift));
    }
  } else {
    for (int j = 0; j <= n; ++j) {
      const int shift = -d * (n - j);
      const PoincareSeries term =
          cohomology_presentation(family, j, coeff).series(trunc_degree - shift);
      rhs = ps_add(rhs, ps_shift(term, shift));
    }
  }

  report.pass = true;
  for (int k = -d * n; k <= trunc_degree; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) {
      report.pass = false;
      report.first_violation = k;
      break;
    }
  }
  return report;
}

}  // namespace mtcalc
