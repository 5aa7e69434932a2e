#include "mtcalc/classifying_spaces.hpp"

#include <algorithm>

namespace mtcalc {

namespace {

ContextPtr indexed_context(std::string_view prefix, int from, int to, int degree_step,
                           long long modulus) {
  std::vector<VariableSpec> vars;
  for (int i = from; i <= to; ++i)
    vars.push_back({std::string(prefix) + "_" + std::to_string(i), degree_step * i});
  return make_context(std::move(vars), modulus);
}

// Rebuild a polynomial verbatim in another context with matching degrees.
Poly rename_into(const Poly& p, const ContextPtr& ctx) {
  if (p.context()->size() != ctx->size())
    throw internal_error("rename_into: variable counts differ");
  for (size_t i = 0; i < ctx->size(); ++i)
    if (p.context()->var(i).degree != ctx->var(i).degree)
      throw internal_error("rename_into: variable degrees differ");
  Poly r(ctx);
  for (const auto& [e, c] : p.terms()) r += Poly::monomial(ctx, e, c);
  return r;
}

Poly reduce_and_rename(const Poly& expansion, const ContextPtr& target_ctx) {
  return rename_into(symmetrize_reduce(expansion), target_ctx);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::O: return "O";
    case Family::SO: return "SO";
    case Family::U: return "U";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::Torus: return "Torus";
    case Family::ElemAbelian2: return "ElemAbelian2";
    case Family::RankOneProduct: return "RankOneProduct";
  }
  throw internal_error("family_name: unhandled family");
}

CoefficientField CoefficientField::fp(long long p) {
  if (p <= 2 || !is_prime(p))
    throw validation_error("CoefficientField::fp: p must be an odd prime");
  return {Kind::Fp, p};
}

CoefficientField CoefficientField::from_prime_or_zero(long long p) {
  if (p == 0) return q();
  if (p == 2) return f2();
  return fp(p);
}

std::string CoefficientField::name() const {
  switch (kind) {
    case Kind::F2: return "F2";
    case Kind::Fp: return "F" + std::to_string(p);
    case Kind::Q: return "Q";
  }
  throw internal_error("CoefficientField::name: unhandled kind");
}

std::string RingPresentation::label() const {
  std::string space;
  switch (family) {
    case Family::Torus: space = "T^" + std::to_string(rank); break;
    case Family::ElemAbelian2: space = "(Z/2)^" + std::to_string(rank); break;
    case Family::RankOneProduct: space = "G(1)^" + std::to_string(rank); break;
    default: space = family_name(family) + "(" + std::to_string(rank) + ")"; break;
  }
  return "H^*(B" + space + "; " + coeff.name() + ")";
}

PoincareSeries RingPresentation::series(int trunc_degree) const {
  std::vector<GeneratorSpec> gens;
  int relation_degree = 0;
  if (!relations.empty()) {
    // chi^2 = p_m: the series is free on p_1..p_m times (1 + t^{deg chi}).
    const auto chi_index = ctx->index_of("chi");
    if (!chi_index) throw internal_error("RingPresentation::series: relation without chi");
    relation_degree = ctx->var(*chi_index).degree;
    for (size_t i = 0; i < ctx->size(); ++i)
      if (i != *chi_index) gens.push_back({ctx->var(i).degree, Parity::Even, 1});
  } else {
    for (const auto& v : ctx->vars()) gens.push_back({v.degree, Parity::Even, 1});
  }
  PoincareSeries s = free_commutative_series(gens, coeff.modulus() == 2 ? 2 : 0, trunc_degree);
  if (relation_degree > 0) {
    const PoincareSeries exterior =
        free_commutative_series({{relation_degree, Parity::Odd, 1}}, 0, trunc_degree);
    s = ps_mul(s, exterior);
  }
  return s;
}

RingPresentation cohomology_presentation(Family family, int n, CoefficientField coeff) {
  if (n < 0) throw validation_error("cohomology_presentation: negative rank");
  const long long mod = coeff.modulus();
  const bool char2 = coeff.kind == CoefficientField::Kind::F2;
  RingPresentation pres;
  pres.family = family;
  pres.rank = n;
  pres.coeff = coeff;

  switch (family) {
    case Family::O:
      if (char2) {
        pres.ctx = indexed_context("w", 1, n, 1, 2);
      } else {
        // torsion-free part: Pontryagin classes p_1..p_{floor(n/2)}
        pres.ctx = indexed_context("p", 1, n / 2, 4, mod);
      }
      return pres;
    case Family::SO:
      if (n == 0) {
        pres.ctx = make_context({}, mod);
        pres.grassmannian_rank0 = true;  // the rank-0 Grassmannian is S^0
        return pres;
      }
      if (char2) {
        pres.ctx = indexed_context("w", 2, n, 1, 2);
        return pres;
      }
      if (n % 2 == 1) {
        pres.ctx = indexed_context("p", 1, n / 2, 4, mod);
        return pres;
      }
      {
        const int m = n / 2;
        std::vector<VariableSpec> vars;
        for (int i = 1; i <= m; ++i) vars.push_back({"p_" + std::to_string(i), 4 * i});
        vars.push_back({"chi", 2 * m});
        pres.ctx = make_context(std::move(vars), mod);
        // chi^2 = p_m, stored as p_m - chi^2
        Exponents chi_sq(pres.ctx->size(), 0);
        chi_sq.back() = 2;
        Poly rel = Poly::variable(pres.ctx, static_cast<size_t>(m - 1));
        rel -= Poly::monomial(pres.ctx, std::move(chi_sq), 1);
        pres.relations.push_back(std::move(rel));
        return pres;
      }
    case Family::U:
      pres.ctx = indexed_context("c", 1, n, 2, mod);
      return pres;
    case Family::SU:
      if (n == 0) {
        pres.ctx = make_context({}, mod);
        pres.grassmannian_rank0 = true;  // the rank-0 Grassmannian is S^1
        return pres;
      }
      pres.ctx = indexed_context("c", 2, n, 2, mod);
      return pres;
    case Family::Sp:
      pres.ctx = indexed_context("p", 1, n, 4, mod);
      return pres;
    case Family::Torus:
      pres.ctx = make_uniform_context("t", static_cast<size_t>(n), 2, mod);
      return pres;
    case Family::ElemAbelian2:
      if (!char2)
        throw validation_error("cohomology_presentation: ElemAbelian2 requires F2 coefficients");
      pres.ctx = make_uniform_context("t", static_cast<size_t>(n), 1, 2);
      return pres;
    case Family::RankOneProduct:
      throw validation_error("cohomology_presentation: rank-one products arise only as detection targets");
  }
  throw internal_error("cohomology_presentation: unhandled family");
}

NamedRingMap detection_map(Family family, int n, CoefficientField coeff) {
  if (n < 0) throw validation_error("detection_map: negative rank");
  RingPresentation source = cohomology_presentation(family, n, coeff);
  RingPresentation target;
  target.rank = n;
  target.coeff = coeff;
  switch (family) {
    case Family::O:
      if (coeff.kind != CoefficientField::Kind::F2)
        throw validation_error("detection_map: O requires F2 coefficients");
      target.family = Family::ElemAbelian2;
      target.ctx = make_uniform_context("t", static_cast<size_t>(n), 1, 2);
      break;
    case Family::U:
      target.family = Family::Torus;
      target.ctx = make_uniform_context("t", static_cast<size_t>(n), 2, coeff.modulus());
      break;
    case Family::Sp:
      target.family = Family::RankOneProduct;  // BSp(1)^n, generators of degree 4
      target.ctx = make_uniform_context("t", static_cast<size_t>(n), 4, coeff.modulus());
      break;
    default:
      throw validation_error("detection_map: supported families are O, U, Sp");
  }
  std::vector<Poly> images;
  images.reserve(source.ctx->size());
  for (size_t i = 1; i <= source.ctx->size(); ++i)
    images.push_back(elementary_symmetric(target.ctx, i));
  RingMap map(source.ctx, target.ctx, std::move(images));
  return {std::move(source), std::move(target), std::move(map)};
}

NamedRingMap standard_restriction(Family family, int n, CoefficientField coeff) {
  if (n < 1) throw validation_error("standard_restriction: rank must be >= 1");
  RingPresentation source = cohomology_presentation(family, n, coeff);
  RingPresentation target = cohomology_presentation(family, n - 1, coeff);
  std::vector<Poly> images;
  images.reserve(source.ctx->size());
  for (const auto& v : source.ctx->vars()) {
    if (const auto idx = target.ctx->index_of(v.name)) {
      images.push_back(Poly::variable(target.ctx, *idx));
    } else {
      images.push_back(Poly(target.ctx));  // the top generator dies
    }
  }
  RingMap map(source.ctx, target.ctx, std::move(images));
  return {std::move(source), std::move(target), std::move(map)};
}

long long binomial_mod(int a, int b, long long p) {
  if (b < 0 || b > a) return 0;
  unsigned long long acc = 1;
  b = std::min(b, a - b);
  for (int i = 1; i <= b; ++i) {
    acc = acc * static_cast<unsigned long long>(a - b + i);
    acc /= static_cast<unsigned long long>(i);
  }
  long long v = static_cast<long long>(acc);
  if (p > 0) v %= p;
  return v;
}

namespace {

// Common core of the shifted-sigma expansions: sum over j of
// binom(top - j, k - j) * (s c)^{k-j} * sigma_j with c = sigma_1.
Poly shifted_sigma_sum(const ContextPtr& tctx, int k, long long s, int top) {
  const long long p = tctx->modulus();
  const int m = static_cast<int>(tctx->size());
  Poly sigma1 = elementary_symmetric(tctx, 1);
  Poly result(tctx);
  for (int j = std::max(0, k - top); j <= std::min(k, m); ++j) {
    long long coeff = binomial_mod(top - j, k - j, p);
    if (s < 0 && (k - j) % 2 == 1) coeff = -coeff;  // sign of the shift
    if (p > 0) coeff = ((coeff % p) + p) % p;
    if (coeff == 0) continue;
    Poly term = sigma1.pow(static_cast<unsigned long long>(k - j)) *
                elementary_symmetric(tctx, static_cast<size_t>(j));
    result += term * Poly::constant(tctx, coeff);
  }
  return result;
}

}  // namespace

Poly sigma_shifted_with_extra(const ContextPtr& tctx, int k) {
  const int m = static_cast<int>(tctx->size());
  if (k < 0 || k > m + 1) throw validation_error("sigma_shifted_with_extra: k out of range");
  return shifted_sigma_sum(tctx, k, 1, m + 1);
}

Poly sigma_shifted(const ContextPtr& tctx, int k, long long s) {
  const int m = static_cast<int>(tctx->size());
  if (k < 0 || k > m) throw validation_error("sigma_shifted: k out of range");
  return shifted_sigma_sum(tctx, k, s, m);
}

Poly sigma_with_appended_sum(const ContextPtr& tctx, int k, long long s) {
  const int m = static_cast<int>(tctx->size());
  if (k < 0 || k > m + 1) throw validation_error("sigma_with_appended_sum: k out of range");
  const ContextPtr& ctx = tctx;
  Poly result(ctx);
  if (k <= m) result += elementary_symmetric(ctx, static_cast<size_t>(k));
  if (k >= 1 && k - 1 <= m) {
    Poly tail = elementary_symmetric(ctx, 1) * elementary_symmetric(ctx, static_cast<size_t>(k - 1));
    result += tail * Poly::constant(ctx, s);
  }
  return result;
}

Poly j_restriction_image(int n, int k) {
  if (n < 1) throw validation_error("j_restriction_image: n must be >= 1");
  if (k < 2 || k > 2 * n + 1)
    throw validation_error("j_restriction_image: k must lie in 2..2n+1");
  const ContextPtr tctx = make_uniform_context("t", static_cast<size_t>(2 * n), 1, 2);
  const ContextPtr wctx =
      cohomology_presentation(Family::O, 2 * n, CoefficientField::f2()).ctx;
  return reduce_and_rename(sigma_shifted_with_extra(tctx, k), wctx);
}

NamedRingMap j_restriction(int n) {
  if (n < 1) throw validation_error("j_restriction: n must be >= 1");
  const CoefficientField f2 = CoefficientField::f2();
  RingPresentation source = cohomology_presentation(Family::SO, 2 * n + 1, f2);
  RingPresentation target = cohomology_presentation(Family::O, 2 * n, f2);
  const ContextPtr tctx = make_uniform_context("t", static_cast<size_t>(2 * n), 1, 2);

  std::vector<Poly> images;
  images.reserve(source.ctx->size());
  for (int k = 2; k <= 2 * n + 1; ++k)
    images.push_back(reduce_and_rename(sigma_shifted_with_extra(tctx, k), target.ctx));
  RingMap map(source.ctx, target.ctx, std::move(images));
  return {std::move(source), std::move(target), std::move(map)};
}

NamedRingMap su_restriction(int n, CoefficientField coeff) {
  if (n < 1) throw validation_error("su_restriction: n must be >= 1");
  RingPresentation source = cohomology_presentation(Family::SU, n + 1, coeff);
  RingPresentation target = cohomology_presentation(Family::U, n, coeff);
  const ContextPtr tctx = make_uniform_context("t", static_cast<size_t>(n), 2, coeff.modulus());

  std::vector<Poly> images;
  images.reserve(source.ctx->size());
  for (int k = 2; k <= n + 1; ++k)
    images.push_back(reduce_and_rename(sigma_with_appended_sum(tctx, k, -1), target.ctx));
  RingMap map(source.ctx, target.ctx, std::move(images));
  return {std::move(source), std::move(target), std::move(map)};
}

USelfMapResult u_selfmap(int n, long long p, bool plus_convention) {
  if (n < 1) throw validation_error("u_selfmap: n must be >= 1");
  if (p == 2 || p == 0) throw validation_error("u_selfmap: requires an odd prime");
  const CoefficientField coeff = CoefficientField::fp(p);
  RingPresentation source = cohomology_presentation(Family::U, n, coeff);
  RingPresentation target = source;
  const ContextPtr tctx = make_uniform_context("t", static_cast<size_t>(n), 2, p);
  const long long s = plus_convention ? 1 : -1;

  std::vector<Poly> images;
  images.reserve(source.ctx->size());
  for (int k = 1; k <= n; ++k)
    images.push_back(reduce_and_rename(sigma_shifted(tctx, k, s), target.ctx));

  // Jacobian confirmation: image of c_1 is (1 + s n) c_1, the other images
  // restrict to c_k modulo the ideal (c_1).
  Exponents c1(static_cast<size_t>(n), 0);
  c1[0] = 1;
  const long long c1_coeff = images[0].coeff(c1);
  long long expected = 1 + s * static_cast<long long>(n);
  expected %= p;
  if (expected < 0) expected += p;
  if (c1_coeff != expected)
    throw internal_error("u_selfmap: c_1 image coefficient disagrees with 1 + s n");
  for (int k = 2; k <= n; ++k) {
    Poly diff = images[static_cast<size_t>(k - 1)] -
                Poly::variable(target.ctx, static_cast<size_t>(k - 1));
    for (const auto& [e, c] : diff.terms())
      if (e[0] == 0) throw internal_error("u_selfmap: image of c_k is not c_k modulo (c_1)");
  }

  RingMap map(source.ctx, target.ctx, std::move(images));
  return {{std::move(source), std::move(target), std::move(map)},
          c1_coeff != 0,
          c1_coeff};
}

RpTangentClasses rp_tangent_sw(int n) {
  if (n < 1) throw validation_error("rp_tangent_sw: n must be >= 1");
  RpTangentClasses out;
  out.w1 = ((n + 1) % 2) != 0;  // degree 1 class, never truncated for n >= 1
  const long long choose2 = (static_cast<long long>(n + 1) * n / 2) % 2;
  out.w2 = n >= 2 && choose2 != 0;  // x^2 = 0 in F2[x]/(x^{n+1}) when n < 2
  return out;
}

PinVerdict pin_structures(int n) {
  const RpTangentClasses t = rp_tangent_sw(n);
  PinVerdict v;
  v.n = n;
  v.w1 = t.w1;
  v.w2 = t.w2;
  const bool w1_squared = n >= 2 && t.w1;  // (ax)^2 = a x^2 in the truncated ring
  v.pin_plus = !t.w2;
  v.pin_minus = t.w2 == w1_squared;
  return v;
}

}  // namespace mtcalc
