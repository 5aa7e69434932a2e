#include "mtcalc/symmetric.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mtcalc {

namespace {

int uniform_variable_degree(const VarContext& ctx, const char* who) {
  if (ctx.size() == 0) throw validation_error(std::string(who) + ": empty variable context");
  const int d = ctx.var(0).degree;
  for (size_t i = 1; i < ctx.size(); ++i)
    if (ctx.var(i).degree != d)
      throw validation_error(std::string(who) + ": variables must share one degree");
  return d;
}

long long orbit_size(const Exponents& sorted_desc) {
  long long numerator = 1;
  long long run = 1;
  long long divisor = 1;
  for (size_t i = 0; i < sorted_desc.size(); ++i) {
    numerator *= static_cast<long long>(i + 1);
    if (i > 0 && sorted_desc[i] == sorted_desc[i - 1])
      ++run;
    else
      run = 1;
    divisor *= run;
    if (numerator % divisor == 0) {
      numerator /= divisor;
      divisor = 1;
    }
  }
  return numerator / divisor;
}

}  // namespace

Poly elementary_symmetric(const ContextPtr& ctx, size_t k) {
  const size_t n = ctx->size();
  if (k > n) throw validation_error("elementary_symmetric: k exceeds the variable count");
  Poly r(ctx);
  if (k == 0) return Poly::constant(ctx, 1);
  // iterate k-subsets of the variables
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Exponents e(n, 0);
    for (size_t i : idx) e[i] = 1;
    r += Poly::monomial(ctx, std::move(e), 1);
    size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (size_t l = j; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
  return r;
}

bool is_symmetric(const Poly& p) {
  // Group terms by the orbit of their exponent vector: symmetric iff every
  // orbit is fully present with one shared coefficient.
  struct OrbitData {
    long long coeff = 0;
    long long seen = 0;
    long long size = 0;
  };
  std::map<Exponents, OrbitData> orbits;
  for (const auto& [e, c] : p.terms()) {
    Exponents key = e;
    std::sort(key.begin(), key.end(), std::greater<>());
    auto [it, inserted] = orbits.try_emplace(key);
    if (inserted) {
      it->second.coeff = c;
      it->second.size = orbit_size(it->first);
    } else if (it->second.coeff != c) {
      return false;
    }
    ++it->second.seen;
  }
  for (const auto& [key, data] : orbits)
    if (data.seen != data.size) return false;
  return true;
}

std::optional<size_t> symmetry_witness(const Poly& p) {
  if (is_symmetric(p)) return std::nullopt;
  for (size_t i = 0; i + 1 < p.context()->size(); ++i) {
    for (const auto& [e, c] : p.terms()) {
      if (e[i] == e[i + 1]) continue;
      Exponents s = e;
      std::swap(s[i], s[i + 1]);
      if (p.coeff(s) != c) return i;
    }
  }
  throw internal_error("symmetry_witness: orbit check failed but no transposition moves p");
}

Poly symmetrize_reduce(const Poly& p, std::string_view out_prefix) {
  const ContextPtr& tctx = p.context();
  const size_t n = tctx->size();
  const int d = uniform_variable_degree(*tctx, "symmetrize_reduce");
  if (const auto w = symmetry_witness(p)) {
    throw validation_error(
        "symmetrize_reduce: input is not symmetric (moved by the transposition " +
        tctx->var(*w).name + " <-> " + tctx->var(*w + 1).name + ")");
  }

  std::vector<VariableSpec> evars;
  evars.reserve(n);
  for (size_t i = 1; i <= n; ++i)
    evars.push_back({std::string(out_prefix) + "_" + std::to_string(i),
                     d * static_cast<int>(i)});
  const ContextPtr ectx = make_context(std::move(evars), tctx->modulus());

  // build sigma_i and its powers only on demand: reductions of low degree
  // touch a small corner of the basis even when n is large
  std::map<size_t, Poly> sigma_cache;
  auto sigma_of = [&](size_t i) -> const Poly& {
    auto [it, inserted] = sigma_cache.try_emplace(i, tctx);
    if (inserted) it->second = elementary_symmetric(tctx, i);
    return it->second;
  };
  std::map<std::pair<size_t, std::uint16_t>, Poly> power_cache;
  auto sigma_pow = [&](size_t i, std::uint16_t e) -> const Poly& {
    auto [it, inserted] = power_cache.try_emplace({i, e}, tctx);
    if (inserted) it->second = e == 1 ? sigma_of(i) : sigma_of(i).pow(e);
    return it->second;
  };

  Poly rest = p;
  Poly out(ectx);
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().begin();
    // For symmetric rest the leading exponents are non-increasing; the
    // staircase differences give the elementary-symmetric exponents.
    Exponents steps(n, 0);
    for (size_t i = 0; i + 1 < n; ++i) {
      if (lead[i] < lead[i + 1])
        throw internal_error("symmetrize_reduce: leading monomial is not a staircase");
      steps[i] = static_cast<std::uint16_t>(lead[i] - lead[i + 1]);
    }
    steps[n - 1] = lead[n - 1];

    out += Poly::monomial(ectx, steps, c);
    Poly subtract = Poly::constant(tctx, c);
    for (size_t i = 0; i < n; ++i)
      if (steps[i] > 0) subtract = subtract * sigma_pow(i + 1, steps[i]);
    rest -= subtract;
  }
  return out;
}

Poly substitute_elementary(const Poly& q, const ContextPtr& t_ctx) {
  const size_t n = t_ctx->size();
  if (q.context()->size() != n)
    throw validation_error("substitute_elementary: variable counts differ");
  std::vector<Poly> images;
  images.reserve(n);
  for (size_t i = 1; i <= n; ++i) images.push_back(elementary_symmetric(t_ctx, i));
  return RingMap(q.context(), t_ctx, std::move(images))(q);
}

}  // namespace mtcalc
