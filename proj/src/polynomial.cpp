#include "mtcalc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mtcalc {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

long long reduce_coeff(long long c, long long p) {
  if (p == 0) return c;
  c %= p;
  if (c < 0) c += p;
  return c;
}

constexpr std::uint16_t kMaxExponent = 0xffff;

}  // namespace

VarContext::VarContext(std::vector<VariableSpec> vars, long long modulus)
    : vars_(std::move(vars)), modulus_(modulus) {
  if (modulus_ != 0 && !is_prime(modulus_))
    throw validation_error("VarContext: modulus must be 0 or a prime");
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].degree <= 0)
      throw validation_error("VarContext: variable degree must be positive: " + vars_[i].name);
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name)
        throw validation_error("VarContext: duplicate variable name: " + vars_[i].name);
  }
}

std::optional<size_t> VarContext::index_of(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

ContextPtr make_context(std::vector<VariableSpec> vars, long long modulus) {
  return std::make_shared<const VarContext>(std::move(vars), modulus);
}

ContextPtr make_uniform_context(std::string_view prefix, size_t n, int degree,
                                long long modulus) {
  std::vector<VariableSpec> vars;
  vars.reserve(n);
  for (size_t i = 1; i <= n; ++i)
    vars.push_back({std::string(prefix) + "_" + std::to_string(i), degree});
  return make_context(std::move(vars), modulus);
}

long long weighted_degree(const VarContext& ctx, const Exponents& e) {
  long long d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += static_cast<long long>(e[i]) * ctx.var(i).degree;
  return d;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const long long da = weighted_degree(*ctx, a);
  const long long db = weighted_degree(*ctx, b);
  if (da != db) return da > db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Poly::Poly(ContextPtr ctx) : ctx_(std::move(ctx)), terms_(MonomialOrder{ctx_.get()}) {
  if (!ctx_) throw validation_error("Poly: null context");
}

Poly Poly::constant(ContextPtr ctx, long long c) {
  return monomial(std::move(ctx), Exponents(), c);
}

Poly Poly::variable(ContextPtr ctx, size_t index) {
  if (index >= ctx->size()) throw validation_error("Poly::variable: index out of range");
  Exponents e(ctx->size(), 0);
  e[index] = 1;
  return monomial(std::move(ctx), std::move(e), 1);
}

Poly Poly::monomial(ContextPtr ctx, Exponents e, long long c) {
  Poly p(std::move(ctx));
  if (e.empty()) e.assign(p.ctx_->size(), 0);
  if (e.size() != p.ctx_->size())
    throw validation_error("Poly::monomial: exponent vector length mismatch");
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, long long c) {
  c = reduce_coeff(c, modulus());
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = reduce_coeff(it->second + c, modulus());
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (ctx_ == o.ctx_) return;
  if (!(*ctx_ == *o.ctx_))
    throw validation_error("Poly: operands live in different variable contexts");
}

long long Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long long d = weighted_degree(*ctx_, terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (weighted_degree(*ctx_, e) != d) return false;
  return true;
}

std::optional<long long> Poly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return weighted_degree(*ctx_, terms_.begin()->first);
}

long long Poly::max_weighted_degree() const {
  // graded order: the leading term has the maximal weighted degree
  if (terms_.empty()) return 0;
  return weighted_degree(*ctx_, terms_.begin()->first);
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, o.modulus() == 0 ? -c : o.modulus() - c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(e, modulus() == 0 ? -c : modulus() - c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

namespace {

// Fast multiplication path: monomials packed into one uint64 whose unsigned
// order agrees with graded-lex.  Usable when exponents stay below 16 and the
// weighted degree below 2^16 with at most 12 variables.
struct PackedLayout {
  bool usable = false;
  size_t nvars = 0;

  static std::uint64_t key(const VarContext& ctx, const Exponents& e) {
    std::uint64_t k = static_cast<std::uint64_t>(weighted_degree(ctx, e)) << 48;
    for (size_t i = 0; i < e.size(); ++i)
      k |= static_cast<std::uint64_t>(e[i]) << (4 * (11 - i));
    return k;
  }

  static Exponents unpack(std::uint64_t k, size_t nvars) {
    Exponents e(nvars, 0);
    for (size_t i = 0; i < nvars; ++i)
      e[i] = static_cast<std::uint16_t>((k >> (4 * (11 - i))) & 0xf);
    return e;
  }
};

PackedLayout packed_layout(const Poly& a, const Poly& b) {
  PackedLayout layout;
  const VarContext& ctx = *a.context();
  if (ctx.size() > 12) return layout;
  const long long max_deg = a.max_weighted_degree() + b.max_weighted_degree();
  if (max_deg >= (1 << 16)) return layout;
  auto max_exp = [](const Poly& p) {
    std::uint16_t m = 0;
    for (const auto& [e, c] : p.terms())
      for (std::uint16_t x : e) m = std::max(m, x);
    return m;
  };
  if (max_exp(a) + max_exp(b) > 15) return layout;
  layout.usable = true;
  layout.nvars = ctx.size();
  return layout;
}

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(ctx_);
  if (is_zero() || o.is_zero()) return r;
  const long long p = modulus();

  if (const PackedLayout layout = packed_layout(*this, o); layout.usable) {
    std::vector<std::pair<std::uint64_t, long long>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    std::vector<std::pair<std::uint64_t, long long>> right;
    right.reserve(o.terms_.size());
    for (const auto& [e, c] : o.terms_) right.emplace_back(PackedLayout::key(*ctx_, e), c);
    for (const auto& [e, c] : terms_) {
      const std::uint64_t ka = PackedLayout::key(*ctx_, e);
      for (const auto& [kb, cb] : right) prod.emplace_back(ka + kb, c * cb);
    }
    // descending key order = canonical term order, so map building is linear
    std::sort(prod.begin(), prod.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    size_t i = 0;
    while (i < prod.size()) {
      const std::uint64_t k = prod[i].first;
      long long c = 0;
      for (; i < prod.size() && prod[i].first == k; ++i)
        c = reduce_coeff(c + prod[i].second, p);
      if (c != 0)
        r.terms_.emplace_hint(r.terms_.end(), PackedLayout::unpack(k, layout.nvars), c);
    }
    return r;
  }

  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) {
        const unsigned sum = static_cast<unsigned>(ea[i]) + eb[i];
        if (sum > kMaxExponent) throw validation_error("Poly: exponent overflow in product");
        e[i] = static_cast<std::uint16_t>(sum);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(unsigned long long e) const {
  const long long p = modulus();
  if (e == 0) return constant(ctx_, 1);
  if (is_zero()) return Poly(ctx_);

  // Frobenius scaling: over F_p, f^(p^k) raises every exponent by the factor
  // p^k and keeps coefficients.
  auto frobenius = [this](const Poly& f, unsigned long long factor) {
    Poly r(ctx_);
    for (const auto& [ex, c] : f.terms()) {
      Exponents scaled(ex.size());
      for (size_t i = 0; i < ex.size(); ++i) {
        const unsigned long long v = ex[i] * factor;
        if (v > kMaxExponent) throw validation_error("Poly: exponent overflow in power");
        scaled[i] = static_cast<std::uint16_t>(v);
      }
      r.add_term(scaled, c);
    }
    return r;
  };

  if (p > 0) {
    // base-p digits of e; digit powers are small products
    Poly result = constant(ctx_, 1);
    unsigned long long q = 1;
    unsigned long long rest = e;
    while (rest > 0) {
      const unsigned long long digit = rest % static_cast<unsigned long long>(p);
      if (digit > 0) {
        Poly block = frobenius(*this, q);
        Poly block_pow = block;
        for (unsigned long long i = 1; i < digit; ++i) block_pow = block_pow * block;
        result = result * block_pow;
      }
      rest /= static_cast<unsigned long long>(p);
      q *= static_cast<unsigned long long>(p);
    }
    return result;
  }

  // integer coefficients: plain binary exponentiation
  Poly result = constant(ctx_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (!(*ctx_ == *o.ctx_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long long shown = c;
    if (first) {
      if (shown < 0) {
        os << "-";
        shown = -shown;
      }
    } else {
      if (shown < 0) {
        os << " - ";
        shown = -shown;
      } else {
        os << " + ";
      }
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << "*";
      has_var = true;
      mono << ctx_->var(i).name;
      if (e[i] > 1) mono << "^" << e[i];
    }
    if (!has_var) {
      os << shown;
    } else if (shown == 1) {
      os << mono.str();
    } else {
      os << shown << "*" << mono.str();
    }
  }
  return os.str();
}

RingMap::RingMap(ContextPtr source, ContextPtr target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw validation_error("RingMap: one image per source variable required");
  for (size_t i = 0; i < images_.size(); ++i) {
    const Poly& img = images_[i];
    if (!(*img.context() == *target_))
      throw validation_error("RingMap: image of " + source_->var(i).name +
                             " lives in the wrong context");
    if (img.is_zero()) continue;
    const auto deg = img.homogeneous_degree();
    if (!deg || *deg != source_->var(i).degree)
      throw validation_error("RingMap: image of " + source_->var(i).name +
                             " is not homogeneous of degree " +
                             std::to_string(source_->var(i).degree));
  }
}

const Poly& RingMap::image_of(size_t var_index) const {
  if (var_index >= images_.size()) throw validation_error("RingMap: variable index out of range");
  return images_[var_index];
}

const Poly& RingMap::image_of(std::string_view var_name) const {
  const auto idx = source_->index_of(var_name);
  if (!idx) throw validation_error("RingMap: unknown variable " + std::string(var_name));
  return images_[*idx];
}

Poly RingMap::operator()(const Poly& p) const {
  if (!(*p.context() == *source_))
    throw validation_error("RingMap: polynomial does not live in the source context");
  Poly result(target_);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target_, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * images_[i].pow(e[i]);
    result = result + term;
  }
  return result;
}

RingMap identity_map(const ContextPtr& ctx) {
  std::vector<Poly> images;
  images.reserve(ctx->size());
  for (size_t i = 0; i < ctx->size(); ++i) images.push_back(Poly::variable(ctx, i));
  return RingMap(ctx, ctx, std::move(images));
}

RingMap compose(const RingMap& f, const RingMap& g) {
  if (!(*g.target() == *f.source()))
    throw validation_error("compose: inner map's target must be the outer map's source");
  std::vector<Poly> images;
  images.reserve(g.images().size());
  for (const Poly& img : g.images()) images.push_back(f(img));
  return RingMap(g.source(), f.target(), std::move(images));
}

}  // namespace mtcalc
