#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtcalc/errors.hpp"

namespace mtcalc {

struct VariableSpec {
  std::string name;
  int degree = 1;

  bool operator==(const VariableSpec&) const = default;
};

bool is_prime(long long p);

// Immutable ordered variable list with weighted degrees plus the coefficient
// modulus: a prime p for F_p arithmetic, or 0 for exact integer coefficients.
class VarContext {
 public:
  VarContext(std::vector<VariableSpec> vars, long long modulus);

  size_t size() const { return vars_.size(); }
  const VariableSpec& var(size_t i) const { return vars_[i]; }
  const std::vector<VariableSpec>& vars() const { return vars_; }
  long long modulus() const { return modulus_; }
  std::optional<size_t> index_of(std::string_view name) const;

  bool operator==(const VarContext&) const = default;

 private:
  std::vector<VariableSpec> vars_;
  long long modulus_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<VariableSpec> vars, long long modulus);
// Convenience: variables prefix_1..prefix_n, all of the given degree.
ContextPtr make_uniform_context(std::string_view prefix, size_t n, int degree,
                                long long modulus);

using Exponents = std::vector<std::uint16_t>;

long long weighted_degree(const VarContext& ctx, const Exponents& e);

// Graded-lex order with the larger monomial first: higher weighted degree
// wins, ties broken lexicographically (earlier variable, higher exponent).
struct MonomialOrder {
  const VarContext* ctx = nullptr;
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over F_p (or Z when the context modulus is
// 0) with weighted variable degrees.  Terms iterate in graded-lex order,
// leading term first; stored coefficients are nonzero canonical residues.
class Poly {
 public:
  using TermMap = std::map<Exponents, long long, MonomialOrder>;

  explicit Poly(ContextPtr ctx);
  static Poly constant(ContextPtr ctx, long long c);
  static Poly variable(ContextPtr ctx, size_t index);
  static Poly monomial(ContextPtr ctx, Exponents e, long long c);

  const ContextPtr& context() const { return ctx_; }
  long long modulus() const { return ctx_->modulus(); }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  long long coeff(const Exponents& e) const;
  // All terms share one weighted degree (the zero polynomial qualifies).
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous polynomial.
  std::optional<long long> homogeneous_degree() const;
  long long max_weighted_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly pow(unsigned long long e) const;

  bool operator==(const Poly& o) const;

  // Canonical text form, e.g. "w_1^2*w_2 + w_3".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, long long c);
  void check_compatible(const Poly& o) const;

  ContextPtr ctx_;
  TermMap terms_;
};

// Degree-preserving ring homomorphism given by images of the source
// variables; every image must be homogeneous of its variable's degree.
class RingMap {
 public:
  RingMap(ContextPtr source, ContextPtr target, std::vector<Poly> images);

  const ContextPtr& source() const { return source_; }
  const ContextPtr& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }
  const Poly& image_of(size_t var_index) const;
  const Poly& image_of(std::string_view var_name) const;

  // Substitution homomorphism.
  Poly operator()(const Poly& p) const;

 private:
  ContextPtr source_;
  ContextPtr target_;
  std::vector<Poly> images_;
};

RingMap identity_map(const ContextPtr& ctx);
// (f `compose` g)(x) = f(g(x)); g's target context must equal f's source.
RingMap compose(const RingMap& f, const RingMap& g);

}  // namespace mtcalc
