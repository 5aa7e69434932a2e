#pragma once

#include <optional>
#include <string>

#include "mtcalc/polynomial.hpp"

namespace mtcalc {

// sigma_k of the context's variables (0 <= k <= n); sigma_0 = 1.
Poly elementary_symmetric(const ContextPtr& ctx, size_t k);

// Invariance under every adjacent transposition of the variables.
bool is_symmetric(const Poly& p);
// Index i of the first transposition (i, i+1) that moves p, if any.
std::optional<size_t> symmetry_witness(const Poly& p);

// Rewrite a symmetric polynomial in t_1..t_n as a polynomial in the
// elementary symmetric basis e_1..e_n (deg e_i = i * deg t), by the classical
// leading-monomial subtraction in graded-lex order.  Non-symmetric input is
// rejected with the witness transposition named.
Poly symmetrize_reduce(const Poly& p, std::string_view out_prefix = "e");

// Substitute e_i -> sigma_i(t_1..t_n); inverse direction used by round-trip
// checks.  q must live in a context produced by symmetrize_reduce for t_ctx.
Poly substitute_elementary(const Poly& q, const ContextPtr& t_ctx);

}  // namespace mtcalc
