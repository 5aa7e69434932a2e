#include <doctest.h>

#include <random>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/symmetric.hpp"

using namespace mtcalc;

TEST_CASE("elementary symmetric polynomials") {
  const auto tctx = make_uniform_context("t", 3, 1, 2);
  CHECK(elementary_symmetric(tctx, 0) == Poly::constant(tctx, 1));
  CHECK(elementary_symmetric(tctx, 1).term_count() == 3);
  CHECK(elementary_symmetric(tctx, 2).term_count() == 3);
  CHECK(elementary_symmetric(tctx, 3) == Poly::monomial(tctx, {1, 1, 1}, 1));
  CHECK_THROWS_AS(elementary_symmetric(tctx, 4), validation_error);
}

TEST_CASE("symmetry detection") {
  const auto tctx = make_uniform_context("t", 3, 1, 2);
  CHECK(is_symmetric(elementary_symmetric(tctx, 1)));
  CHECK(is_symmetric(elementary_symmetric(tctx, 2) * elementary_symmetric(tctx, 1)));
  CHECK_FALSE(is_symmetric(Poly::variable(tctx, 0)));
  CHECK(is_symmetric(Poly(tctx)));
  CHECK(is_symmetric(Poly::constant(tctx, 1)));

  // t_1 t_2^2 + permutation-orbit gap
  const Poly broken = Poly::monomial(tctx, {1, 2, 0}, 1) + Poly::monomial(tctx, {2, 1, 0}, 1);
  CHECK_FALSE(is_symmetric(broken));
  CHECK(symmetry_witness(broken).has_value());
}

TEST_CASE("reduction to the elementary basis") {
  SUBCASE("sigma_2 itself") {
    const auto tctx = make_uniform_context("t", 2, 1, 2);
    const Poly q = symmetrize_reduce(elementary_symmetric(tctx, 2));
    CHECK(q.to_string() == "e_2");
    CHECK(q.context()->var(1).degree == 2);
  }
  SUBCASE("power sums over F2") {
    const auto tctx = make_uniform_context("t", 2, 1, 2);
    const Poly psum = Poly::monomial(tctx, {2, 0}, 1) + Poly::monomial(tctx, {0, 2}, 1);
    const Poly q = symmetrize_reduce(psum);
    CHECK(q.to_string() == "e_1^2");
    // brute-force check by re-substitution
    CHECK(substitute_elementary(q, tctx) == psum);
  }
  SUBCASE("sigma_2 of uniformly shifted arguments") {
    // sigma_2(t + t_1, t + t_2, t) with t = t_1 + t_2, over F_2
    const auto tctx = make_uniform_context("t", 2, 1, 2);
    const Poly expansion = sigma_shifted_with_extra(tctx, 2);
    CHECK(is_symmetric(expansion));
    const Poly q = symmetrize_reduce(expansion);
    CHECK(q.to_string() == "e_1^2 + e_2");
  }
  SUBCASE("sigma_3 of shifted arguments in four variables is symmetric") {
    const auto tctx = make_uniform_context("t", 4, 1, 2);
    CHECK(is_symmetric(sigma_shifted_with_extra(tctx, 3)));
  }
  SUBCASE("weighted variable degrees carry over") {
    const auto tctx = make_uniform_context("t", 2, 4, 0);  // symplectic-style degree 4
    const Poly q = symmetrize_reduce(elementary_symmetric(tctx, 2));
    CHECK(q.context()->var(0).degree == 4);
    CHECK(q.context()->var(1).degree == 8);
  }
  SUBCASE("non-symmetric input names a witness transposition") {
    const auto tctx = make_uniform_context("t", 3, 1, 2);
    try {
      symmetrize_reduce(Poly::variable(tctx, 1));
      FAIL("expected a validation error");
    } catch (const validation_error& e) {
      CHECK(std::string(e.what()).find("t_1 <-> t_2") != std::string::npos);
    }
  }
  SUBCASE("constants reduce to constants") {
    const auto tctx = make_uniform_context("t", 3, 1, 5);
    CHECK(symmetrize_reduce(Poly::constant(tctx, 3)).to_string() == "3");
    CHECK(symmetrize_reduce(Poly(tctx)).is_zero());
  }
}

TEST_CASE("round trip on random symmetric polynomials") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> nvars(2, 4);
  std::uniform_int_distribution<int> exp_dist(0, 2);
  std::uniform_int_distribution<long long> coeff_dist(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = static_cast<size_t>(nvars(rng));
    const long long mod = std::vector<long long>{2, 3, 0}[static_cast<size_t>(trial % 3)];
    const auto tctx = make_uniform_context("t", n, 1, mod);
    Poly p(tctx);
    for (int t = 0; t < 3; ++t) {
      Poly factor = Poly::constant(tctx, coeff_dist(rng));
      for (size_t i = 1; i <= n; ++i) {
        const int e = exp_dist(rng);
        if (e > 0) factor = factor * elementary_symmetric(tctx, i).pow(static_cast<unsigned>(e));
      }
      p += factor;
    }
    const Poly q = symmetrize_reduce(p);
    CHECK(substitute_elementary(q, tctx) == p);
  }
}
