#include <doctest.h>

#include <algorithm>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/loopspace.hpp"
#include "mtcalc/oracles.hpp"

using namespace mtcalc;
using oracle::PackedF2Poly;

TEST_CASE("packed F2 polynomial algebra") {
  const PackedF2Poly x(std::vector<std::uint64_t>{PackedF2Poly::pack_var(0)});
  const PackedF2Poly y(std::vector<std::uint64_t>{PackedF2Poly::pack_var(1)});

  CHECK((x + x).is_zero());
  CHECK(x + y == y + x);
  CHECK(x * y == y * x);

  // (x + y)^2 = x^2 + y^2 mod 2
  const PackedF2Poly s = x + y;
  CHECK(s * s == x * x + y * y);
  CHECK(PackedF2Poly::one() * x == x);

  // duplicate monomials cancel pairwise on construction
  CHECK(PackedF2Poly({0, 0, 5, 5, 5}).monomials() == std::vector<std::uint64_t>{5});
}

TEST_CASE("packed elementary symmetric polynomials") {
  CHECK(oracle::packed_sigma(5, 0) == PackedF2Poly::one());
  CHECK(oracle::packed_sigma(5, 6).is_zero());
  for (int m = 1; m <= 8; ++m)
    for (int k = 1; k <= m; ++k) {
      // binomial(m, k) square-free monomials
      std::uint64_t expected = 1;
      for (int i = 1; i <= k; ++i) expected = expected * static_cast<unsigned>(m - k + i) / i;
      CHECK(oracle::packed_sigma(m, k).size() == expected);
    }
}

TEST_CASE("packed and exact routes agree on shifted expansions") {
  for (int m = 2; m <= 6; ++m) {
    const auto tctx = make_uniform_context("t", static_cast<size_t>(m), 1, 2);
    const auto all = oracle::packed_sigma_shifted_with_extra_all(m);
    for (int k = 0; k <= m + 1; ++k) {
      const Poly exact = sigma_shifted_with_extra(tctx, k);
      CHECK(oracle::pack_f2_poly(exact) == all[static_cast<size_t>(k)]);
    }
  }
}

TEST_CASE("expansion of a polynomial in the sigma generators") {
  const auto tctx = make_uniform_context("t", 3, 1, 2);
  const auto ectx = make_context({{"e_1", 1}, {"e_2", 2}, {"e_3", 3}}, 2);
  // e_1 e_2 + e_3
  const Poly q = Poly::monomial(ectx, {1, 1, 0}, 1) + Poly::variable(ectx, 2);
  const Poly direct = elementary_symmetric(tctx, 1) * elementary_symmetric(tctx, 2) +
                      elementary_symmetric(tctx, 3);
  CHECK(oracle::packed_expand_in_sigma(q, 3) == oracle::pack_f2_poly(direct));
}

TEST_CASE("multiset counting matches small hand values") {
  // items of degrees 1 and 2: count(d) = floor(d/2) + 1
  const std::vector<GeneratorSpec> gens = {{1, Parity::Even, 1}, {2, Parity::Even, 1}};
  const auto counts = oracle::count_graded_multisets(gens, 2, 9);
  for (int d = 0; d <= 9; ++d) CHECK(counts[static_cast<size_t>(d)] == d / 2 + 1);

  // one odd degree-1 item in characteristic zero: exponent at most one
  const auto ext = oracle::count_graded_multisets({{1, Parity::Odd, 1}}, 0, 4);
  CHECK(ext == std::vector<Int>{1, 1, 0, 0, 0});
}

TEST_CASE("independent word enumeration agrees with the library's degrees") {
  for (int m = 0; m <= 4; ++m) {
    const int N = 16;
    std::vector<int> lib;
    for (const auto& w : admissible_words(m, N))
      if (!w.indices.empty()) lib.push_back(w.degree());
    std::sort(lib.begin(), lib.end());
    CHECK(oracle::admissible_word_degrees(m, N) == lib);
  }
}
