#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "mtcalc/loopspace.hpp"
#include "mtcalc/oracles.hpp"

using namespace mtcalc;

namespace {

std::vector<std::vector<int>> index_lists(const std::vector<AdmissibleWord>& words) {
  std::vector<std::vector<int>> out;
  for (const auto& w : words) out.push_back(w.indices);
  return out;
}

// unpruned reference: every admissible sequence of degree <= N, filtered
std::vector<std::vector<int>> naive_retained_words(int m, int N) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> word;
  const std::function<void(int)> grow = [&](int degree) {
    const int cap = word.empty() ? N - degree : std::min(N - degree, 2 * word.front());
    for (int j = 1; j <= cap; ++j) {
      word.insert(word.begin(), j);
      AdmissibleWord candidate{word, m};
      if (candidate.excess() > 0) out.push_back(word);
      grow(degree + j);
      word.erase(word.begin());
    }
  };
  grow(m);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("admissible word bookkeeping") {
  const AdmissibleWord w{{4, 2}, 1};
  CHECK(w.degree() == 7);
  CHECK(w.excess() == 1);
  CHECK(w.retained());
  const AdmissibleWord empty{{}, 3};
  CHECK(empty.excess_infinite());
  CHECK(empty.retained());
  CHECK(empty.degree() == 3);
  CHECK_THROWS_AS(empty.excess(), validation_error);
}

TEST_CASE("admissible word enumeration") {
  SUBCASE("degree-1 generator up to degree 4") {
    const auto words = admissible_words(1, 4);
    CHECK(index_lists(words) ==
          std::vector<std::vector<int>>{{}, {2}, {3}});  // (1) has excess 0
  }
  SUBCASE("degree-1 generator reaches (4,2) at degree 7") {
    const auto words = admissible_words(1, 7);
    const auto lists = index_lists(words);
    CHECK(std::find(lists.begin(), lists.end(), std::vector<int>{4, 2}) != lists.end());
  }
  SUBCASE("degree-0 generator up to degree 3") {
    const auto words = admissible_words(0, 3);
    CHECK(index_lists(words) ==
          std::vector<std::vector<int>>{{}, {1}, {2}, {2, 1}, {3}});
  }
  SUBCASE("matches the unpruned enumeration at small bounds") {
    for (int m = 0; m <= 3; ++m)
      for (int N = m; N <= 14; ++N)
        CHECK(index_lists(admissible_words(m, N)) == naive_retained_words(m, N));
  }
  SUBCASE("length-one words are retained exactly above the generator degree") {
    for (int m = 0; m <= 5; ++m) {
      const auto lists = index_lists(admissible_words(m, m + 12));
      for (int i = 1; i <= 12; ++i) {
        const bool present =
            std::find(lists.begin(), lists.end(), std::vector<int>{i}) != lists.end();
        CHECK(present == (i > m));
      }
    }
  }
}

TEST_CASE("free algebra series of Q-spaces") {
  SUBCASE("circle") {
    HomologyInput input;
    input.generators.push_back({1, Parity::Even, 1});
    const auto s = q_homology_series(input, 10);
    CHECK(s.coeffs(0, 5) == std::vector<Int>{1, 1, 1, 2, 3, 4});
  }
  SUBCASE("no generators gives the unit series") {
    const auto s = q_homology_series({}, 10);
    for (int d = 1; d <= 10; ++d) CHECK(s.coeff(d) == 0);
    CHECK(s.coeff(0) == 1);
  }
  SUBCASE("two-sphere: nothing between the generator and the first operation") {
    HomologyInput input;
    input.generators.push_back({2, Parity::Even, 1});
    const auto s = q_homology_series(input, 8);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(3) == 0);
    CHECK(s.coeff(4) == 1);  // y^2
    CHECK(s.coeff(5) == 1);  // Q^3 y, excess 1
  }
  SUBCASE("degree-0 generators are rejected outside the sphere mode") {
    HomologyInput input;
    input.generators.push_back({0, Parity::Even, 1});
    CHECK_THROWS_AS(q_homology_series(input, 5), validation_error);
  }
}

TEST_CASE("base-point component of QS^0") {
  const auto s = q0s0_series(12);
  CHECK(s.coeffs(0, 3) == std::vector<Int>{1, 1, 2, 4});
  CHECK(q0s0_series(0).coeff(0) == 1);
}

TEST_CASE("base-point component of Q(Y_+)") {
  SUBCASE("circle, degree one") {
    HomologyInput input;
    input.generators.push_back({1, Parity::Even, 1});
    const auto s = q0_plus_series(input, 10);
    CHECK(s.coeff(1) == 2);  // the generator and the first sphere class
  }
  SUBCASE("empty input reduces to QS^0") {
    CHECK(q0_plus_series({}, 15) == q0s0_series(15));
  }
  SUBCASE("BO(2)-sized input, degree one") {
    // additive basis of H_*(BO(2)) from 1/((1-t)(1-t^2))
    HomologyInput input;
    const auto dims = ps_mul(PoincareSeries::geometric(1, 10), PoincareSeries::geometric(2, 10));
    for (int d = 1; d <= 10; ++d) {
      const int mult = dims.coeff(d).convert_to<int>();
      if (mult > 0) input.generators.push_back({d, Parity::Even, mult});
    }
    CHECK(q0_plus_series(input, 10).coeff(1) == 2);
  }
}

TEST_CASE("rational infinite-loop homology") {
  CHECK(rational_omega_series({{ {2, Parity::Even, 1} }}, 8).coeffs(0, 8) ==
        std::vector<Int>{1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(rational_omega_series({{ {3, Parity::Odd, 1} }}, 6).coeffs(0, 6) ==
        std::vector<Int>{1, 0, 0, 1, 0, 0, 0});
  const auto both = rational_omega_series({{ {2, Parity::Even, 1}, {3, Parity::Odd, 1} }}, 12);
  const auto product = ps_mul(free_commutative_series({{2, Parity::Even, 1}}, 0, 12),
                              free_commutative_series({{3, Parity::Odd, 1}}, 0, 12));
  CHECK(both == product);
  CHECK_THROWS_AS(rational_omega_series({{ {0, Parity::Even, 1} }}, 5), validation_error);
}

TEST_CASE("suspension projection") {
  const AdmissibleWord bare{{}, 4};
  const AdmissibleWord operated{{2}, 1};

  SUBCASE("bare generators survive") {
    const auto out = suspension_projection({{ {bare, 1} }});
    REQUIRE(out.has_value());
    CHECK(*out == bare);
  }
  SUBCASE("operated classes die") {
    CHECK_FALSE(suspension_projection({{ {operated, 1} }}).has_value());
  }
  SUBCASE("products die") {
    CHECK_FALSE(suspension_projection({{ {bare, 2} }}).has_value());
    const AdmissibleWord other{{}, 1};
    CHECK_FALSE(suspension_projection({{ {bare, 1}, {other, 1} }}).has_value());
  }
  SUBCASE("malformed monomials are rejected") {
    CHECK_THROWS_AS(suspension_projection({{ {bare, 0} }}), validation_error);
    const AdmissibleWord inadmissible{{5, 1}, 1};  // 5 > 2*1
    CHECK_THROWS_AS(suspension_projection({{ {inadmissible, 1} }}), validation_error);
    const AdmissibleWord no_excess{{1}, 1};
    CHECK_THROWS_AS(suspension_projection({{ {no_excess, 1} }}), validation_error);
  }
  SUBCASE("exhaustive check at small degree: only bare generators survive") {
    for (const AdmissibleWord& w : admissible_words(1, 8)) {
      const auto out = suspension_projection({{ {w, 1} }});
      CHECK(out.has_value() == w.indices.empty());
    }
  }
}

TEST_CASE("series agree with the enumeration oracle on fixed inputs") {
  HomologyInput input;
  input.generators.push_back({1, Parity::Even, 1});
  input.generators.push_back({3, Parity::Even, 2});
  const int N = 18;
  const auto series = q_homology_series(input, N);
  std::vector<GeneratorSpec> items;
  for (const GeneratorSpec& g : input.generators) {
    items.push_back({g.degree, Parity::Even, g.multiplicity});
    for (int d : oracle::admissible_word_degrees(g.degree, N))
      items.push_back({d, Parity::Even, g.multiplicity});
  }
  CHECK(oracle::count_graded_multisets(items, 2, N) == series.coeffs(0, N));
}
