#include <doctest.h>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/oracles.hpp"

using namespace mtcalc;

namespace {

std::vector<std::pair<std::string, int>> generator_table(const RingPresentation& p) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& v : p.ctx->vars()) out.emplace_back(v.name, v.degree);
  return out;
}

}  // namespace

TEST_CASE("catalog presentations") {
  using Pairs = std::vector<std::pair<std::string, int>>;
  SUBCASE("orthogonal over F2") {
    const auto p = cohomology_presentation(Family::O, 2, CoefficientField::f2());
    CHECK(generator_table(p) == Pairs{{"w_1", 1}, {"w_2", 2}});
    CHECK(p.relations.empty());
  }
  SUBCASE("special orthogonal over F2 drops w_1") {
    const auto p = cohomology_presentation(Family::SO, 3, CoefficientField::f2());
    CHECK(generator_table(p) == Pairs{{"w_2", 2}, {"w_3", 3}});
  }
  SUBCASE("unitary and symplectic") {
    const auto u = cohomology_presentation(Family::U, 3, CoefficientField::q());
    CHECK(generator_table(u) == Pairs{{"c_1", 2}, {"c_2", 4}, {"c_3", 6}});
    const auto sp = cohomology_presentation(Family::Sp, 2, CoefficientField::fp(3));
    CHECK(generator_table(sp) == Pairs{{"p_1", 4}, {"p_2", 8}});
    const auto su = cohomology_presentation(Family::SU, 3, CoefficientField::q());
    CHECK(generator_table(su) == Pairs{{"c_2", 4}, {"c_3", 6}});
  }
  SUBCASE("even special orthogonal over Q carries the Euler-class relation") {
    const auto p = cohomology_presentation(Family::SO, 4, CoefficientField::q());
    CHECK(generator_table(p) == Pairs{{"p_1", 4}, {"p_2", 8}, {"chi", 4}});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].to_string() == "p_2 - chi^2");
    CHECK(p.relations[0].is_homogeneous());
    // series equals that of the free ring Q[p_1, chi] on two degree-4 classes
    const auto s = p.series(20);
    const auto free2 = free_commutative_series({{4, Parity::Even, 2}}, 0, 20);
    CHECK(s == free2);
  }
  SUBCASE("odd-p orthogonal keeps the Pontryagin part only") {
    const auto p = cohomology_presentation(Family::O, 5, CoefficientField::fp(3));
    CHECK(generator_table(p) == Pairs{{"p_1", 4}, {"p_2", 8}});
  }
  SUBCASE("rank zero") {
    CHECK(cohomology_presentation(Family::O, 0, CoefficientField::f2()).ctx->size() == 0);
    const auto so0 = cohomology_presentation(Family::SO, 0, CoefficientField::q());
    CHECK(so0.grassmannian_rank0);
    const auto su0 = cohomology_presentation(Family::SU, 0, CoefficientField::q());
    CHECK(su0.grassmannian_rank0);
    CHECK_FALSE(cohomology_presentation(Family::U, 0, CoefficientField::q()).grassmannian_rank0);
  }
  SUBCASE("unsupported pairs are rejected") {
    CHECK_THROWS_AS(cohomology_presentation(Family::ElemAbelian2, 2, CoefficientField::q()),
                    validation_error);
    CHECK_THROWS_AS(cohomology_presentation(Family::RankOneProduct, 2, CoefficientField::f2()),
                    validation_error);
    CHECK_THROWS_AS(cohomology_presentation(Family::O, -1, CoefficientField::f2()),
                    validation_error);
  }
}

TEST_CASE("presentation series match the free count") {
  const int N = 30;
  for (const auto coeff :
       {CoefficientField::f2(), CoefficientField::fp(3), CoefficientField::q()}) {
    for (int n = 0; n <= 5; ++n) {
      for (Family family : {Family::O, Family::SO, Family::U, Family::SU, Family::Sp}) {
        if (family == Family::SO && n == 0) continue;
        if (family == Family::SU && n == 0) continue;
        const auto pres = cohomology_presentation(family, n, coeff);
        std::vector<GeneratorSpec> gens;
        int chi_degree = 0;
        for (const auto& v : pres.ctx->vars()) {
          if (v.name == "chi" && !pres.relations.empty()) {
            chi_degree = v.degree;
            continue;
          }
          gens.push_back({v.degree, Parity::Even, 1});
        }
        auto expected = free_commutative_series(gens, 0, N);
        if (chi_degree > 0)
          expected = ps_mul(expected,
                            free_commutative_series({{chi_degree, Parity::Odd, 1}}, 0, N));
        CHECK(pres.series(N) == expected);
      }
    }
  }
}

TEST_CASE("detection maps send generators to elementary symmetric polynomials") {
  SUBCASE("orthogonal") {
    const auto d = detection_map(Family::O, 2, CoefficientField::f2());
    CHECK(d.target.family == Family::ElemAbelian2);
    CHECK(d.map.image_of("w_1") == elementary_symmetric(d.target.ctx, 1));
    CHECK(d.map.image_of("w_2") == elementary_symmetric(d.target.ctx, 2));
    CHECK_THROWS_AS(detection_map(Family::O, 2, CoefficientField::fp(3)), validation_error);
  }
  SUBCASE("unitary rank one") {
    const auto d = detection_map(Family::U, 1, CoefficientField::fp(5));
    CHECK(d.map.image_of("c_1") == Poly::variable(d.target.ctx, 0));
    CHECK(d.target.ctx->var(0).degree == 2);
  }
  SUBCASE("symplectic with degree-4 lines") {
    const auto d = detection_map(Family::Sp, 2, CoefficientField::q());
    CHECK(d.target.family == Family::RankOneProduct);
    CHECK(d.target.ctx->var(0).degree == 4);
    CHECK(d.map.image_of("p_1") == elementary_symmetric(d.target.ctx, 1));
    CHECK(d.map.image_of("p_2") == elementary_symmetric(d.target.ctx, 2));
  }
  SUBCASE("special families have no detection map") {
    CHECK_THROWS_AS(detection_map(Family::SO, 3, CoefficientField::f2()), validation_error);
  }
}

TEST_CASE("standard restrictions kill the top class") {
  const auto r = standard_restriction(Family::O, 3, CoefficientField::f2());
  CHECK(r.map.image_of("w_3").is_zero());
  CHECK(r.map.image_of("w_1") == Poly::variable(r.target.ctx, 0));
  CHECK(r.map.image_of("w_2") == Poly::variable(r.target.ctx, 1));

  const auto u1 = standard_restriction(Family::U, 1, CoefficientField::fp(3));
  CHECK(u1.map.image_of("c_1").is_zero());
  CHECK(u1.target.ctx->size() == 0);

  // two steps kill w_2 and w_3
  const auto r2 = standard_restriction(Family::O, 2, CoefficientField::f2());
  const RingMap both = compose(r2.map, r.map);
  CHECK(both.image_of("w_2").is_zero());
  CHECK(both.image_of("w_3").is_zero());
  CHECK(both.image_of("w_1") == Poly::variable(r2.target.ctx, 0));
}

TEST_CASE("determinant-twisted restriction") {
  SUBCASE("rank one: the recorded images") {
    const auto j = j_restriction(1);
    const Poly w1 = Poly::variable(j.target.ctx, 0);
    const Poly w2 = Poly::variable(j.target.ctx, 1);
    CHECK(j.map.image_of("w_2") == w2 + w1.pow(2));
    CHECK(j.map.image_of("w_3") == w1 * w2);
  }
  SUBCASE("rank two: the w_1^2 term disappears") {
    const auto j = j_restriction(2);
    CHECK(j.map.image_of("w_2") == Poly::variable(j.target.ctx, 1));
  }
  SUBCASE("products push through the map") {
    const auto j = j_restriction(1);
    const Poly image = j.map(Poly::monomial(j.source.ctx, {1, 1}, 1));  // w_2 w_3
    const Poly w1 = Poly::variable(j.target.ctx, 0);
    const Poly w2 = Poly::variable(j.target.ctx, 1);
    CHECK(image == w1 * w2.pow(2) + w1.pow(3) * w2);
  }
  SUBCASE("w_2 law for n <= 12") {
    for (int n = 1; n <= 12; ++n) {
      const ContextPtr wctx =
          cohomology_presentation(Family::O, 2 * n, CoefficientField::f2()).ctx;
      Poly expected = Poly::variable(wctx, 1);
      if (n % 2 == 1) {
        Exponents sq(wctx->size(), 0);
        sq[0] = 2;
        expected += Poly::monomial(wctx, std::move(sq), 1);
      }
      CHECK(j_restriction_image(n, 2) == expected);
    }
  }
  SUBCASE("brute-force expansion fixes every image for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      const auto j = j_restriction(n);
      const auto direct = oracle::packed_sigma_shifted_with_extra_all(2 * n);
      for (int k = 2; k <= 2 * n + 1; ++k) {
        const Poly& image = j.map.image_of("w_" + std::to_string(k));
        CHECK(image.is_homogeneous());
        CHECK(image.homogeneous_degree() == k);
        const auto resub = oracle::packed_expand_in_sigma(image, 2 * n);
        CHECK(direct[static_cast<size_t>(k)] == resub);
      }
    }
  }
}

TEST_CASE("unitary-to-special-unitary restriction") {
  SUBCASE("rank one over the integers") {
    const auto r = su_restriction(1, CoefficientField::q());
    const Poly c1 = Poly::variable(r.target.ctx, 0);
    CHECK(r.map.image_of("c_2") == -(c1.pow(2)));
  }
  SUBCASE("rank two") {
    const auto r = su_restriction(2, CoefficientField::q());
    const Poly c1 = Poly::variable(r.target.ctx, 0);
    const Poly c2 = Poly::variable(r.target.ctx, 1);
    CHECK(r.map.image_of("c_2") == c2 - c1.pow(2));
    CHECK(r.map.image_of("c_3") == -(c1 * c2));
  }
  SUBCASE("degree preservation at any rank") {
    for (int n : {1, 2, 3, 5}) {
      const auto r = su_restriction(n, CoefficientField::fp(5));
      for (size_t i = 0; i < r.map.images().size(); ++i) {
        const Poly& img = r.map.images()[i];
        if (img.is_zero()) continue;
        CHECK(img.homogeneous_degree() == r.source.ctx->var(i).degree);
      }
    }
  }
}

TEST_CASE("self-map of BU(n) at odd primes") {
  SUBCASE("recorded instances") {
    const auto a = u_selfmap(2, 3);
    CHECK(a.map.map.image_of("c_1").is_zero());  // 3 c_1 = 0
    CHECK_FALSE(a.invertible);
    const auto b = u_selfmap(3, 3);
    CHECK(b.c1_coefficient == 1);  // 4 c_1 = c_1
    CHECK(b.invertible);
    const auto c = u_selfmap(1, 5);
    CHECK(c.c1_coefficient == 2);
    CHECK(c.invertible);
  }
  SUBCASE("minus convention flips the linear coefficient") {
    const auto r = u_selfmap(3, 5, false);
    CHECK(r.c1_coefficient == (1 - 3 + 5) % 5);
  }
  SUBCASE("even or zero characteristic is rejected") {
    CHECK_THROWS_AS(u_selfmap(2, 2), validation_error);
    CHECK_THROWS_AS(u_selfmap(2, 0), validation_error);
  }
}

TEST_CASE("projective-space tangent classes") {
  CHECK(rp_tangent_sw(2).w1);
  CHECK(rp_tangent_sw(2).w2);
  CHECK(rp_tangent_sw(4).w1);
  CHECK_FALSE(rp_tangent_sw(4).w2);
  CHECK_FALSE(rp_tangent_sw(3).w1);
  CHECK_FALSE(rp_tangent_sw(3).w2);
  // the degree-2 class is truncated away on RP^1
  CHECK_FALSE(rp_tangent_sw(1).w2);
  CHECK_THROWS_AS(rp_tangent_sw(0), validation_error);
}

TEST_CASE("pin structures") {
  const auto rp4 = pin_structures(4);
  CHECK(rp4.pin_plus);
  CHECK_FALSE(rp4.pin_minus);
  const auto rp6 = pin_structures(6);
  CHECK_FALSE(rp6.pin_plus);
  CHECK(rp6.pin_minus);
  const auto rp2 = pin_structures(2);
  CHECK_FALSE(rp2.pin_plus);
  CHECK(rp2.pin_minus);
  for (int k = 1; k <= 12; ++k) {
    CHECK(pin_structures(4 * k).pin_plus);
    CHECK(pin_structures(4 * k + 2).pin_minus);
  }
}
