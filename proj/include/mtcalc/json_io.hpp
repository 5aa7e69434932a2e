#pragma once

#include <json.hpp>

#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/poincare_series.hpp"
#include "mtcalc/polynomial.hpp"

namespace mtcalc {

using Json = nlohmann::json;

// Arbitrary-precision coefficients serialize as numbers while they fit in
// 64 bits and as decimal strings beyond that.
inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Json series_to_json(const PoincareSeries& s) {
  Json coeffs = Json::array();
  for (int d = s.min_degree(); d <= s.trunc_degree(); ++d) coeffs.push_back(int_to_json(s.coeff(d)));
  return Json{{"min_degree", s.min_degree()},
              {"trunc_degree", s.trunc_degree()},
              {"coefficients", std::move(coeffs)}};
}

// [exponents, coefficient] pairs in the canonical (graded-lex) term order.
inline Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (std::uint16_t x : e) exps.push_back(static_cast<int>(x));
    terms.push_back(Json::array({std::move(exps), c}));
  }
  return Json{{"terms", std::move(terms)}, {"text", p.to_string()}};
}

inline Json presentation_to_json(const RingPresentation& pres) {
  Json gens = Json::array();
  for (const auto& v : pres.ctx->vars()) gens.push_back(Json{{"name", v.name}, {"degree", v.degree}});
  Json relations = Json::array();
  for (const Poly& rel : pres.relations) relations.push_back(rel.to_string());
  Json out{{"family", family_name(pres.family)},
           {"rank", pres.rank},
           {"coefficient", pres.coeff.name()},
           {"generators", std::move(gens)},
           {"relations", std::move(relations)},
           {"label", pres.label()}};
  if (pres.grassmannian_rank0) out["grassmannian_rank0"] = true;
  return out;
}

inline Json ring_map_to_json(const NamedRingMap& named) {
  Json images = Json::array();
  for (size_t i = 0; i < named.map.images().size(); ++i) {
    images.push_back(Json{{"variable", named.source.ctx->var(i).name},
                          {"image", poly_to_json(named.map.images()[i])}});
  }
  return Json{{"source", presentation_to_json(named.source)},
              {"target", presentation_to_json(named.target)},
              {"images", std::move(images)}};
}

}  // namespace mtcalc
