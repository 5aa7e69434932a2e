#include "mtcalc/loopspace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mtcalc {

int AdmissibleWord::degree() const {
  return std::accumulate(indices.begin(), indices.end(), generator_degree);
}

long long AdmissibleWord::excess() const {
  if (indices.empty()) throw validation_error("AdmissibleWord::excess: empty word");
  long long rest = generator_degree;
  for (size_t j = 1; j < indices.size(); ++j) rest += indices[j];
  return indices[0] - rest;
}

bool AdmissibleWord::retained() const { return excess_infinite() || excess() > 0; }

std::string AdmissibleWord::to_string() const {
  std::ostringstream os;
  for (int i : indices) os << "Q^" << i << " ";
  os << "y[" << generator_degree << "]";
  return os.str();
}

std::vector<AdmissibleWord> admissible_words(int generator_degree, int max_degree) {
  if (generator_degree < 0)
    throw validation_error("admissible_words: negative generator degree");
  if (max_degree < generator_degree)
    throw validation_error("admissible_words: max_degree below the generator degree");

  std::vector<AdmissibleWord> out;
  out.push_back({{}, generator_degree});

  // Grow words by prepending: (j, i_1, ..., i_s) stays admissible when
  // j <= 2 i_1 and has excess j - degree.  Every suffix of a positive-excess
  // admissible word has positive excess (i_1 <= 2 i_2 forces it), so the
  // retained set is exactly the closure of the retained words under the
  // prepends that keep the excess positive.
  std::vector<int> word;
  auto grow = [&](auto&& self, int degree_so_far) -> void {
    const int cap = word.empty() ? max_degree - degree_so_far
                                 : std::min(max_degree - degree_so_far, 2 * word.front());
    for (int j = degree_so_far + 1; j <= cap; ++j) {
      word.insert(word.begin(), j);
      out.push_back({word, generator_degree});
      self(self, degree_so_far + j);
      word.erase(word.begin());
    }
  };
  grow(grow, generator_degree);

  std::sort(out.begin(), out.end(), [](const AdmissibleWord& a, const AdmissibleWord& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.indices < b.indices;
  });
  return out;
}

namespace {

std::vector<GeneratorSpec> retained_word_generators(const HomologyInput& input,
                                                    int trunc_degree, bool allow_degree_zero) {
  std::vector<GeneratorSpec> gens;
  for (const GeneratorSpec& g : input.generators) {
    if (g.degree < 1 && !allow_degree_zero)
      throw validation_error("q_homology_series: generators must have degree >= 1");
    if (g.multiplicity < 1)
      throw validation_error("q_homology_series: multiplicity must be >= 1");
    for (const AdmissibleWord& w : admissible_words(g.degree, trunc_degree)) {
      if (!w.retained()) continue;
      if (w.degree() == 0) continue;  // the empty word on a degree-0 class is the unit
      gens.push_back({w.degree(), Parity::Even, g.multiplicity});
    }
  }
  return gens;
}

}  // namespace

PoincareSeries q_homology_series(const HomologyInput& input, int trunc_degree) {
  return free_commutative_series(retained_word_generators(input, trunc_degree, false), 2,
                                 trunc_degree);
}

PoincareSeries q0s0_series(int trunc_degree) {
  HomologyInput point;
  point.generators.push_back({0, Parity::Even, 1});
  return free_commutative_series(retained_word_generators(point, trunc_degree, true), 2,
                                 trunc_degree);
}

PoincareSeries q0_plus_series(const HomologyInput& input, int trunc_degree) {
  return ps_mul(q_homology_series(input, trunc_degree), q0s0_series(trunc_degree));
}

PoincareSeries rational_omega_series(const HomologyInput& input, int trunc_degree) {
  for (const GeneratorSpec& g : input.generators)
    if (g.degree < 1)
      throw validation_error("rational_omega_series: generators must have degree >= 1");
  return free_commutative_series(input.generators, 0, trunc_degree);
}

std::optional<AdmissibleWord> suspension_projection(const QMonomial& monomial) {
  long long total_exponent = 0;
  for (const QMonomial::Factor& f : monomial.factors) {
    if (f.exponent < 1)
      throw validation_error("suspension_projection: factor exponents must be >= 1");
    if (!f.word.retained())
      throw validation_error("suspension_projection: not a basis monomial (excess <= 0)");
    for (size_t j = 0; j + 1 < f.word.indices.size(); ++j)
      if (f.word.indices[j] > 2 * f.word.indices[j + 1])
        throw validation_error("suspension_projection: word is not admissible");
    total_exponent += f.exponent;
  }
  if (total_exponent != 1) return std::nullopt;  // decomposable: killed
  const AdmissibleWord& w = monomial.factors.front().word;
  if (!w.indices.empty()) return std::nullopt;  // operated class: killed
  return w;
}

}  // namespace mtcalc
