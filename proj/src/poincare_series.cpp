#include "mtcalc/poincare_series.hpp"

#include <algorithm>
#include <sstream>

namespace mtcalc {

PoincareSeries::PoincareSeries(int min_degree, int trunc_degree, std::vector<Int> coefficients)
    : min_degree_(min_degree), trunc_degree_(trunc_degree), coefficients_(std::move(coefficients)) {
  if (trunc_degree_ < min_degree_)
    throw validation_error("PoincareSeries: trunc_degree < min_degree");
  if (coefficients_.size() != static_cast<size_t>(trunc_degree_ - min_degree_ + 1))
    throw validation_error("PoincareSeries: coefficient count does not match degree range");
  normalize();
}

void PoincareSeries::normalize() {
  // Drop leading zeros so min_degree points at the first (possibly) nonzero
  // coefficient; a zero series keeps a single zero entry at trunc_degree.
  size_t lead = 0;
  while (lead + 1 < coefficients_.size() && coefficients_[lead] == 0) ++lead;
  if (lead > 0) {
    coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<long>(lead));
    min_degree_ += static_cast<int>(lead);
  }
}

PoincareSeries PoincareSeries::zero(int trunc_degree) {
  return PoincareSeries(trunc_degree, trunc_degree, {Int(0)});
}

PoincareSeries PoincareSeries::one(int trunc_degree) { return monomial(0, trunc_degree); }

PoincareSeries PoincareSeries::monomial(int degree, int trunc_degree) {
  if (degree > trunc_degree)
    throw validation_error("PoincareSeries::monomial: degree above truncation");
  std::vector<Int> c(static_cast<size_t>(trunc_degree - degree + 1), Int(0));
  c[0] = 1;
  return PoincareSeries(degree, trunc_degree, std::move(c));
}

PoincareSeries PoincareSeries::geometric(int step, int trunc_degree) {
  if (step <= 0) throw validation_error("PoincareSeries::geometric: step must be positive");
  if (trunc_degree < 0) throw validation_error("PoincareSeries::geometric: negative truncation");
  std::vector<Int> c(static_cast<size_t>(trunc_degree + 1), Int(0));
  for (int d = 0; d <= trunc_degree; d += step) c[static_cast<size_t>(d)] = 1;
  return PoincareSeries(0, trunc_degree, std::move(c));
}

const Int& PoincareSeries::coeff(int d) const {
  static const Int kZero(0);
  if (d > trunc_degree_)
    throw validation_error("PoincareSeries::coeff: degree above truncation bound");
  if (d < min_degree_) return kZero;
  return coefficients_[static_cast<size_t>(d - min_degree_)];
}

std::vector<Int> PoincareSeries::coeffs(int from, int to) const {
  if (from > to) return {};
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(to - from + 1));
  for (int d = from; d <= to; ++d) out.push_back(coeff(d));
  return out;
}

bool PoincareSeries::nonnegative() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Int& c) { return c >= 0; });
}

std::string PoincareSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = min_degree_; d <= trunc_degree_; ++d) {
    const Int& c = coeff(d);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0 || c != 1) os << c;
    if (d != 0) {
      if (c != 1) os << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << (trunc_degree_ + 1) << ")";
  return os.str();
}

PoincareSeries ps_add(const PoincareSeries& a, const PoincareSeries& b) {
  const int min_deg = std::min(a.min_degree(), b.min_degree());
  const int trunc = std::min(a.trunc_degree(), b.trunc_degree());
  if (trunc < min_deg) throw validation_error("ps_add: empty overlap of degree ranges");
  std::vector<Int> c;
  c.reserve(static_cast<size_t>(trunc - min_deg + 1));
  for (int d = min_deg; d <= trunc; ++d) c.push_back(a.coeff(d) + b.coeff(d));
  return PoincareSeries(min_deg, trunc, std::move(c));
}

PoincareSeries ps_mul(const PoincareSeries& a, const PoincareSeries& b) {
  const int min_deg = a.min_degree() + b.min_degree();
  // The convolution at degree d is complete only if every contributing pair
  // of degrees is within both truncation bounds.
  const int trunc =
      std::min(a.trunc_degree() + b.min_degree(), b.trunc_degree() + a.min_degree());
  std::vector<Int> c(static_cast<size_t>(trunc - min_deg + 1), Int(0));
  for (int i = a.min_degree(); i <= a.trunc_degree(); ++i) {
    const Int& ai = a.coeff(i);
    if (ai == 0) continue;
    const int jmax = std::min(b.trunc_degree(), trunc - i);
    for (int j = b.min_degree(); j <= jmax; ++j) {
      c[static_cast<size_t>(i + j - min_deg)] += ai * b.coeff(j);
    }
  }
  return PoincareSeries(min_deg, trunc, std::move(c));
}

PoincareSeries ps_shift(const PoincareSeries& a, int k) {
  std::vector<Int> c = a.coeffs(a.min_degree(), a.trunc_degree());
  return PoincareSeries(a.min_degree() + k, a.trunc_degree() + k, std::move(c));
}

bool operator==(const PoincareSeries& a, const PoincareSeries& b) {
  const int trunc = std::min(a.trunc_degree(), b.trunc_degree());
  const int lo = std::min(a.min_degree(), b.min_degree());
  if (trunc < lo) return true;
  for (int d = lo; d <= trunc; ++d)
    if (a.coeff(d) != b.coeff(d)) return false;
  return true;
}

PoincareSeries free_commutative_series(const std::vector<GeneratorSpec>& gens,
                                       int characteristic, int trunc_degree) {
  if (characteristic != 0 && characteristic != 2)
    throw validation_error("free_commutative_series: characteristic must be 0 or 2");
  if (trunc_degree < 0)
    throw validation_error("free_commutative_series: negative truncation");
  std::vector<Int> c(static_cast<size_t>(trunc_degree + 1), Int(0));
  c[0] = 1;
  for (const GeneratorSpec& g : gens) {
    if (g.degree <= 0)
      throw validation_error("free_commutative_series: generator degree must be positive");
    if (g.multiplicity < 1)
      throw validation_error("free_commutative_series: generator multiplicity must be >= 1");
    const bool exterior = characteristic == 0 && g.parity == Parity::Odd;
    for (int rep = 0; rep < g.multiplicity; ++rep) {
      if (exterior) {
        // multiply by (1 + t^d), highest degree first so each term is used once
        for (int d = trunc_degree; d >= g.degree; --d)
          c[static_cast<size_t>(d)] += c[static_cast<size_t>(d - g.degree)];
      } else {
        // multiply by 1/(1 - t^d)
        for (int d = g.degree; d <= trunc_degree; ++d)
          c[static_cast<size_t>(d)] += c[static_cast<size_t>(d - g.degree)];
      }
    }
  }
  return PoincareSeries(0, trunc_degree, std::move(c));
}

}  // namespace mtcalc
