#include "mtcalc/char_classes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mtcalc {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

void validate_nu_args(int m, const std::vector<int>& exponents) {
  if (m < 2 || m % 2 != 0) throw validation_error("nu classes: m must be even and >= 2");
  if (exponents.size() != static_cast<size_t>(m))
    throw validation_error("nu classes: expected exponents on w_2..w_{m+1}");
  for (int e : exponents)
    if (e < 0) throw validation_error("nu classes: negative exponent");
  if (std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; }))
    throw validation_error("nu classes: the unit (degree 0) is excluded");
}

}  // namespace

long long MuMonomial::degree() const {
  long long d = 0;
  for (size_t i = 0; i < base.size(); ++i) d += static_cast<long long>(i + 1) * base[i];
  return d << power_log2;
}

std::vector<int> MuMonomial::underlying_exponents() const {
  std::vector<int> e = base;
  for (int& x : e) x <<= power_log2;
  return e;
}

std::string MuMonomial::to_string() const {
  std::string s = "μ_{" + join_ints(base) + "}";
  if (power_log2 > 0) s += "^" + std::to_string(1 << power_log2);
  return s;
}

std::string mu_sum_to_string(const MuSum& sum) {
  if (sum.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < sum.size(); ++i) {
    if (i) s += "+";
    s += sum[i].to_string();
  }
  return s;
}

long long NuClass::degree() const {
  long long d = 0;
  for (size_t i = 0; i < exponents.size(); ++i)
    d += static_cast<long long>(i + 2) * exponents[i];
  return d;
}

std::string NuClass::to_string() const { return "ν_{" + join_ints(exponents) + "}"; }

MuSum nu_to_mu(int m, const std::vector<int>& exponents) {
  validate_nu_args(m, exponents);
  const NamedRingMap jr = j_restriction(m / 2);

  Exponents source_exponents(exponents.begin(), exponents.end());
  const Poly image = jr.map(
      Poly::monomial(jr.source.ctx, std::move(source_exponents), 1));

  MuSum sum;
  for (const auto& [e, c] : image.terms()) {
    int val = 0;
    bool all_even = true;
    while (all_even) {
      if (val > 16) throw internal_error("nu_to_mu: zero exponent vector in the expansion");
      for (std::uint16_t x : e)
        if ((x >> val) & 1) {
          all_even = false;
          break;
        }
      if (all_even) ++val;
    }
    MuMonomial mu;
    mu.power_log2 = val;
    mu.base.reserve(e.size());
    for (std::uint16_t x : e) mu.base.push_back(static_cast<int>(x) >> val);
    sum.push_back(std::move(mu));
  }
  std::sort(sum.begin(), sum.end(), [](const MuMonomial& a, const MuMonomial& b) {
    return a.underlying_exponents() < b.underlying_exponents();
  });
  return sum;
}

bool nu_square_check(int m, const std::vector<int>& exponents) {
  MuSum squared = nu_to_mu(m, exponents);
  for (MuMonomial& mu : squared) ++mu.power_log2;
  std::vector<int> doubled = exponents;
  for (int& e : doubled) e *= 2;
  return squared == nu_to_mu(m, doubled);
}

namespace {

void enumerate_exponents(int m, long long degree, int k, std::vector<int>& current,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (k > m + 1) {
    if (degree == 0) emit(current);
    return;
  }
  // descending lex: the largest exponent on the earliest generator first
  for (int i = static_cast<int>(degree / k); i >= 0; --i) {
    current.push_back(i);
    enumerate_exponents(m, degree - static_cast<long long>(i) * k, k + 1, current, emit);
    current.pop_back();
  }
}

}  // namespace

long long count_independent_nu(int m, long long degree) {
  if (m < 2 || m % 2 != 0) throw validation_error("count_independent_nu: m must be even and >= 2");
  if (degree < 1) throw validation_error("count_independent_nu: degree must be >= 1");
  long long count = 0;
  std::vector<int> current;
  enumerate_exponents(m, degree, 2, current, [&](const std::vector<int>& e) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x % 2 == 1; })) ++count;
  });
  return count;
}

std::vector<NuTableEntry> nu_classes_of_degree(int m, long long degree) {
  if (m < 2 || m % 2 != 0)
    throw validation_error("nu_classes_of_degree: m must be even and >= 2");
  if (degree < 1) throw validation_error("nu_classes_of_degree: degree must be >= 1");
  std::vector<NuTableEntry> out;
  std::vector<int> current;
  enumerate_exponents(m, degree, 2, current, [&](const std::vector<int>& e) {
    if (!std::any_of(e.begin(), e.end(), [](int x) { return x % 2 == 1; })) return;
    NuTableEntry entry;
    entry.nu = NuClass{m, e};
    entry.mu = nu_to_mu(m, e);
    out.push_back(std::move(entry));
  });
  return out;
}

PoincareSeries xi_subalgebra_series(long long p, int trunc_degree) {
  if (!is_prime(p)) throw validation_error("xi_subalgebra_series: p must be prime");
  std::vector<GeneratorSpec> gens;
  if (p == 2) {
    for (int d = 1; d <= trunc_degree; ++d) gens.push_back({d, Parity::Even, 1});
    return free_commutative_series(gens, 2, trunc_degree);
  }
  for (long long d = 2 * (p - 1); d <= trunc_degree; d += 2 * (p - 1))
    gens.push_back({static_cast<int>(d), Parity::Even, 1});
  return free_commutative_series(gens, 0, trunc_degree);
}

TableReport reproduce_table() {
  struct RecordedRow {
    long long degree;
    std::vector<std::pair<std::string, std::string>> entries;  // (nu label, mu expression)
  };
  // Recorded catalog values for m = 2, degrees 2..9 (anchor
  // universal-class-example-table).
  static const std::vector<RecordedRow> recorded = {
      {2, {{"ν_{1,0}", "μ_{0,1}+μ_{1,0}^2"}}},
      {3, {{"ν_{0,1}", "μ_{1,1}"}}},
      {4, {}},
      {5, {{"ν_{1,1}", "μ_{1,2}+μ_{3,1}"}}},
      {6, {{"ν_{3,0}", "μ_{0,3}+μ_{1,1}^2+μ_{4,1}+μ_{3,0}^2"}}},
      {7, {{"ν_{1,2}", "μ_{2,3}+μ_{2,1}^2"}}},
      {8, {{"ν_{2,1}", "μ_{2,3}+μ_{2,1}^2"}}},
      {9, {{"ν_{3,1}", "μ_{1,4}+μ_{3,3}+μ_{5,2}+μ_{7,1}"}, {"ν_{0,3}", "μ_{3,3}"}}},
  };

  TableReport report;
  report.m = 2;
  for (const RecordedRow& rec : recorded) {
    TableRow row;
    row.degree = rec.degree;
    row.entries = nu_classes_of_degree(2, rec.degree);
    for (const auto& [label, expr] : rec.entries) row.recorded.push_back(label + " = " + expr);

    std::vector<std::pair<std::string, std::string>> derived;
    for (const NuTableEntry& entry : row.entries)
      derived.emplace_back(entry.nu.to_string(), mu_sum_to_string(entry.mu));
    row.matches_recorded = derived == rec.entries;
    if (!row.matches_recorded) {
      std::string warn = "degree " + std::to_string(rec.degree) +
                         ": derived value disagrees with the recorded table entry "
                         "(anchor universal-class-example-table); emitting the derived value";
      row.warning = std::move(warn);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace mtcalc
