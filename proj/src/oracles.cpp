#include "mtcalc/oracles.hpp"

#include <algorithm>

namespace mtcalc::oracle {

std::vector<Int> count_graded_multisets(const std::vector<GeneratorSpec>& gens,
                                        int characteristic, int max_degree) {
  if (max_degree < 0) throw validation_error("count_graded_multisets: negative bound");
  std::vector<GeneratorSpec> items;
  for (const GeneratorSpec& g : gens) {
    if (g.degree <= 0) throw validation_error("count_graded_multisets: nonpositive degree");
    for (int i = 0; i < g.multiplicity; ++i) items.push_back({g.degree, g.parity, 1});
  }
  std::sort(items.begin(), items.end(),
            [](const GeneratorSpec& a, const GeneratorSpec& b) { return a.degree < b.degree; });
  std::vector<Int> counts(static_cast<size_t>(max_degree) + 1, Int(0));
  struct Rec {
    const std::vector<GeneratorSpec>& items;
    int characteristic;
    std::vector<Int>& counts;
    int max_degree;
    void operator()(size_t from, int used) const {
      counts[static_cast<size_t>(used)] += 1;
      for (size_t i = from; i < items.size(); ++i) {
        const GeneratorSpec& g = items[i];
        if (used + g.degree > max_degree) break;  // items are degree-sorted
        const bool exterior = characteristic == 0 && g.parity == Parity::Odd;
        (*this)(exterior ? i + 1 : i, used + g.degree);
      }
    }
  };
  Rec{items, characteristic, counts, max_degree}(0, 0);
  return counts;
}

std::vector<int> admissible_word_degrees(int generator_degree, int max_degree) {
  std::vector<int> degrees;
  // choose i_1 first, then each i_{j+1} >= ceil(i_j / 2); the excess
  // first - (sum_rest + |y|) only drops as letters are appended, so branches
  // with exhausted excess are dead
  struct Rec {
    int generator_degree;
    int max_degree;
    std::vector<int>& degrees;
    void operator()(int first, int prev, int sum_rest, int total) const {
      if (first - (sum_rest + generator_degree) <= 0) return;
      degrees.push_back(total);
      for (int next = (prev + 1) / 2; total + next <= max_degree; ++next)
        (*this)(first, next, sum_rest + next, total + next);
    }
  };
  Rec rec{generator_degree, max_degree, degrees};
  for (int first = 1; generator_degree + first <= max_degree; ++first)
    rec(first, first, 0, generator_degree + first);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

PackedF2Poly::PackedF2Poly(std::vector<std::uint64_t> monomials)
    : monomials_(std::move(monomials)) {
  normalize();
}

void PackedF2Poly::normalize() {
  std::sort(monomials_.begin(), monomials_.end());
  std::vector<std::uint64_t> out;
  out.reserve(monomials_.size());
  for (size_t i = 0; i < monomials_.size();) {
    size_t j = i;
    while (j < monomials_.size() && monomials_[j] == monomials_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(monomials_[i]);
    i = j;
  }
  monomials_ = std::move(out);
}

PackedF2Poly PackedF2Poly::one() { return PackedF2Poly({0}); }

PackedF2Poly PackedF2Poly::operator+(const PackedF2Poly& o) const {
  std::vector<std::uint64_t> merged;
  merged.reserve(monomials_.size() + o.monomials_.size());
  merged.insert(merged.end(), monomials_.begin(), monomials_.end());
  merged.insert(merged.end(), o.monomials_.begin(), o.monomials_.end());
  return PackedF2Poly(std::move(merged));
}

PackedF2Poly PackedF2Poly::operator*(const PackedF2Poly& o) const {
  std::vector<std::uint64_t> prod;
  prod.reserve(monomials_.size() * o.monomials_.size());
  for (std::uint64_t a : monomials_)
    for (std::uint64_t b : o.monomials_) prod.push_back(a + b);
  return PackedF2Poly(std::move(prod));
}

PackedF2Poly packed_sigma(int m, int k) {
  if (m < 0 || m > 12) throw validation_error("packed_sigma: need 0 <= m <= 12");
  if (k < 0 || k > m) return PackedF2Poly();
  if (k == 0) return PackedF2Poly::one();
  std::vector<std::uint64_t> monos;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::uint64_t mono = 0;
    for (int i : idx) mono += PackedF2Poly::pack_var(static_cast<size_t>(i));
    monos.push_back(mono);
    int j = k;
    while (j > 0 && idx[static_cast<size_t>(j - 1)] == m - k + j - 1) --j;
    if (j == 0) break;
    ++idx[static_cast<size_t>(j - 1)];
    for (int l = j; l < k; ++l) idx[static_cast<size_t>(l)] = idx[static_cast<size_t>(l - 1)] + 1;
  }
  return PackedF2Poly(std::move(monos));
}

std::vector<PackedF2Poly> packed_sigma_shifted_with_extra_all(int m) {
  if (m < 1 || m > 12)
    throw validation_error("packed_sigma_shifted_with_extra: need 1 <= m <= 12");
  const int args = m + 1;

  // t = t_1 + ... + t_m as a packed linear polynomial
  std::vector<std::uint64_t> sum_monos;
  for (int i = 0; i < m; ++i) sum_monos.push_back(PackedF2Poly::pack_var(static_cast<size_t>(i)));
  const PackedF2Poly t(std::move(sum_monos));

  std::vector<PackedF2Poly> arg_polys;
  for (int i = 0; i < m; ++i) {
    PackedF2Poly ti(std::vector<std::uint64_t>{PackedF2Poly::pack_var(static_cast<size_t>(i))});
    arg_polys.push_back(t + ti);
  }
  arg_polys.push_back(t);

  // E_k after each argument: E_k^{(i)} = E_k^{(i-1)} + arg_i * E_{k-1}^{(i-1)}
  std::vector<PackedF2Poly> e(static_cast<size_t>(args) + 1);
  e[0] = PackedF2Poly::one();
  for (int i = 0; i < args; ++i) {
    for (int kk = std::min(args, i + 1); kk >= 1; --kk) {
      PackedF2Poly shifted = arg_polys[static_cast<size_t>(i)] * e[static_cast<size_t>(kk - 1)];
      e[static_cast<size_t>(kk)] = e[static_cast<size_t>(kk)] + shifted;
    }
  }
  return e;
}

PackedF2Poly packed_sigma_shifted_with_extra(int m, int k) {
  if (k < 0 || k > m + 1) return PackedF2Poly();
  return packed_sigma_shifted_with_extra_all(m)[static_cast<size_t>(k)];
}

PackedF2Poly pack_f2_poly(const Poly& p) {
  if (p.modulus() != 2) throw validation_error("pack_f2_poly: polynomial must be mod 2");
  if (p.context()->size() > 12) throw validation_error("pack_f2_poly: too many variables");
  std::vector<std::uint64_t> monos;
  monos.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t mono = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= 32) throw validation_error("pack_f2_poly: exponent too large");
      mono += static_cast<std::uint64_t>(e[i]) << (5 * i);
    }
    monos.push_back(mono);
  }
  return PackedF2Poly(std::move(monos));
}

PackedF2Poly packed_expand_in_sigma(const Poly& q, int m) {
  if (q.modulus() != 2) throw validation_error("packed_expand_in_sigma: polynomial must be mod 2");
  PackedF2Poly result;
  for (const auto& [e, c] : q.terms()) {
    PackedF2Poly term = PackedF2Poly::one();
    for (size_t i = 0; i < e.size(); ++i) {
      const PackedF2Poly s = packed_sigma(m, static_cast<int>(i) + 1);
      for (std::uint16_t rep = 0; rep < e[i]; ++rep) term = term * s;
    }
    result = result + term;
  }
  return result;
}

}  // namespace mtcalc::oracle
