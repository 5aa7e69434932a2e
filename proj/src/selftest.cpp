#include "mtcalc/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "mtcalc/char_classes.hpp"
#include "mtcalc/classifying_spaces.hpp"
#include "mtcalc/loopspace.hpp"
#include "mtcalc/oracles.hpp"
#include "mtcalc/splitting.hpp"
#include "mtcalc/symmetric.hpp"
#include "mtcalc/thom_spectra.hpp"

namespace mtcalc {

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    if (ok) detail = message;
    ok = false;
  }
  void expect(bool condition, const std::string& message) {
    if (!condition) fail(message);
  }
};

// ---- criterion 1: universal-class table at m = 2 --------------------------

void check_table(Check& c) {
  const TableReport report = reproduce_table();
  const std::map<long long, std::vector<std::string>> expected = {
      {2, {"μ_{0,1}+μ_{1,0}^2"}},
      {3, {"μ_{1,1}"}},
      {4, {}},
      {5, {"μ_{1,2}+μ_{3,1}"}},
      {6, {"μ_{0,3}+μ_{1,1}^2+μ_{4,1}+μ_{3,0}^2"}},
      {7, {"μ_{1,3}+μ_{5,1}"}},
      {8, {"μ_{2,3}+μ_{2,1}^2"}},
      {9, {"μ_{1,4}+μ_{3,3}+μ_{5,2}+μ_{7,1}", "μ_{3,3}"}},
  };
  for (const TableRow& row : report.rows) {
    std::vector<std::string> derived;
    for (const NuTableEntry& entry : row.entries) derived.push_back(mu_sum_to_string(entry.mu));
    const auto it = expected.find(row.degree);
    if (it == expected.end()) {
      c.fail("unexpected table degree " + std::to_string(row.degree));
      continue;
    }
    if (derived != it->second)
      c.fail("degree " + std::to_string(row.degree) + " derived row mismatch");
    const bool should_warn = row.degree == 7 || row.degree == 8;
    c.expect(row.matches_recorded == !should_warn,
             "degree " + std::to_string(row.degree) + " recorded-comparison flag wrong");
    c.expect(should_warn == !row.warning.empty(),
             "degree " + std::to_string(row.degree) + " warning presence wrong");
  }
  c.expect(report.rows.size() == expected.size(), "table row count");
}

// ---- criterion 2: independence counts --------------------------------------

void check_counts(Check& c) {
  const std::vector<long long> expected = {1, 1, 0, 1, 1, 1, 1, 2};
  for (int d = 2; d <= 9; ++d) {
    const long long got = count_independent_nu(2, d);
    c.expect(got == expected[static_cast<size_t>(d - 2)],
             "count_independent_nu(2," + std::to_string(d) + ") = " + std::to_string(got));
  }
}

// ---- criterion 3: the w_2 pullback law -------------------------------------

void check_swpullback(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    const NamedRingMap jr = j_restriction(n);
    const Poly& image = jr.map.image_of("w_2");

    Poly expected = Poly::variable(jr.target.ctx, 1);  // w_2
    if (n % 2 == 1) {
      Exponents sq(jr.target.ctx->size(), 0);
      sq[0] = 2;
      expected += Poly::monomial(jr.target.ctx, std::move(sq), 1);  // + n w_1^2 mod 2
    }
    c.expect(image == expected, "Bj^*(w_2) at n = " + std::to_string(n));

    // independent route: brute-force expansion and re-substitution
    const oracle::PackedF2Poly direct = oracle::packed_sigma_shifted_with_extra(2 * n, 2);
    const oracle::PackedF2Poly resubstituted = oracle::packed_expand_in_sigma(image, 2 * n);
    c.expect(direct == resubstituted, "re-substitution oracle at n = " + std::to_string(n));
  }
}

// ---- criterion 4: SES and direct-sum identities -----------------------------

void check_ses_grid(Check& c) {
  const int N = 40;
  const std::vector<CoefficientField> fields = {CoefficientField::q(), CoefficientField::f2()};
  auto run = [&](Family family, int n, CoefficientField coeff) {
    const SesReport ses = verify_ses_dimensions(family, n, coeff, N);
    if (!ses.pass)
      c.fail("SES fails for " + family_name(family) + "(" + std::to_string(n) + "); " +
             coeff.name() + " at degree " + std::to_string(*ses.first_violation));
    const DirectSumReport sum = mt_direct_sum_check(family, n, coeff, N);
    if (!sum.pass)
      c.fail("direct sum fails for " + family_name(family) + "(" + std::to_string(n) + "); " +
             coeff.name());
  };
  for (const CoefficientField& coeff : fields) {
    for (int n = 1; n <= 5; ++n) run(Family::U, n, coeff);
    for (int n = 1; n <= 4; ++n) run(Family::Sp, n, coeff);
    for (int n = 1; n <= 5; ++n) run(Family::SU, n, coeff);
  }
  for (int n = 1; n <= 6; ++n) run(Family::O, n, CoefficientField::f2());
}

// ---- criterion 5: Dyer-Lashof series vs enumeration -------------------------

std::vector<Int> oracle_word_algebra_counts(const HomologyInput& input, int N) {
  std::vector<GeneratorSpec> items;
  for (const GeneratorSpec& g : input.generators) {
    if (g.degree >= 1) items.push_back({g.degree, Parity::Even, g.multiplicity});  // empty word
    for (int d : oracle::admissible_word_degrees(g.degree, N))
      items.push_back({d, Parity::Even, g.multiplicity});
  }
  return oracle::count_graded_multisets(items, 2, N);
}

void check_dyer_lashof(Check& c) {
  const int N = 30;

  HomologyInput circle;
  circle.generators.push_back({1, Parity::Even, 1});
  const PoincareSeries s1 = q_homology_series(circle, N);
  const std::vector<Int> s1_expected = {1, 1, 1, 2, 3, 4};
  for (int d = 0; d <= 5; ++d)
    c.expect(s1.coeff(d) == s1_expected[static_cast<size_t>(d)],
             "q_homology_series(S^1) at degree " + std::to_string(d));

  const PoincareSeries s0 = q0s0_series(N);
  const std::vector<Int> s0_expected = {1, 1, 2, 4};
  for (int d = 0; d <= 3; ++d)
    c.expect(s0.coeff(d) == s0_expected[static_cast<size_t>(d)],
             "q0s0_series at degree " + std::to_string(d));

  // enumeration oracle up to degree 30
  const std::vector<Int> s1_oracle = oracle_word_algebra_counts(circle, N);
  for (int d = 0; d <= N; ++d)
    c.expect(s1.coeff(d) == s1_oracle[static_cast<size_t>(d)],
             "S^1 oracle mismatch at degree " + std::to_string(d));
  std::vector<GeneratorSpec> s0_items;
  for (int d : oracle::admissible_word_degrees(0, N)) s0_items.push_back({d, Parity::Even, 1});
  const std::vector<Int> s0_oracle = oracle::count_graded_multisets(s0_items, 2, N);
  for (int d = 0; d <= N; ++d)
    c.expect(s0.coeff(d) == s0_oracle[static_cast<size_t>(d)],
             "QS^0 oracle mismatch at degree " + std::to_string(d));

  // 50 random generator sets; the enumeration degree is capped so that the
  // brute-force walk stays within a fixed node budget per trial
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> count_dist(1, 4);
  std::uniform_int_distribution<int> degree_dist(1, 5);
  const Int node_budget = 2000000;
  for (int trial = 0; trial < 50; ++trial) {
    HomologyInput input;
    const int k = count_dist(rng);
    for (int i = 0; i < k; ++i) input.generators.push_back({degree_dist(rng), Parity::Even, 1});
    const PoincareSeries series = q_homology_series(input, N);
    int bound = 0;
    Int nodes = 0;
    while (bound < N && nodes + series.coeff(bound + 1) <= node_budget) {
      ++bound;
      nodes += series.coeff(bound);
    }
    const std::vector<Int> counted = oracle_word_algebra_counts(input, bound);
    c.expect(bound >= 10, "oracle bound collapsed at trial " + std::to_string(trial));
    for (int d = 0; d <= bound; ++d) {
      if (series.coeff(d) != counted[static_cast<size_t>(d)]) {
        c.fail("random set trial " + std::to_string(trial) + " disagrees at degree " +
               std::to_string(d));
        break;
      }
    }
  }
}

// ---- criterion 6: splitting fixtures ----------------------------------------

void check_splitting_fixtures(Check& c) {
  for (int n = 1; n <= 10; ++n) {
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
      const bool odd = p != 2;
      const bool coprime = (n + 1) % p != 0;

      c.expect(splitting_verdict(SplitPair::O2n_in_SO2n1, n, p).splits,
               "O(2n) < SO(2n+1) must always split");
      c.expect(splitting_verdict(SplitPair::PinPlus4n_in_Spin4n1, n, p).splits,
               "Pin^+(4n) < Spin(4n+1) must always split");
      c.expect(splitting_verdict(SplitPair::PinMinus4n2_in_Spin4n3, n, p).splits,
               "Pin^-(4n+2) < Spin(4n+3) must always split");
      c.expect(splitting_verdict(SplitPair::SO2n_in_SO2n1, n, p).splits == odd,
               "SO(2n) < SO(2n+1) splits exactly at odd primes");
      c.expect(splitting_verdict(SplitPair::O2n_in_O2n1, n, p).splits == odd,
               "O(2n) < O(2n+1) splits exactly at odd primes");
      c.expect(splitting_verdict(SplitPair::Un_in_SUn1, n, p).splits == coprime,
               "U(n) < SU(n+1) splits exactly when p does not divide n+1");

      c.expect(s0_split_verdict(S0Family::O2n, n, p).splits, "S^0 off MTO(2n): always");
      c.expect(s0_split_verdict(S0Family::PinPlus4n, n, p).splits, "S^0 off MTPin^+: always");
      c.expect(s0_split_verdict(S0Family::PinMinus4n2, n, p).splits, "S^0 off MTPin^-: always");
      c.expect(s0_split_verdict(S0Family::SO2n, n, p).splits == odd, "S^0 off MTSO(2n): odd p");
      c.expect(s0_split_verdict(S0Family::Un, n, p).splits == coprime,
               "S^0 off MTU(n): p coprime to n+1");
      c.expect(s0_split_verdict(S0Family::Spn, n, p).splits == coprime,
               "S^0 off MTSp(n): p coprime to n+1");
    }
  }
}

// ---- criterion 7: Pin structures of projective spaces -----------------------

void check_pin(Check& c) {
  for (int n = 2; n <= 200; n += 2) {
    const PinVerdict v = pin_structures(n);
    c.expect(v.pin_plus == (n % 4 == 0),
             "Pin^+ for RP^" + std::to_string(n));
    c.expect(v.pin_minus == (n % 4 == 2),
             "Pin^- for RP^" + std::to_string(n));
  }
}

// ---- criterion 8: the BU(n) self-map ----------------------------------------

void check_u_selfmap(Check& c) {
  for (int n = 1; n <= 10; ++n) {
    for (long long p : {3LL, 5LL, 7LL}) {
      const USelfMapResult r = u_selfmap(n, p);
      c.expect(r.invertible == ((n + 1) % p != 0),
               "invertibility at n = " + std::to_string(n) + ", p = " + std::to_string(p));
      c.expect(r.c1_coefficient == (1 + n) % p,
               "c_1 coefficient at n = " + std::to_string(n) + ", p = " + std::to_string(p));
    }
  }
}

// ---- criterion 9: odd-prime series consistency -------------------------------

void check_odd_p(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for (long long p : {3LL, 5LL})
      c.expect(odd_p_consistency(n, p, 40).pass,
               "odd-prime consistency at n = " + std::to_string(n) + ", p = " + std::to_string(p));
}

// ---- criterion 10: property suites -------------------------------------------

Poly random_symmetric_poly(std::mt19937& rng, const ContextPtr& tctx, int max_terms) {
  // random polynomial in the sigma basis, then expanded
  const size_t n = tctx->size();
  std::uniform_int_distribution<int> exp_dist(0, 2);
  std::uniform_int_distribution<int> coeff_dist(1, 4);
  std::uniform_int_distribution<int> term_dist(1, max_terms);
  Poly p(tctx);
  const int terms = term_dist(rng);
  for (int t = 0; t < terms; ++t) {
    Poly factor = Poly::constant(tctx, coeff_dist(rng));
    for (size_t i = 1; i <= n; ++i) {
      const int e = exp_dist(rng);
      if (e > 0) factor = factor * elementary_symmetric(tctx, i).pow(static_cast<unsigned>(e));
    }
    p += factor;
  }
  return p;
}

void check_properties(Check& c) {
  std::mt19937 rng(987654321);

  // symmetric-reduction round trip
  std::uniform_int_distribution<int> nvars_dist(2, 4);
  const std::vector<long long> moduli = {2, 3, 5, 0};
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = static_cast<size_t>(nvars_dist(rng));
    const long long mod = moduli[static_cast<size_t>(trial) % moduli.size()];
    const ContextPtr tctx = make_uniform_context("t", n, 1, mod);
    const Poly p = random_symmetric_poly(rng, tctx, 3);
    const Poly q = symmetrize_reduce(p);
    if (!(substitute_elementary(q, tctx) == p)) {
      c.fail("round trip failed at trial " + std::to_string(trial));
      break;
    }
  }

  // ring-map multiplicativity
  const NamedRingMap jr = j_restriction(2);
  std::uniform_int_distribution<int> pick(0, 3);
  auto random_source_poly = [&](const ContextPtr& ctx) {
    Poly p(ctx);
    for (int t = 0, terms = 1 + pick(rng); t < terms; ++t) {
      Exponents e(ctx->size(), 0);
      for (size_t i = 0; i < ctx->size(); ++i) e[i] = static_cast<std::uint16_t>(pick(rng) % 3);
      p += Poly::monomial(ctx, std::move(e), 1);
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_source_poly(jr.source.ctx);
    const Poly b = random_source_poly(jr.source.ctx);
    if (!(jr.map(a * b) == jr.map(a) * jr.map(b))) {
      c.fail("ring-map multiplicativity failed at trial " + std::to_string(trial));
      break;
    }
  }

  // nu squaring law
  std::uniform_int_distribution<int> nu_exp(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = trial % 2 == 0 ? 2 : 4;
    std::vector<int> exps(static_cast<size_t>(m), 0);
    bool nonzero = false;
    for (int& e : exps) {
      e = nu_exp(rng);
      if (e > 0) nonzero = true;
    }
    if (!nonzero) exps[0] = 1;
    if (!nu_square_check(m, exps)) {
      c.fail("nu squaring failed at trial " + std::to_string(trial));
      break;
    }
  }

  // linear independence of the degree <= 12 rewritings at m = 2
  for (long long d = 1; d <= 12; ++d) {
    const std::vector<NuTableEntry> entries = nu_classes_of_degree(2, d);
    std::map<std::pair<std::vector<int>, int>, size_t> columns;
    for (const NuTableEntry& entry : entries)
      for (const MuMonomial& mu : entry.mu)
        columns.try_emplace({mu.base, mu.power_log2}, columns.size());
    if (columns.size() > 64) {
      c.fail("independence check: more than 64 distinct mu-monomials");
      break;
    }
    std::vector<std::uint64_t> rows;
    for (const NuTableEntry& entry : entries) {
      std::uint64_t row = 0;
      for (const MuMonomial& mu : entry.mu)
        row |= std::uint64_t(1) << columns.at({mu.base, mu.power_log2});
      rows.push_back(row);
    }
    // F2 Gaussian elimination
    size_t rank = 0;
    for (int bit = 0; bit < 64 && rank < rows.size(); ++bit) {
      size_t pivot = rank;
      while (pivot < rows.size() && !(rows[pivot] >> bit & 1)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (size_t r = 0; r < rows.size(); ++r)
        if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
      ++rank;
    }
    c.expect(rank == entries.size(),
             "rewritings of degree " + std::to_string(d) + " are linearly dependent");
    c.expect(static_cast<long long>(entries.size()) == count_independent_nu(2, d),
             "degree " + std::to_string(d) + " class count mismatch");
  }
}

CriterionResult run_one(int number, const std::string& name, double budget_seconds,
                        const std::function<void(Check&)>& body) {
  CriterionResult result;
  result.number = number;
  result.name = name;
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.fail(std::string("exception: ") + e.what());
  }
  const auto end = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(end - start).count();
  result.pass = check.ok;
  result.detail = check.detail;
  if (result.pass && budget_seconds > 0 && result.seconds > budget_seconds) {
    result.pass = false;
    result.detail = "runtime budget exceeded (" + std::to_string(result.seconds) + "s > " +
                    std::to_string(budget_seconds) + "s)";
  }
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "universal-class table reproduction (m=2, degrees 2..9)", 1.0,
                            check_table));
  results.push_back(run_one(2, "independent nu-class counts (m=2, degrees 2..9)", 1.0,
                            check_counts));
  results.push_back(run_one(3, "w_2 pullback law under j (n=1..6, oracle-checked)", 10.0,
                            check_swpullback));
  results.push_back(run_one(4, "Thom-module SES and direct-sum identities (degree <= 40)", 10.0,
                            check_ses_grid));
  results.push_back(run_one(5, "free Dyer-Lashof algebra series vs enumeration (degree <= 30)",
                            30.0, check_dyer_lashof));
  results.push_back(run_one(6, "transfer splitting fixtures (n <= 10, p in {2,3,5,7})", 0,
                            check_splitting_fixtures));
  results.push_back(run_one(7, "Pin structures of even projective spaces (n <= 200)", 1.0,
                            check_pin));
  results.push_back(run_one(8, "BU(n) self-map invertibility (n <= 10, p in {3,5,7})", 0,
                            check_u_selfmap));
  results.push_back(run_one(9, "odd-prime series consistency (n <= 5, p in {3,5})", 0,
                            check_odd_p));
  results.push_back(run_one(10, "property suites (round trip, homomorphism, squaring, rank)", 0,
                            check_properties));
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace mtcalc
