#include "mtcalc/cli_commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mtcalc/char_classes.hpp"
#include "mtcalc/selftest.hpp"
#include "mtcalc/thom_spectra.hpp"

namespace mtcalc::cli {

namespace {

std::string series_line(const PoincareSeries& s) {
  std::ostringstream os;
  os << "dims[" << s.min_degree() << ".." << s.trunc_degree() << "] =";
  for (int d = s.min_degree(); d <= s.trunc_degree(); ++d) os << " " << s.coeff(d);
  return os.str();
}

Json warnings_json(const std::vector<std::string>& warnings) {
  Json out = Json::array();
  for (const std::string& w : warnings) out.push_back(w);
  return out;
}

// Warning attached to every RP^n tangent computation: the recorded case split
// is swapped relative to the binomial value the computation uses.
const char* kRpCaseSplitWarning =
    "w_2(T(RP^n)) is computed as binom(n+1,2) x^2 mod 2; the recorded case split (anchor "
    "rp-tangent-case-split) states x^2 at n = 4k and 0 at n = 4k+2, which is swapped relative "
    "to the binomial value and to the Pin verdicts it feeds";

// Warning attached to the self-map of BU(n): the recorded formula reads
// det(A)^{-1} A while the recorded torus computation uses x_i + c_1.
const char* kSelfMapSignWarning =
    "the self-map is applied with the convention x_i -> x_i + c_1 (anchor "
    "u-determinant-selfmap); the determinant-inverse formula would suggest x_i -> x_i - c_1, "
    "use --minus to switch";

}  // namespace

int default_truncation() {
  if (const char* env = std::getenv("MTCALC_MAX_DEGREE")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (...) {
      throw validation_error("MTCALC_MAX_DEGREE must be a nonnegative integer");
    }
    throw validation_error("MTCALC_MAX_DEGREE must be a nonnegative integer");
  }
  return kDefaultTruncation;
}

CommandOutput make_output(const std::string& command, Json parameters, Json result,
                          std::vector<std::string> citations,
                          std::vector<std::string> warnings, std::string human) {
  std::sort(citations.begin(), citations.end());
  citations.erase(std::unique(citations.begin(), citations.end()), citations.end());
  CommandOutput out;
  out.envelope = Json{{"command", command},
                      {"parameters", std::move(parameters)},
                      {"result", std::move(result)},
                      {"citations", citations},
                      {"warnings", warnings_json(warnings)}};
  if (!warnings.empty()) {
    human += "\nwarnings:";
    for (const std::string& w : warnings) human += "\n  ! " + w;
  }
  out.human = std::move(human);
  return out;
}

CommandOutput cmd_ring(Family family, int n, CoefficientField coeff,
                       std::optional<int> series_trunc) {
  const RingPresentation pres = cohomology_presentation(family, n, coeff);
  Json result = presentation_to_json(pres);
  std::ostringstream human;
  human << pres.label() << " = " << coeff.name() << "[";
  for (size_t i = 0; i < pres.ctx->size(); ++i) {
    if (i) human << ", ";
    human << pres.ctx->var(i).name;
  }
  human << "]";
  for (const Poly& rel : pres.relations) human << " / (" << rel.to_string() << ")";
  if (pres.ctx->size() > 0) {
    human << ", degrees (";
    for (size_t i = 0; i < pres.ctx->size(); ++i) {
      if (i) human << ", ";
      human << pres.ctx->var(i).degree;
    }
    human << ")";
  }
  if (series_trunc) {
    const PoincareSeries s = pres.series(*series_trunc);
    result["series"] = series_to_json(s);
    human << "\n" << series_line(s);
  }
  std::vector<std::string> warnings;
  if (pres.grassmannian_rank0)
    warnings.push_back("rank-0 special Grassmannians are spheres (anchor "
                       "rank-zero-grassmannians); the ring shown is the trivial one");
  Json params{{"family", family_name(family)}, {"n", n}, {"coeff", coeff.name()}};
  if (series_trunc) params["series"] = *series_trunc;
  return make_output("ring", std::move(params), std::move(result),
                     {"classifying-space-cohomology"}, std::move(warnings), human.str());
}

namespace {

CommandOutput named_map_output(const std::string& map_kind, Json params, const NamedRingMap& named,
                               std::vector<std::string> citations,
                               std::vector<std::string> warnings, Json extra_result = Json()) {
  Json result = ring_map_to_json(named);
  if (extra_result.is_object())
    for (auto& [k, v] : extra_result.items()) result[k] = v;
  std::ostringstream human;
  human << map_kind << ": " << named.source.label() << " -> " << named.target.label();
  for (size_t i = 0; i < named.map.images().size(); ++i)
    human << "\n  " << named.source.ctx->var(i).name << " -> "
          << named.map.images()[i].to_string();
  return make_output("restrict", std::move(params), std::move(result), std::move(citations),
                     std::move(warnings), human.str());
}

}  // namespace

CommandOutput cmd_restrict(const std::string& map_kind, Family family, int n,
                           CoefficientField coeff, bool minus_convention) {
  Json params{{"map", map_kind}, {"n", n}};
  if (map_kind == "standard") {
    params["family"] = family_name(family);
    params["coeff"] = coeff.name();
    return named_map_output(map_kind, std::move(params), standard_restriction(family, n, coeff),
                            {"classifying-space-cohomology", "standard-restriction"}, {});
  }
  if (map_kind == "detect") {
    params["family"] = family_name(family);
    params["coeff"] = coeff.name();
    return named_map_output(map_kind, std::move(params), detection_map(family, n, coeff),
                            {"splitting-principle-detection"}, {});
  }
  if (map_kind == "j") {
    return named_map_output(map_kind, std::move(params), j_restriction(n),
                            {"determinant-twisted-embedding", "w2-pullback-law"}, {});
  }
  if (map_kind == "su") {
    params["coeff"] = coeff.name();
    return named_map_output(map_kind, std::move(params), su_restriction(n, coeff),
                            {"su-embedding"}, {});
  }
  if (map_kind == "u-selfmap") {
    params["coeff"] = coeff.name();
    params["convention"] = minus_convention ? "minus" : "plus";
    const USelfMapResult r = u_selfmap(n, coeff.p, !minus_convention);
    Json extra{{"invertible", r.invertible}, {"c1_coefficient", r.c1_coefficient}};
    return named_map_output(map_kind, std::move(params), r.map,
                            {"u-determinant-selfmap"}, {kSelfMapSignWarning}, std::move(extra));
  }
  throw validation_error("restrict: unknown map kind '" + map_kind + "'");
}

CommandOutput cmd_pin(int n) {
  const PinVerdict v = pin_structures(n);
  Json result{{"n", v.n},
              {"w1", v.w1 ? 1 : 0},
              {"w2", v.w2 ? 1 : 0},
              {"pin_plus", v.pin_plus},
              {"pin_minus", v.pin_minus}};
  std::ostringstream human;
  human << "RP^" << n << ": w_1(T) = " << (v.w1 ? "x" : "0") << ", w_2(T) = "
        << (v.w2 ? "x^2" : "0") << "; Pin^+ " << (v.pin_plus ? "exists" : "obstructed")
        << ", Pin^- " << (v.pin_minus ? "exists" : "obstructed");
  return make_output("pin", Json{{"n", n}}, std::move(result),
                     {"pin-structure-obstructions", "rp-tangent-bundle"},
                     {kRpCaseSplitWarning}, human.str());
}

CommandOutput cmd_thom(Family family, int n, CoefficientField coeff, int trunc_degree,
                       bool check_ses, bool check_direct_sum) {
  const ThomModule module = thom_module(family, n, coeff);
  const PoincareSeries s = mt_poincare_series(family, n, coeff, trunc_degree);
  Json result{{"label", module.label()},
              {"d", module.d},
              {"bottom_degree", module.bottom_degree},
              {"series", series_to_json(s)}};
  std::ostringstream human;
  human << module.label() << ", bottom class in degree " << module.bottom_degree << "\n"
        << series_line(s);
  std::vector<std::string> citations = {"thom-module-cohomology"};
  if (check_ses) {
    const SesReport ses = verify_ses_dimensions(family, n, coeff, trunc_degree);
    Json j{{"pass", ses.pass}};
    if (ses.first_violation) j["first_violation"] = *ses.first_violation;
    if (!ses.note.empty()) j["note"] = ses.note;
    result["ses_check"] = std::move(j);
    citations.push_back("mt-cofibration-ses");
    human << "\nSES dimension check: " << (ses.pass ? "pass" : "FAIL");
    if (!ses.note.empty()) human << " (" << ses.note << ")";
  }
  if (check_direct_sum) {
    const DirectSumReport sum = mt_direct_sum_check(family, n, coeff, trunc_degree);
    Json j{{"pass", sum.pass}};
    if (sum.first_violation) j["first_violation"] = *sum.first_violation;
    result["direct_sum_check"] = std::move(j);
    citations.push_back("thom-module-cohomology");
    human << "\ndirect-sum check: " << (sum.pass ? "pass" : "FAIL");
  }
  Json params{{"family", family_name(family)},
              {"n", n},
              {"coeff", coeff.name()},
              {"series", trunc_degree},
              {"check_ses", check_ses},
              {"check_direct_sum", check_direct_sum}};
  return make_output("thom", std::move(params), std::move(result), std::move(citations), {},
                     human.str());
}

CommandOutput cmd_qhomology(const std::vector<GeneratorSpec>& generators, bool s0, bool plus,
                            bool rational, int trunc_degree) {
  Json params{{"max_degree", trunc_degree},
              {"s0", s0},
              {"plus", plus},
              {"rational", rational}};
  Json gens = Json::array();
  for (const GeneratorSpec& g : generators) {
    gens.push_back(Json{{"degree", g.degree},
                        {"parity", g.parity == Parity::Odd ? "odd" : "even"},
                        {"multiplicity", g.multiplicity}});
  }
  params["generators"] = gens;

  PoincareSeries s = PoincareSeries::one(trunc_degree);
  std::vector<std::string> citations;
  std::string label;
  if (s0) {
    s = q0s0_series(trunc_degree);
    label = "H_*(Q_0 S^0; F2)";
    citations = {"free-qspace-homology"};
  } else if (rational) {
    HomologyInput input{generators};
    s = rational_omega_series(input, trunc_degree);
    label = "H_*(Omega^inf_0; Q)";
    citations = {"rational-infinite-loop-homology"};
  } else {
    HomologyInput input{generators};
    s = plus ? q0_plus_series(input, trunc_degree) : q_homology_series(input, trunc_degree);
    label = plus ? "H_*(Q_0(Y_+); F2)" : "H_*(QY; F2)";
    citations = {"free-qspace-homology"};
  }
  Json result{{"label", label}, {"series", series_to_json(s)}};
  return make_output("qhomology", std::move(params), std::move(result), std::move(citations), {},
                     label + "\n" + series_line(s));
}

namespace {

Json verdict_to_json(const SplittingVerdict& v) {
  Json evidence = Json::array();
  for (const std::string& e : v.evidence) evidence.push_back(e);
  return Json{{"pair", v.pair},
              {"n", v.n},
              {"prime", v.p},
              {"quotient", v.quotient.name()},
              {"euler_characteristic", euler_char(v.quotient)},
              {"chi_mod_p", v.chi_mod_p},
              {"verdict", v.splits ? "splits" : "inconclusive"},
              {"statement", v.statement},
              {"evidence", std::move(evidence)}};
}

std::string verdict_human(const SplittingVerdict& v) {
  std::ostringstream os;
  os << v.pair << " (n = " << v.n << ", p = " << v.p << "): quotient " << v.quotient.name()
     << ", chi = " << euler_char(v.quotient) << ", chi mod p = " << v.chi_mod_p << "\n  => "
     << (v.splits ? "splits: " + v.statement : v.statement);
  return os.str();
}

}  // namespace

CommandOutput cmd_split_pair(SplitPair pair, int n, long long p) {
  const SplittingVerdict v = splitting_verdict(pair, n, p);
  Json params{{"pair", split_pair_name(pair)}, {"n", n}, {"prime", p}};
  return make_output("split", std::move(params), verdict_to_json(v),
                     {"transfer-euler-splitting"}, {}, verdict_human(v));
}

CommandOutput cmd_split_s0(S0Family family, int n, long long p) {
  const SplittingVerdict v = s0_split_verdict(family, n, p);
  Json params{{"s0", true}, {"family", s0_family_name(family)}, {"n", n}, {"prime", p}};
  return make_output("split", std::move(params), verdict_to_json(v),
                     {"s0-splitting-euler"}, {}, verdict_human(v));
}

CommandOutput cmd_split_odd_p(int n, long long p, int trunc_degree) {
  const OddPrimeConsistencyReport report = odd_p_consistency(n, p, trunc_degree);
  Json compared = Json::array();
  for (const std::string& label : report.compared) compared.push_back(label);
  Json result{{"pass", report.pass}, {"compared", std::move(compared)}};
  if (report.first_violation) result["first_violation"] = *report.first_violation;
  std::ostringstream human;
  human << "odd-prime consistency at n = " << n << ", p = " << p << ": "
        << (report.pass ? "pass" : "FAIL") << " (all series equal that of F_p[p_1..p_"
        << n << "])";
  Json params{{"odd_p_consistency", true}, {"n", n}, {"prime", p}, {"max_degree", trunc_degree}};
  return make_output("split", std::move(params), std::move(result),
                     {"odd-prime-mto-equivalences"}, {}, human.str());
}

CommandOutput cmd_split_nonexact(int m, int trunc_degree) {
  const NonexactReport report = nonexact_explore(m, trunc_degree);
  Json full = Json::array(), special = Json::array();
  for (const Int& v : report.dims_full) full.push_back(int_to_json(v));
  for (const Int& v : report.dims_special) special.push_back(int_to_json(v));
  Json result{{"m", report.m},
              {"dims_q0_bo", std::move(full)},
              {"dims_q0_bso", std::move(special)},
              {"verdict", report.verdict}};
  if (report.witness_degree) result["witness_degree"] = *report.witness_degree;
  std::ostringstream human;
  human << "non-exactness explorer at m = " << m << " (degrees 0.." << trunc_degree << ")\n";
  human << "dim H_d(Q_0 BO(" << m + 1 << ")_+) =";
  for (const Int& v : report.dims_full) human << " " << v;
  human << "\ndim H_d(Q_0 BSO(" << m + 1 << ")_+) =";
  for (const Int& v : report.dims_special) human << " " << v;
  human << "\nverdict: " << report.verdict;
  Json params{{"nonexact", true}, {"m", m}, {"max_degree", trunc_degree}};
  return make_output("split", std::move(params), std::move(result),
                     {"nonexactness-explorer", "free-qspace-homology"}, {}, human.str());
}

CommandOutput cmd_nu_degree(int m, long long degree) {
  const std::vector<NuTableEntry> entries = nu_classes_of_degree(m, degree);
  Json list = Json::array();
  std::ostringstream human;
  human << "degree " << degree << " (m = " << m << "): " << entries.size()
        << (entries.size() == 1 ? " class" : " classes");
  for (const NuTableEntry& entry : entries) {
    Json mus = Json::array();
    for (const MuMonomial& mu : entry.mu) {
      Json base = Json::array();
      for (int b : mu.base) base.push_back(b);
      mus.push_back(Json{{"base", std::move(base)}, {"power", 1 << mu.power_log2}});
    }
    Json exps = Json::array();
    for (int e : entry.nu.exponents) exps.push_back(e);
    list.push_back(Json{{"nu", entry.nu.to_string()},
                        {"exponents", std::move(exps)},
                        {"mu_expression", mu_sum_to_string(entry.mu)},
                        {"mu_monomials", std::move(mus)}});
    human << "\n  " << entry.nu.to_string() << " = " << mu_sum_to_string(entry.mu);
  }
  Json params{{"m", m}, {"degree", degree}};
  return make_output("nu", std::move(params), Json{{"classes", std::move(list)}},
                     {"universal-class-squaring"}, {}, human.str());
}

CommandOutput cmd_nu_count(int m, long long max_degree) {
  Json counts = Json::array();
  std::ostringstream human;
  human << "independent nu-class counts for m = " << m << ":";
  for (long long d = 2; d <= max_degree; ++d) {
    const long long c = count_independent_nu(m, d);
    counts.push_back(Json{{"degree", d}, {"count", c}});
    human << "\n  degree " << d << ": " << c;
  }
  Json params{{"m", m}, {"count", true}, {"max_degree", max_degree}};
  return make_output("nu", std::move(params), Json{{"counts", std::move(counts)}},
                     {"universal-class-squaring"}, {}, human.str());
}

CommandOutput cmd_xi(long long p, int trunc_degree) {
  const PoincareSeries s = xi_subalgebra_series(p, trunc_degree);
  Json result{{"prime", p}, {"series", series_to_json(s)}};
  std::ostringstream human;
  if (p == 2)
    human << "xi-subalgebra F2[xi_1, xi_2, ...] (one generator per positive degree)\n";
  else
    human << "xi-subalgebra for p = " << p << " (generators in degrees 2m(p-1))\n";
  human << series_line(s);
  const std::vector<std::string> citations =
      p == 2 ? std::vector<std::string>{"xi-subalgebra-ko"}
             : std::vector<std::string>{"xi-subalgebra-ko", "e1-adams-summand-cohomology"};
  Json params{{"prime", p}, {"series", trunc_degree}};
  return make_output("xi", std::move(params), std::move(result), citations, {}, human.str());
}

CommandOutput cmd_reproduce_table() {
  const TableReport report = reproduce_table();
  Json rows = Json::array();
  std::vector<std::string> warnings;
  std::ostringstream human;
  human << "universal classes at m = 2, degrees 2..9";
  for (const TableRow& row : report.rows) {
    Json entries = Json::array();
    human << "\n  degree " << row.degree << ": ";
    if (row.entries.empty()) human << "(none: every exponent vector is even)";
    bool first = true;
    for (const NuTableEntry& entry : row.entries) {
      entries.push_back(Json{{"nu", entry.nu.to_string()},
                             {"mu_expression", mu_sum_to_string(entry.mu)}});
      if (!first) human << "; ";
      human << entry.nu.to_string() << " = " << mu_sum_to_string(entry.mu);
      first = false;
    }
    Json recorded = Json::array();
    for (const std::string& r : row.recorded) recorded.push_back(r);
    rows.push_back(Json{{"degree", row.degree},
                        {"entries", std::move(entries)},
                        {"recorded", std::move(recorded)},
                        {"matches_recorded", row.matches_recorded}});
    if (!row.warning.empty()) warnings.push_back(row.warning);
  }
  return make_output("reproduce-table", Json{{"m", 2}}, Json{{"rows", std::move(rows)}},
                     {"universal-class-example-table", "universal-class-squaring"},
                     std::move(warnings), human.str());
}

namespace {

bool envelope_schema_ok(const Json& envelope) {
  const std::vector<std::string> required = {"citations", "command", "parameters", "result",
                                             "warnings"};
  if (!envelope.is_object() || envelope.size() != required.size()) return false;
  size_t i = 0;
  for (auto it = envelope.begin(); it != envelope.end(); ++it, ++i) {
    if (i >= required.size() || it.key() != required[i]) return false;  // sorted key order
  }
  if (!envelope["citations"].is_array() || !envelope["warnings"].is_array()) return false;
  if (!envelope["command"].is_string() || !envelope["parameters"].is_object()) return false;
  const auto& cits = envelope["citations"];
  for (size_t k = 1; k < cits.size(); ++k)
    if (!(cits[k - 1].get<std::string>() < cits[k].get<std::string>())) return false;
  return true;
}

}  // namespace

CommandOutput cmd_selftest() {
  const std::vector<CriterionResult> results = run_acceptance_criteria();

  // envelope schema validation on sample commands
  bool schema_ok = true;
  for (const CommandOutput& sample :
       {cmd_ring(Family::O, 2, CoefficientField::f2(), 10),
        cmd_split_pair(SplitPair::O2n_in_SO2n1, 1, 2), cmd_nu_degree(2, 2)}) {
    if (!envelope_schema_ok(sample.envelope)) schema_ok = false;
    // determinism: re-serialization must be byte-identical
    if (sample.envelope.dump(2) != Json::parse(sample.envelope.dump(2)).dump(2))
      schema_ok = false;
  }

  Json rows = Json::array();
  std::ostringstream human;
  bool all = true;
  for (const CriterionResult& r : results) {
    // no timings in the envelope: identical invocations stay byte-identical
    rows.push_back(Json{{"number", r.number},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail}});
    human << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    human << buf;
    if (!r.pass) human << "\n       " << r.detail;
    human << "\n";
    all = all && r.pass;
  }
  human << (schema_ok ? "[PASS] " : "[FAIL] ") << "JSON envelope schema";
  all = all && schema_ok;

  CommandOutput out = make_output(
      "selftest", Json::object(),
      Json{{"criteria", std::move(rows)}, {"schema_ok", schema_ok}, {"all_passed", all}}, {}, {},
      human.str());
  out.exit_code = all ? 0 : 1;
  return out;
}

}  // namespace mtcalc::cli
