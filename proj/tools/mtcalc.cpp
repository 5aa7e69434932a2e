#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "mtcalc/cli_commands.hpp"

namespace {

using namespace mtcalc;

Family parse_family(const std::string& name) {
  if (name == "O" || name == "o") return Family::O;
  if (name == "SO" || name == "so") return Family::SO;
  if (name == "U" || name == "u") return Family::U;
  if (name == "SU" || name == "su") return Family::SU;
  if (name == "Sp" || name == "sp") return Family::Sp;
  if (name == "Torus" || name == "torus") return Family::Torus;
  if (name == "ElemAbelian2" || name == "elemabelian2") return Family::ElemAbelian2;
  throw validation_error("unknown family '" + name + "'");
}

CoefficientField parse_coeff(const std::string& name) {
  if (name == "f2" || name == "F2") return CoefficientField::f2();
  if (name == "q" || name == "Q") return CoefficientField::q();
  if ((name.size() > 1 && (name[0] == 'f' || name[0] == 'F'))) {
    const long long p = std::stoll(name.substr(1));
    return CoefficientField::fp(p);
  }
  throw validation_error("unknown coefficient field '" + name + "' (use f2, f<p> or q)");
}

std::vector<GeneratorSpec> parse_generators(const std::string& list) {
  std::vector<GeneratorSpec> gens;
  std::string token;
  std::istringstream is(list);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    Parity parity = Parity::Even;
    if (token.back() == 'o' || token.back() == 'O') {
      parity = Parity::Odd;
      token.pop_back();
    } else if (token.back() == 'e' || token.back() == 'E') {
      token.pop_back();
    }
    gens.push_back({std::stoi(token), parity, 1});
  }
  return gens;
}

void emit(const cli::CommandOutput& out, bool json) {
  if (json)
    std::cout << out.envelope.dump(2) << "\n";
  else
    std::cout << out.human << "\n";
  std::exit(out.exit_code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mtcalc: exact calculator for Madsen-Tillmann spectrum invariants"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit the machine-readable envelope");

  // ring
  auto* ring = app.add_subcommand("ring", "cohomology ring of a classifying space");
  std::string ring_family = "O", ring_coeff = "f2";
  int ring_n = 1;
  int ring_series = -1;
  ring->add_option("--family", ring_family, "O|SO|U|SU|Sp|Torus|ElemAbelian2")->required();
  ring->add_option("--n", ring_n, "rank")->required();
  ring->add_option("--coeff", ring_coeff, "f2|f<p>|q");
  ring->add_option("--series", ring_series, "also print the Poincare series up to this degree")
      ->check(CLI::NonNegativeNumber);
  ring->add_flag("--json", json, "emit the machine-readable envelope");

  // restrict / detect
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction and self maps between the rings");
  std::string restrict_map = "standard", restrict_family = "O", restrict_coeff;
  int restrict_n = 1;
  long long restrict_prime = 2;
  bool restrict_minus = false;
  restrict_cmd->add_option("--map", restrict_map, "standard|j|su|u-selfmap|detect")->required();
  restrict_cmd->add_option("--family", restrict_family, "family for standard/detect");
  restrict_cmd->add_option("--n", restrict_n, "rank parameter")->required();
  restrict_cmd->add_option("--prime", restrict_prime, "prime (0 for rational coefficients)");
  restrict_cmd->add_option("--coeff", restrict_coeff, "overrides --prime (f2|f<p>|q)");
  restrict_cmd->add_flag("--minus", restrict_minus, "use the x_i -> x_i - c_1 convention");
  restrict_cmd->add_flag("--json", json, "emit the machine-readable envelope");

  auto* detect = app.add_subcommand("detect", "splitting-principle detection map");
  std::string detect_family = "O", detect_coeff = "f2";
  int detect_n = 1;
  detect->add_option("--family", detect_family, "O|U|Sp")->required();
  detect->add_option("--n", detect_n, "rank")->required();
  detect->add_option("--coeff", detect_coeff, "f2|f<p>|q");
  detect->add_flag("--json", json, "emit the machine-readable envelope");

  // pin
  auto* pin = app.add_subcommand("pin", "Pin structures on RP^n");
  int pin_n = 1;
  pin->add_option("--n", pin_n, "dimension of the projective space")->required();
  pin->add_flag("--json", json, "emit the machine-readable envelope");

  // thom
  auto* thom = app.add_subcommand("thom", "cohomology of the Thom spectrum MTG(n)");
  std::string thom_family = "U", thom_coeff = "f2";
  int thom_n = 1, thom_series = -1;
  bool thom_ses = false, thom_sum = false;
  thom->add_option("--family", thom_family, "U|SU|Sp|O")->required();
  thom->add_option("--n", thom_n, "rank")->required();
  thom->add_option("--coeff", thom_coeff, "f2|f<p>|q");
  thom->add_option("--series", thom_series, "truncation degree")->check(CLI::NonNegativeNumber);
  thom->add_flag("--check-ses", thom_ses, "verify the cofibre-sequence dimension identity");
  thom->add_flag("--check-direct-sum", thom_sum, "verify the direct-sum series identity");
  thom->add_flag("--json", json, "emit the machine-readable envelope");

  // qhomology
  auto* qh = app.add_subcommand("qhomology", "free Dyer-Lashof algebra series");
  std::string qh_generators;
  int qh_max = -1;
  bool qh_s0 = false, qh_plus = false, qh_rational = false;
  qh->add_option("--generators", qh_generators,
                 "comma list of degrees, optional parity suffix (e.g. 1,2,3o)");
  qh->add_option("--max-degree", qh_max, "truncation degree")->check(CLI::NonNegativeNumber);
  qh->add_flag("--s0", qh_s0, "base-point component of QS^0");
  qh->add_flag("--plus", qh_plus, "base-point component of Q(Y_+)");
  qh->add_flag("--rational", qh_rational, "rational infinite-loop homology");
  qh->add_flag("--json", json, "emit the machine-readable envelope");

  // split
  auto* split = app.add_subcommand("split", "transfer splitting verdicts and consistency checks");
  std::string split_pair, split_family;
  int split_n = 1, split_m = 2, split_max = -1;
  long long split_prime = 2;
  bool split_s0 = false, split_oddp = false, split_nonexact = false;
  split->add_option("--pair", split_pair,
                    "O2n-SO2n1|PinPlus4n-Spin4n1|PinMinus4n2-Spin4n3|SO2n-SO2n1|O2n-O2n1|Un-SUn1");
  split->add_option("--family", split_family, "O|SO|Pin+|Pin-|U|Sp (with --s0)");
  split->add_option("--n", split_n, "rank parameter");
  split->add_option("--m", split_m, "even rank for --nonexact");
  split->add_option("--prime", split_prime, "prime");
  split->add_option("--max-degree", split_max, "truncation degree")->check(CLI::NonNegativeNumber);
  split->add_flag("--s0", split_s0, "S^0-splitting verdict");
  split->add_flag("--odd-p-consistency", split_oddp, "odd-prime series consistency");
  split->add_flag("--nonexact", split_nonexact, "non-exactness dimension explorer");
  split->add_flag("--json", json, "emit the machine-readable envelope");

  // nu
  auto* nu = app.add_subcommand("nu", "universally defined classes and their mu-expansions");
  int nu_m = 2;
  long long nu_degree = -1, nu_max = -1;
  bool nu_count = false;
  nu->add_option("--m", nu_m, "even rank of the underlying bundle theory")->required();
  nu->add_option("--degree", nu_degree, "emit every class of this degree");
  nu->add_option("--max-degree", nu_max, "with --count: top degree");
  nu->add_flag("--count", nu_count, "emit independence counts per degree");
  nu->add_flag("--json", json, "emit the machine-readable envelope");

  // xi
  auto* xi = app.add_subcommand("xi", "xi-family subalgebra series");
  long long xi_prime = 2;
  int xi_series = -1;
  xi->add_option("--prime", xi_prime, "prime")->required();
  xi->add_option("--series", xi_series, "truncation degree")->check(CLI::NonNegativeNumber);
  xi->add_flag("--json", json, "emit the machine-readable envelope");

  // reproduce-table / selftest
  auto* table = app.add_subcommand("reproduce-table", "derived universal-class table at m = 2");
  table->add_flag("--json", json, "emit the machine-readable envelope");
  auto* selftest = app.add_subcommand("selftest", "run the recorded fixtures and oracles");
  selftest->add_flag("--json", json, "emit the machine-readable envelope");

  try {
    app.parse(argc, argv);

    const int fallback = cli::default_truncation();
    if (ring->parsed()) {
      std::optional<int> series;
      if (ring_series >= 0) series = ring_series;
      else if (ring->count("--series")) series = fallback;
      emit(cli::cmd_ring(parse_family(ring_family), ring_n, parse_coeff(ring_coeff), series),
           json);
    }
    if (restrict_cmd->parsed()) {
      const CoefficientField coeff = restrict_coeff.empty()
                                         ? CoefficientField::from_prime_or_zero(restrict_prime)
                                         : parse_coeff(restrict_coeff);
      emit(cli::cmd_restrict(restrict_map, parse_family(restrict_family), restrict_n, coeff,
                             restrict_minus),
           json);
    }
    if (detect->parsed()) {
      emit(cli::cmd_restrict("detect", parse_family(detect_family), detect_n,
                             parse_coeff(detect_coeff), false),
           json);
    }
    if (pin->parsed()) emit(cli::cmd_pin(pin_n), json);
    if (thom->parsed()) {
      emit(cli::cmd_thom(parse_family(thom_family), thom_n, parse_coeff(thom_coeff),
                         thom_series >= 0 ? thom_series : fallback, thom_ses, thom_sum),
           json);
    }
    if (qh->parsed()) {
      emit(cli::cmd_qhomology(parse_generators(qh_generators), qh_s0, qh_plus, qh_rational,
                              qh_max >= 0 ? qh_max : fallback),
           json);
    }
    if (split->parsed()) {
      const int trunc = split_max >= 0 ? split_max : fallback;
      if (split_oddp) emit(cli::cmd_split_odd_p(split_n, split_prime, trunc), json);
      if (split_nonexact) emit(cli::cmd_split_nonexact(split_m, trunc), json);
      if (split_s0) {
        const auto family = s0_family_from_name(split_family);
        if (!family) throw validation_error("split --s0: unknown family '" + split_family + "'");
        emit(cli::cmd_split_s0(*family, split_n, split_prime), json);
      }
      if (split_pair.empty())
        throw validation_error(
            "split: provide --pair, --s0, --odd-p-consistency or --nonexact");
      const auto pair = split_pair_from_name(split_pair);
      if (!pair) throw validation_error("split: unknown pair '" + split_pair + "'");
      emit(cli::cmd_split_pair(*pair, split_n, split_prime), json);
    }
    if (nu->parsed()) {
      if (nu_count) emit(cli::cmd_nu_count(nu_m, nu_max >= 2 ? nu_max : 12), json);
      if (nu_degree < 1) throw validation_error("nu: provide --degree or --count");
      emit(cli::cmd_nu_degree(nu_m, nu_degree), json);
    }
    if (xi->parsed()) emit(cli::cmd_xi(xi_prime, xi_series >= 0 ? xi_series : fallback), json);
    if (table->parsed()) emit(cli::cmd_reproduce_table(), json);
    if (selftest->parsed()) emit(cli::cmd_selftest(), json);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints the help text
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
