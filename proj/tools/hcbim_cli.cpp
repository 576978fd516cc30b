// hcbim: JSON front end for the decision procedure, weight families and the
// enveloping-algebra oracles.
//
// Exit status: 0 definitive answer, 2 INCONCLUSIVE, 1 bad input, internal
// error or a failed check.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hcbim/error.hpp"
#include "hcbim/json_io.hpp"

using namespace hcbim;

namespace {

struct Config {
  std::size_t order = 14;
  std::size_t max_nodes = 6;
  std::string mode = "exact";
  double tol = 1e-9;
  std::string n_range;
  std::string input;
  std::string inline_json;
  // lemma9 / oracles
  std::string weight;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t depth = 2;
  std::string factor = "V";
  // roundtrip
  std::size_t count = 50;
  std::uint64_t seed = 1;
};

Json read_input(const Config& cfg) {
  std::string text;
  if (!cfg.inline_json.empty()) {
    text = cfg.inline_json;
  } else if (cfg.input == "-" || cfg.input.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.input);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + cfg.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty weight");
  return out;
}

RankRange parse_range(const std::string& text, std::size_t rs) {
  if (text.empty()) return {rs + 1, rs + 8};
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::ParseError, "--n-range expects a..b");
  try {
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "--n-range expects a..b with non-negative integers");
  }
}

template <class T>
std::vector<T> truncated(std::vector<T> v, std::size_t K) {
  if (v.size() > K) v.resize(K);
  return v;
}

// Moment difference from {"chi", "psi"} or {"difference"}, cut to --order.
template <class T>
MomentSequence<T> difference_from(const Json& in, std::size_t K) {
  auto scalars = [](const Json& j) {
    if constexpr (std::is_same_v<T, Rational>) return rationals_from_json(j);
    else return complexes_from_json(j);
  };
  if (in.contains("difference")) return {MomentKind::Difference, truncated(scalars(in.at("difference")), K)};
  if (!in.contains("chi") || !in.contains("psi"))
    throw Error(ErrorCode::ParseError, "input needs \"chi\" and \"psi\", or \"difference\"");
  const auto get = [&](const char* key) {
    const Json& c = in.at(key);
    if (!c.is_object() || !c.contains("moments")) throw Error(ErrorCode::ParseError, std::string(key) + " needs \"moments\"");
    return scalars(c.at("moments"));
  };
  const auto chi = get("chi"), psi = get("psi");
  if (chi.size() != psi.size()) {
    throw Error(ErrorCode::OrderMismatch, "chi has " + std::to_string(chi.size()) + " moments, psi has " +
                                              std::to_string(psi.size()));
  }
  MomentSequence<T> d{MomentKind::Difference, truncated(chi, K)};
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= psi[i];
  return d;
}

Decision run_decide(const Config& cfg, const Json& in) {
  if (cfg.mode == "exact") return decide_difference(difference_from<Rational>(in, cfg.order), cfg.max_nodes);
  if (cfg.mode == "float") return decide_difference(difference_from<Complex>(in, cfg.order), cfg.max_nodes, Tolerance{cfg.tol});
  throw Error(ErrorCode::InvalidArgument, "unsupported mode " + cfg.mode);
}

int exit_for(const Decision& d) { return d.status == DecisionStatus::Inconclusive ? 2 : 0; }

int cmd_decide(const Config& cfg) {
  const Decision d = run_decide(cfg, read_input(cfg));
  std::cout << to_json(d).dump(2) << "\n";
  return exit_for(d);
}

Witness witness_from(const Json& j) {
  Witness w;
  if (j.contains("B")) w.B = rationals_from_json(j.at("B"));
  if (j.contains("C")) w.C = rationals_from_json(j.at("C"));
  if (j.contains("algebraic") && !j.at("algebraic").empty())
    throw Error(ErrorCode::InvalidArgument, "weight families need rational witness nodes");
  w.reduce();
  return w;
}

int cmd_family(const Config& cfg) {
  if (cfg.mode != "exact") throw Error(ErrorCode::InvalidArgument, "family works in exact mode only");
  const Json in = read_input(cfg);
  if (!in.contains("psi")) throw Error(ErrorCode::ParseError, "input needs \"psi\"");
  const CentralCharacter psi = character_from_json(in.at("psi"));

  Json out;
  Witness w;
  if (in.contains("witness")) {
    w = witness_from(in.at("witness"));
  } else {
    // Find the witness first.
    Config whole = cfg;
    whole.order = static_cast<std::size_t>(-1);
    const Decision d = run_decide(whole, in);
    out["decision"] = to_json(d);
    if (d.status != DecisionStatus::NonzeroWitness) {
      std::cout << out.dump(2) << "\n";
      return exit_for(d);
    }
    w = *d.witness;
  }
  CentralCharacter chi;
  if (in.contains("chi")) {
    chi = character_from_json(in.at("chi"));
  } else {
    chi.moments.values = psi.moments.values;
    const auto d = moments_from_witness(w, psi.order());
    for (std::size_t i = 0; i < d.values.size(); ++i) chi.moments.values[i] += d.values[i];
  }
  const WeightFamily fam = build_weight_family(w, psi, parse_range(cfg.n_range, w.r() + w.s()));
  const FamilyReport rep = verify_weight_family(fam, chi, psi);
  out["witness"] = to_json(w);
  out["family"] = to_json(fam);
  out["verification"] = to_json(rep);
  std::cout << out.dump(2) << "\n";
  return rep.passed ? 0 : 1;
}

int cmd_lemma9(const Config& cfg) {
  const Weight mu{parse_list(cfg.weight)};
  const auto res = lemma9_difference(mu, cfg.r, cfg.s, cfg.order);
  Json out;
  out["mu"] = to_json(mu);
  out["lambda"] = to_json(shift_weight(mu, cfg.r, cfg.s));
  out["r"] = cfg.r;
  out["s"] = cfg.s;
  Json d = Json::array();
  for (const auto& x : res.difference.values) d.push_back(to_json(x));
  out["difference"] = d;
  out["witness"] = to_json(res.witness);
  std::cout << out.dump(2) << "\n";
  return 0;
}

TensorFactor parse_factor(const std::string& f) {
  if (f == "V") return TensorFactor::V;
  if (f == "V*" || f == "Vdual" || f == "dual") return TensorFactor::VDual;
  throw Error(ErrorCode::InvalidArgument, "--factor must be V or V*");
}

int cmd_oracle_omega(const Config& cfg) {
  const auto rep = omega_spectrum_check(Weight{parse_list(cfg.weight)}, cfg.depth, parse_factor(cfg.factor));
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.passed ? 0 : 1;
}

int cmd_oracle_casimir(const Config& cfg) {
  const auto rep = casimir_check(Weight{parse_list(cfg.weight)}, cfg.depth);
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.passed ? 0 : 1;
}

// Random rational witnesses through moments_from_witness and back.
int cmd_roundtrip(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const long bound = 5;
  const std::size_t side = std::max<std::size_t>(1, cfg.max_nodes / 2);
  Json failures = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Witness w;
    const auto nb = static_cast<std::size_t>(uniform(0, static_cast<long>(side)));
    const auto nc = static_cast<std::size_t>(uniform(0, static_cast<long>(side)));
    for (std::size_t k = 0; k < nb + nc; ++k) {
      Rational x(uniform(-bound, bound), uniform(1, bound));
      x.canonicalize();
      (k < nb ? w.B : w.C).push_back(x);
    }
    w.reduce();
    const std::size_t L = std::max<std::size_t>(1, w.r() + w.s());
    const auto d = moments_from_witness(w, 2 * L + 2);
    bool ok = false;
    if (cfg.mode == "exact") {
      const auto dec = decide_difference(d, L);
      ok = dec.status == DecisionStatus::NonzeroWitness && *dec.witness == w;
    } else if (cfg.mode == "float") {
      const auto dec = decide_difference(to_approx(d), L, Tolerance{cfg.tol});
      ok = dec.status == DecisionStatus::NonzeroWitness && dec.approx_witness->B.size() == w.B.size() &&
           dec.approx_witness->C.size() == w.C.size();
      for (std::size_t k = 0; ok && k < w.B.size(); ++k) ok = std::abs(dec.approx_witness->B[k] - to_complex(w.B[k])) <= 1e-9;
      for (std::size_t k = 0; ok && k < w.C.size(); ++k) ok = std::abs(dec.approx_witness->C[k] - to_complex(w.C[k])) <= 1e-9;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unsupported mode " + cfg.mode);
    }
    if (ok) ++passed;
    else failures.push_back(to_json(w));
  }
  Json out;
  out["mode"] = cfg.mode;
  out["seed"] = cfg.seed;
  out["cases"] = cfg.count;
  out["passed"] = passed;
  out["failures"] = failures;
  std::cout << out.dump(2) << "\n";
  return passed == cfg.count ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central-character difference decision tool"};
  app.require_subcommand(1);
  Config cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "JSON input file, or - for stdin")->default_val("-");
    sub->add_option("--json", cfg.inline_json, "inline JSON input");
  };
  auto add_decision = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "number of moments used (K)")->default_val(14)->check(CLI::PositiveNumber);
    sub->add_option("--max-nodes", cfg.max_nodes, "node bound (L)")->default_val(6)->check(CLI::PositiveNumber);
    sub->add_option("--mode", cfg.mode, "exact or float")->default_val("exact")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", cfg.tol, "float-mode tolerance")->default_val(1e-9);
  };

  auto* decide = app.add_subcommand("decide", "decide whether chi - psi is a signed integer exponential polynomial");
  add_input(decide);
  add_decision(decide);

  auto* family = app.add_subcommand("family", "finite-rank weights (lambda, mu) realizing a witness");
  add_input(family);
  add_decision(family);
  family->add_option("--n-range", cfg.n_range, "ranks a..b (inclusive); default r+s+1..r+s+8");

  auto* lemma9 = app.add_subcommand("lemma9", "moment difference for mu shifted by e_1..e_r and -e_{n-s+1}..-e_n");
  lemma9->add_option("--mu", cfg.weight, "comma-separated weight")->required();
  lemma9->add_option("--r", cfg.r)->default_val(0);
  lemma9->add_option("--s", cfg.s)->default_val(0);
  lemma9->add_option("--order", cfg.order, "number of moments")->default_val(14)->check(CLI::PositiveNumber);

  auto* omega = app.add_subcommand("oracle-omega", "check the Omega spectrum on truncated M_lambda (x) V or V*");
  omega->add_option("--lambda", cfg.weight, "comma-separated generic weight")->required();
  omega->add_option("--depth", cfg.depth, "truncation height")->default_val(2);
  omega->add_option("--factor", cfg.factor, "V or V*")->default_val("V");

  auto* casimir = app.add_subcommand("oracle-casimir", "check that C_2 is central and acts by sum lambda_i^2");
  casimir->add_option("--lambda", cfg.weight, "comma-separated weight")->required();
  casimir->add_option("--depth", cfg.depth, "truncation height")->default_val(2);

  auto* roundtrip = app.add_subcommand("roundtrip", "random witness round trip through the decision procedure");
  add_decision(roundtrip);
  roundtrip->add_option("--count", cfg.count, "number of cases")->default_val(50);
  roundtrip->add_option("--seed", cfg.seed, "random seed")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*decide) return cmd_decide(cfg);
    if (*family) return cmd_family(cfg);
    if (*lemma9) return cmd_lemma9(cfg);
    if (*omega) return cmd_oracle_omega(cfg);
    if (*casimir) return cmd_oracle_casimir(cfg);
    if (*roundtrip) return cmd_roundtrip(cfg);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
