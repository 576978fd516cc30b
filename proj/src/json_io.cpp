#include "hcbim/json_io.hpp"

#include "hcbim/error.hpp"

namespace hcbim {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_json(p.coeff(static_cast<std::size_t>(i))));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<unsigned long long>())))
                                  : Rational(Integer(std::to_string(j.get<long long>())));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an exact scalar (integer or \"p/q\" string), got " + j.dump());
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return to_complex(parse_rational(j.get<std::string>()));
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorCode::ParseError, "expected a number, [re, im] pair or \"p/q\" string, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of scalars");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

std::vector<Complex> complexes_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of scalars");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

namespace {

template <class T>
Json array_of(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json array_of(const std::vector<long>& xs) {
  Json out = Json::array();
  for (long x : xs) out.push_back(x);
  return out;
}

}  // namespace

Json to_json(const Weight& w) { return array_of(w.entries); }

Json to_json(const CentralCharacter& chi) {
  Json out;
  out["moments"] = array_of(chi.moments.values);
  if (chi.origin) out["origin"] = to_json(*chi.origin);
  if (chi.rank_tag) out["n"] = *chi.rank_tag;
  if (chi.t_tag) out["t"] = to_json(*chi.t_tag);
  return out;
}

CentralCharacter character_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("moments")) throw Error(ErrorCode::ParseError, "character needs \"moments\"");
  CentralCharacter chi;
  chi.moments.values = rationals_from_json(j.at("moments"));
  if (j.contains("origin")) chi.origin = Weight{rationals_from_json(j.at("origin"))};
  if (j.contains("n")) {
    if (!j.at("n").is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"n\" must be a non-negative integer");
    chi.rank_tag = j.at("n").get<std::size_t>();
  }
  if (j.contains("t")) chi.t_tag = rational_from_json(j.at("t"));
  return chi;
}

Json to_json(const Witness& w) {
  Json out;
  out["B"] = array_of(w.B);
  out["C"] = array_of(w.C);
  Json alg = Json::array();
  for (const auto& a : w.algebraic) alg.push_back({{"poly", to_json(a.minimal_poly)}, {"weight", a.weight}});
  out["algebraic"] = alg;
  return out;
}

Json to_json(const ApproxWitness& w) {
  Json out;
  out["B"] = array_of(w.B);
  out["C"] = array_of(w.C);
  out["algebraic"] = Json::array();
  return out;
}

Json to_json(const Decision& d) {
  Json out;
  out["status"] = to_string(d.status);
  if (d.witness) out["witness"] = to_json(*d.witness);
  else if (d.approx_witness) out["witness"] = to_json(*d.approx_witness);
  else out["witness"] = nullptr;
  out["verified_order"] = d.verified_order;
  out["rank"] = d.rank;
  out["rank_profile"] = d.rank_profile;
  out["supplied_order"] = d.supplied_order;
  out["max_nodes"] = d.max_nodes;
  out["detail"] = d.detail;
  return out;
}

Json to_json(const FamilyEntry& e) {
  Json out;
  out["n"] = e.n;
  auto weight = [&](bool lambda) {
    if (auto w = lambda ? e.lambda() : e.mu()) return to_json(*w);
    // Completion does not split over Q: list it by its polynomial.
    Json arr = Json::array();
    for (const auto& b : e.head) arr.push_back(to_json(lambda ? Rational(b + 1) : b));
    arr.push_back({{"roots_of", to_json(e.completion.poly)}, {"count", e.completion.size()}});
    for (const auto& c : e.tail) arr.push_back(to_json(lambda ? Rational(c - 1) : c));
    return arr;
  };
  out["lambda"] = weight(true);
  out["mu"] = weight(false);
  out["valid_order"] = e.valid_order;
  return out;
}

Json to_json(const WeightFamily& f) {
  Json out;
  out["r"] = f.r;
  out["s"] = f.s;
  Json entries = Json::array();
  for (const auto& e : f.entries) entries.push_back(to_json(e));
  out["entries"] = entries;
  return out;
}

Json to_json(const FamilyReport& r) {
  Json out;
  out["status"] = r.passed ? "pass" : "fail";
  out["checks"] = r.checks;
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"n", x.n}, {"k", x.k}, {"which", x.which}, {"expected", to_json(x.expected)},
                 {"actual", to_json(x.actual)}});
  out["violations"] = v;
  return out;
}

Json to_json(const OracleReport& r) {
  Json out;
  out["check"] = r.check;
  out["n"] = r.lambda.rank();
  out["lambda"] = to_json(r.lambda);
  out["depth"] = r.depth;
  out["status"] = r.passed ? "pass" : "fail";
  Json detail;
  Json blocks = Json::array();
  if (r.check == "casimir") {
    detail["scalar"] = to_json(r.expected_scalar);
    Json nc = Json::array();
    for (const auto& g : r.noncommuting) nc.push_back({g.i, g.j});
    detail["noncommuting"] = nc;
    detail["non_scalar_blocks"] = r.non_scalar_blocks;
    for (const auto& b : r.blocks)
      blocks.push_back({{"deficit", array_of(b.deficit)}, {"dimension", b.dimension}, {"scalar", b.annihilated}});
  } else {
    detail["factor"] = to_string(r.factor);
    detail["eigenvalues"] = array_of(r.eigenvalues);
    for (const auto& b : r.blocks) {
      blocks.push_back({{"deficit", array_of(b.deficit)},
                        {"dimension", b.dimension},
                        {"expected_dimension", b.expected_dimension},
                        {"annihilated", b.annihilated},
                        {"shift_identity", b.shift_identity},
                        {"trace", to_json(b.trace)},
                        {"expected_trace", to_json(b.expected_trace)},
                        {"eigenvalues", array_of(b.eigenvalues)}});
    }
  }
  detail["blocks"] = blocks;
  out["detail"] = detail;
  return out;
}

}  // namespace hcbim
