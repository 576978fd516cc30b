#pragma once

// JSON encodings shared by the command-line tool. Exact scalars are "p/q"
// strings (JSON integers are accepted on input); approximate scalars are
// [re, im] pairs.

#include <vector>

#include "json.hpp"

#include "hcbim/charcenter.hpp"
#include "hcbim/expsum.hpp"
#include "hcbim/interpolate.hpp"
#include "hcbim/verma.hpp"

namespace hcbim {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const Complex& z);
Json to_json(const QPoly& p);  // coefficient list, low to high

/// Integers and "p/q" strings; anything else is a ParseError.
Rational rational_from_json(const Json& j);
/// Numbers, [re, im] pairs and "p/q" strings.
Complex complex_from_json(const Json& j);

std::vector<Rational> rationals_from_json(const Json& j);
std::vector<Complex> complexes_from_json(const Json& j);

Json to_json(const Weight& w);
Json to_json(const CentralCharacter& chi);
/// {"moments": [...], "origin": optional, "n": optional, "t": optional}
CentralCharacter character_from_json(const Json& j);

Json to_json(const Witness& w);
Json to_json(const ApproxWitness& w);
Json to_json(const Decision& d);

Json to_json(const FamilyEntry& e);
Json to_json(const WeightFamily& f);
Json to_json(const FamilyReport& r);

Json to_json(const OracleReport& r);

}  // namespace hcbim
