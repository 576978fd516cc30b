#include "doctest.h"

#include "hcbim/error.hpp"
#include "hcbim/json_io.hpp"
#include "support.hpp"

using namespace hcbim;
using testing::q;
using testing::qs;

TEST_CASE("scalar encodings") {
  CHECK(to_json(q("-6/4")) == Json("-3/2"));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(rational_from_json(Json("10/4")) == q("5/2"));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), Error);
  CHECK_THROWS_AS(rational_from_json(Json::array({1, 0})), Error);
  CHECK(complex_from_json(Json::array({1.5, -2.0})) == Complex(1.5, -2.0));
  CHECK(complex_from_json(Json("1/4")) == Complex(0.25, 0));
  CHECK(complex_from_json(Json(3)) == Complex(3, 0));
  CHECK(to_json(Complex(1, 2)) == Json::array({1.0, 2.0}));
}

TEST_CASE("central character round trip") {
  auto chi = character_from_weight(Weight{qs({4, 1, 0})}, 3);
  chi.t_tag = q("1/3");
  const Json j = to_json(chi);
  CHECK(j.dump() == R"({"moments":["5","17","65"],"origin":["4","1","0"],"n":3,"t":"1/3"})");
  const auto back = character_from_json(j);
  CHECK(back.moments == chi.moments);
  CHECK(back.origin == chi.origin);
  CHECK(back.rank_tag == chi.rank_tag);
  CHECK(back.t_tag == chi.t_tag);
  CHECK_THROWS_AS(character_from_json(Json::object()), Error);
}

TEST_CASE("decision document") {
  const auto dec = decide_difference(MomentSequence<Rational>{MomentKind::Difference, qs({0, 10, 60, 370, 2100})}, 2);
  const Json j = to_json(dec);
  CHECK(j["status"] == "NONZERO_WITNESS");
  CHECK(j["witness"]["B"] == Json::array({"4"}));
  CHECK(j["witness"]["C"] == Json::array({"-1"}));
  CHECK(j["witness"]["algebraic"].empty());
  CHECK(j["verified_order"] == 5);
  CHECK(j["rank"] == 2);
}

TEST_CASE("family document with a symbolic completion") {
  Witness w;
  w.B = qs({4});
  // Residual power sums (0, 4) for the middle pair give z^2 - 2.
  CentralCharacter psi;
  psi.moments.values = {q(4), q(20)};
  const auto fam = build_weight_family(w, psi, {3, 3});
  const Json j = to_json(fam);
  CHECK(j["r"] == 1);
  CHECK(j["s"] == 0);
  REQUIRE(j["entries"].size() == 1);
  const auto& mu = j["entries"][0]["mu"];
  CHECK(mu[0] == "4");
  CHECK(mu[1]["roots_of"] == Json::array({"-2", "0", "1"}));
  CHECK(mu[1]["count"] == 2);
  CHECK(j["entries"][0]["lambda"][0] == "5");
}

TEST_CASE("oracle report document") {
  const auto rep = omega_spectrum_check(Weight{qs({3, 1})}, 1, TensorFactor::V);
  const Json j = to_json(rep);
  CHECK(j["check"] == "omega-V");
  CHECK(j["n"] == 2);
  CHECK(j["depth"] == 1);
  CHECK(j["status"] == "pass");
  CHECK(j["detail"]["eigenvalues"] == Json::array({"3", "1"}));
}
