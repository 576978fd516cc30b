#include "doctest.h"

#include "hcbim/error.hpp"
#include "hcbim/expsum.hpp"
#include "hcbim/interpolate.hpp"
#include "support.hpp"

using namespace hcbim;
using testing::q;
using testing::qs;

namespace {

Weight w(std::initializer_list<long> xs) { return Weight{qs(xs)}; }

Witness witness(std::vector<Rational> B, std::vector<Rational> C) {
  Witness out;
  out.B = std::move(B);
  out.C = std::move(C);
  out.reduce();
  return out;
}

// chi = psi + witness moments, both of order K.
CentralCharacter shifted_character(const CentralCharacter& psi, const Witness& wit) {
  CentralCharacter chi;
  chi.moments.values = psi.moments.values;
  const auto d = moments_from_witness(wit, psi.order());
  for (std::size_t i = 0; i < d.values.size(); ++i) chi.moments.values[i] += d.values[i];
  return chi;
}

}  // namespace

TEST_CASE("power-sum completion") {
  const auto a = powersum_complete(qs({3, 5}), {});
  CHECK(a.poly == QPoly({2, -3, 1}));
  REQUIRE(a.roots);
  CHECK(*a.roots == qs({1, 2}));

  const auto b = powersum_complete(qs({5}), qs({4, 0}));
  CHECK(b.poly == QPoly({-1, 1}));
  CHECK(*b.roots == qs({1}));

  const auto c = powersum_complete({}, qs({7, 8}));
  CHECK(c.size() == 0);
  CHECK(c.poly == QPoly({1}));

  // p_1 = 0, p_2 = 4 gives z^2 - 2: no rational roots, kept symbolic.
  const auto d = powersum_complete(qs({0, 4}), {});
  CHECK(d.poly == QPoly({-2, 0, 1}));
  CHECK_FALSE(d.roots);
  CHECK(d.power_sums(4) == qs({0, 4, 0, 8}));
}

TEST_CASE("completion reproduces random power sums") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto xs = rng.rationals(static_cast<std::size_t>(rng.integer(0, 6)), 6);
    std::vector<Rational> targets;
    for (std::size_t k = 1; k <= xs.size(); ++k) {
      Rational p = 0;
      for (const auto& x : xs) p += power(x, static_cast<unsigned>(k));
      targets.push_back(p);
    }
    const auto h = powersum_complete(targets, {});
    CHECK(h.power_sums(targets.size()) == targets);
    REQUIRE(h.roots);
    auto sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    CHECK(*h.roots == sorted);
  }
}

TEST_CASE("weight family for B={4}, C={-1}") {
  const auto wit = witness(qs({4}), qs({-1}));
  const auto psi3 = character_from_weight(w({4, 1, 0}), 1);
  const auto fam3 = build_weight_family(wit, psi3, {1, 3});
  REQUIRE(fam3.entries.size() == 1);
  CHECK(fam3.entries[0].n == 3);
  CHECK(fam3.entries[0].mu() == w({4, 1, 0}));
  CHECK(fam3.entries[0].lambda() == w({5, 1, -1}));

  const auto psi4 = character_from_weight(w({4, 1, 1, 0}), 2);
  const auto fam4 = build_weight_family(wit, psi4, {4, 4});
  REQUIRE(fam4.entries.size() == 1);
  CHECK(fam4.entries[0].mu() == w({4, 1, 1, 0}));
  CHECK(fam4.entries[0].lambda() == w({5, 1, 1, -1}));
  CHECK(fam4.entries[0].completion.poly == QPoly({1, -2, 1}));

  CHECK(build_weight_family(wit, psi4, {2, 2}).entries.empty());

  try {
    build_weight_family(wit, psi3, {3, 5});
    FAIL("expected NeedMoreOrders");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NeedMoreOrders);
  }
}

TEST_CASE("family verification") {
  const auto wit = witness(qs({4}), qs({-1}));
  const auto psi = character_from_weight(w({4, 1, 0}), 1);
  const auto chi = shifted_character(psi, wit);
  auto fam = build_weight_family(wit, psi, {3, 3});
  const auto ok = verify_weight_family(fam, chi, psi);
  CHECK(ok.passed);
  CHECK(ok.checks > 0);

  fam.entries[0].completion = powersum_complete(qs({2}), {});  // mu becomes (4,2,0)
  const auto bad = verify_weight_family(fam, chi, psi);
  CHECK_FALSE(bad.passed);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations[0].n == 3);
  CHECK(bad.violations[0].k == 1);

  const auto empty = verify_weight_family(WeightFamily{}, chi, psi);
  CHECK(empty.passed);
  CHECK(empty.checks == 0);
}

TEST_CASE("random families verify and decode back to the witness") {
  testing::Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> B, C;
    const auto r = static_cast<std::size_t>(rng.integer(0, 2));
    const auto s = static_cast<std::size_t>(rng.integer(0, 2));
    for (std::size_t i = 0; i < r; ++i) B.push_back(rng.rational(4));
    for (std::size_t i = 0; i < s; ++i) C.push_back(rng.rational(4));
    const auto wit = witness(B, C);
    Weight base;
    for (int i = 0; i < 5; ++i) base.entries.emplace_back(rng.integer(-4, 4));
    const std::size_t lo = wit.r() + wit.s() + 1, hi = wit.r() + wit.s() + 8;
    const auto psi = character_from_weight(base, hi);
    const auto chi = shifted_character(psi, wit);
    const auto fam = build_weight_family(wit, psi, {lo, hi});
    CHECK(fam.entries.size() == 8);
    CHECK(verify_weight_family(fam, chi, psi).passed);

    // Each member's characters differ by exactly the witness at every order.
    for (const auto& e : fam.entries) {
      const std::size_t K = 12;
      const auto d = character_difference(e.lambda_character(K), e.mu_character(K));
      CHECK(d == moments_from_witness(wit, K));
    }
  }
}
