#include "doctest.h"

#include "hcbim/error.hpp"
#include "hcbim/uea.hpp"
#include "support.hpp"

using namespace hcbim;
using testing::q;
using testing::qs;

namespace {

UEAElement gens(GlAlgebra& A, std::initializer_list<std::pair<Generator, long>> terms) {
  UEAElement out{A.rank(), {}};
  for (const auto& [g, c] : terms) out += A.element(g) * Rational(c);
  return out;
}

UEAElement product(GlAlgebra& A, std::initializer_list<Generator> word) {
  const std::vector<Generator> w(word);
  return A.straighten(w);
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("straightening examples") {
  GlAlgebra A(2);
  CHECK(product(A, {{1, 2}, {2, 1}}) ==
        product(A, {{2, 1}, {1, 2}}) + gens(A, {{{1, 1}, 1}, {{2, 2}, -1}}));
  // E21 E11 is already normal
  const auto e = product(A, {{2, 1}, {1, 1}});
  CHECK(e.terms.size() == 1);
  CHECK(A.straighten(std::vector<Generator>{}) == A.one());
  CHECK(product(A, {{1, 1}, {1, 2}}) == product(A, {{1, 2}, {1, 1}}) + A.element({1, 2}));
  CHECK(A.to_string(product(A, {{1, 2}, {2, 1}})) == "-E22 + E11 + E21*E12");

  CHECK_THROWS_AS(A.element({3, 1}), Error);
  try {
    product(A, {{0, 1}});
    FAIL("expected InvalidGenerator");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvalidGenerator);
  }
}

TEST_CASE("commutation relations for all generator pairs") {
  for (std::size_t n = 1; n <= 3; ++n) {
    GlAlgebra A(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
          for (std::size_t l = 1; l <= n; ++l) {
            UEAElement expected{n, {}};
            if (j == k) expected += A.element({i, l});
            if (l == i) expected -= A.element({k, j});
            CHECK(product(A, {{i, j}, {k, l}}) - product(A, {{k, l}, {i, j}}) == expected);
          }
  }
}

TEST_CASE("normal forms do not depend on the reduction order") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 3));
    GlAlgebra A(n);
    std::vector<Generator> word;
    const auto len = rng.integer(0, 4);
    for (long p = 0; p < len; ++p)
      word.push_back({static_cast<std::size_t>(rng.integer(1, static_cast<long>(n))),
                      static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)))});
    const auto memo = A.straighten(word);
    CHECK(memo == straighten_by_rewriting(n, word, RewriteOrder::Leftmost));
    CHECK(memo == straighten_by_rewriting(n, word, RewriteOrder::Rightmost));
    // Idempotent on normal forms: re-straightening each monomial's word is a no-op.
    for (const auto& [m, c] : memo.terms) {
      std::vector<Generator> w;
      for (std::size_t g : A.word_of(m)) w.push_back(A.generator(g));
      const auto again = A.straighten(w);
      REQUIRE(again.terms.size() == 1);
      CHECK(again.terms.begin()->first == m);
    }
  }
}

TEST_CASE("quadratic Casimir") {
  GlAlgebra A1(1);
  CHECK(A1.casimir2() == product(A1, {{1, 1}, {1, 1}}));

  GlAlgebra A2(2);
  UEAElement sum{2, {}};
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) sum += product(A2, {{i, j}, {j, i}});
  CHECK(A2.casimir2() == sum + A2.one() * q("1/2"));

  GlAlgebra A3(3);
  const auto c3 = A3.casimir2();
  CHECK(c3.terms.at(Monomial(9, 0)) == 2);  // straightening E_ij E_ji adds no constant
  for (std::size_t n = 1; n <= 3; ++n) {
    GlAlgebra A(n);
    const auto c = A.casimir2();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) CHECK(A.commutator(c, A.element({i, j})).is_zero());
  }
}

TEST_CASE("weights of symmetric tensor products") {
  const auto a = tensor_weight_multiset(2, 1, 1);
  CHECK(a == WeightMultiset{{{0, 0}, 2}, {{1, -1}, 1}, {{-1, 1}, 1}});
  CHECK(tensor_weight_multiset(3, 0, 0) == WeightMultiset{{{0, 0, 0}, 1}});
  CHECK(tensor_weight_multiset(2, 2, 0) == WeightMultiset{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});

  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 0; r <= 3; ++r)
      for (std::size_t s = 0; s <= 3; ++s) {
        const auto ms = tensor_weight_multiset(n, r, s);
        std::size_t total = 0;
        for (const auto& [wt, m] : ms) total += m;
        CHECK(total == binom(n + r - 1, r) * binom(n + s - 1, s));
        WeightVector top(n, 0);
        top[0] += static_cast<long>(r);
        top[n - 1] -= static_cast<long>(s);
        CHECK(ms.count(top) == 1);
        for (const auto& [wt, m] : ms) CHECK(dominates(top, wt));
      }
}

TEST_CASE("maximal weight certificate") {
  CHECK(witness_weight_check(qs({5, 1, -1}), qs({4, 1, 0}), 1, 1));
  CHECK(witness_weight_check(qs({3, 2}), qs({3, 2}), 0, 0));
  CHECK_FALSE(witness_weight_check(qs({3, 0}), qs({1, 0}), 1, 0));
  try {
    witness_weight_check(qs({1, 2}), qs({1}), 0, 0);
    FAIL("expected RankMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankMismatch);
  }
}
