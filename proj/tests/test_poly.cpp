#include "doctest.h"

#include <algorithm>

#include "hcbim/error.hpp"
#include "hcbim/factor.hpp"
#include "hcbim/matrix.hpp"
#include "hcbim/poly.hpp"
#include "support.hpp"

using namespace hcbim;
using testing::q;
using testing::qs;

namespace {

QPoly product(const std::vector<PolyFactor>& fs) {
  QPoly p = QPoly::constant(1);
  for (const auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) p *= f.poly;
  return p;
}

// Fraction-free determinant (Bareiss), independent of RationalMatrix::rank.
Integer bareiss(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const QPoly a{-2, 0, 1};  // z^2 - 2
  const QPoly b{1, 1};      // z + 1
  const auto [quo, rem] = divmod(a, b);
  CHECK(quo * b + rem == a);
  CHECK(rem == QPoly{-1});
  CHECK(gcd(a * b, b * b) == b);
  CHECK(a.derivative() == QPoly{0, 2});
  CHECK(a.eval(q(3)) == 7);
  CHECK(QPoly::from_roots(qs({1, 2})) == QPoly({2, -3, 1}));
  CHECK((inverse_mod(b, a) * b) % a == QPoly{1});
  CHECK(is_square_free(a));
  CHECK_FALSE(is_square_free(b * b));
  CHECK(QPoly({4, 2}).monic() == QPoly({2, 1}));
  CHECK(QPoly({1, 2, 3}).reversed() == QPoly({3, 2, 1}));
}

TEST_CASE("Newton identities round trip") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto roots = rng.rationals(static_cast<std::size_t>(rng.integer(0, 6)), 6);
    const QPoly h = QPoly::from_roots(roots);
    const auto p = power_sums(h, roots.size() + 3);
    for (std::size_t k = 1; k <= p.size(); ++k) {
      Rational direct = 0;
      for (const auto& x : roots) direct += power(x, static_cast<unsigned>(k));
      CHECK(p[k - 1] == direct);
    }
    const std::vector<Rational> head(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(roots.size()));
    CHECK(from_power_sums(head) == h);
  }
}

TEST_CASE("factorization over Q") {
  SUBCASE("products of linear factors") {
    const QPoly p = QPoly::from_roots(qs({3, -1, 3, 0})) * q("5/2");
    const auto fs = factor_rational(p);
    REQUIRE(fs.size() == 3);
    CHECK(product(fs) == p.monic());
    auto roots = rational_roots(p);
    CHECK(roots == qs({-1, 0, 3, 3}));
  }
  SUBCASE("irreducible quartics stay whole") {
    for (const QPoly& p : {QPoly{1, 0, 0, 0, 1}, QPoly{1, 0, -10, 0, 1}, QPoly{-2, 0, 0, 0, 1}}) {
      const auto fs = factor_rational(p);
      REQUIRE(fs.size() == 1);
      CHECK(fs[0].poly == p);
    }
  }
  SUBCASE("mixed quadratic factors") {
    const QPoly a{-2, 0, 1}, b{-3, 0, 1}, c{1, 1, 1}, d(std::vector<Rational>{q("-1/3"), q(1)});
    const QPoly p = a * b * b * c * d;
    const auto fs = factor_rational(p);
    CHECK(product(fs) == p.monic());
    CHECK(fs.size() == 4);
    for (const auto& f : fs) CHECK(f.poly.is_monic());
    const auto sqf = square_free_decomposition(p);
    CHECK(product(sqf) == p.monic());
  }
  SUBCASE("Swinnerton-Dyer style product of degree 8") {
    // (x^4 - 10x^2 + 1)(x^4 - 16x^2 + 4): many modular factors, two rational ones.
    const QPoly a{1, 0, -10, 0, 1}, b{4, 0, -16, 0, 1};
    const auto fs = factor_rational(a * b);
    REQUIRE(fs.size() == 2);
    CHECK(((fs[0].poly == a && fs[1].poly == b) || (fs[0].poly == b && fs[1].poly == a)));
  }
  SUBCASE("random products") {
    testing::Rng rng(22);
    for (int trial = 0; trial < 30; ++trial) {
      QPoly p = QPoly::constant(1);
      const int parts = static_cast<int>(rng.integer(1, 4));
      for (int i = 0; i < parts; ++i) {
        std::vector<Rational> c;
        const int deg = static_cast<int>(rng.integer(1, 3));
        for (int j = 0; j < deg; ++j) c.emplace_back(rng.integer(-6, 6));
        c.emplace_back(1);
        p *= QPoly(c);
      }
      const auto fs = factor_rational(p);
      CHECK(product(fs) == p);
      for (const auto& f : fs) {
        CHECK(f.poly.is_monic());
        CHECK(f.poly.degree() >= 1);
        // A factor of degree 2 or 3 with no rational root must be irreducible.
        if (f.poly.degree() <= 3 && f.poly.degree() >= 2) CHECK(rational_roots(f.poly).empty());
      }
    }
  }
}

TEST_CASE("matrix rank agrees with Bareiss determinants") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    RationalMatrix m(n, n);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    // Low-rank on purpose half of the time.
    const bool degenerate = trial % 2 == 0 && n > 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = degenerate && i == n - 1 ? 0 : rng.integer(-3, 3);
        a[i][j] = v;
        m(i, j) = v;
      }
    if (degenerate)
      for (std::size_t j = 0; j < n; ++j) {
        a[n - 1][j] = a[0][j] * 2;
        m(n - 1, j) = m(0, j) * 2;
      }
    const bool full = bareiss(a) != 0;
    CHECK((m.rank() == n) == full);
  }
  CHECK(RationalMatrix::identity(3).trace() == 3);
}
