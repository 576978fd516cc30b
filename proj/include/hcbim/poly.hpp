#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcbim/rational.hpp"

namespace hcbim {

/// Dense univariate polynomial over Q, coefficients stored from the constant
/// term upwards. Trailing zeros are never stored, so the zero polynomial has
/// an empty coefficient vector and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Rational& c);
  /// z - root
  static QPoly linear_factor(const Rational& root);
  /// prod (z - root)
  static QPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const;
  const Rational& lead() const;

  Rational eval(const Rational& x) const;
  Complex eval(const Complex& x) const;

  QPoly derivative() const;
  QPoly monic() const;
  /// Coefficients reversed: z^deg * p(1/z).
  QPoly reversed() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator-(QPoly a) { return a *= Rational(-1); }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Degree first, then coefficients from the top down. Used to give factor
  /// lists a deterministic order.
  friend bool operator<(const QPoly& a, const QPoly& b);

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws InvalidArgument on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Returns (g, s, t) with s*a + t*b = g = monic gcd(a, b).
struct ExtendedGcd {
  QPoly g, s, t;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);
/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

bool is_square_free(const QPoly& p);

/// Power sums p_1..p_count of the roots (with multiplicity) of a monic
/// polynomial, via Newton's identities on its coefficients.
std::vector<Rational> power_sums(const QPoly& monic_poly, std::size_t count);

/// The monic polynomial of degree m = sums.size() whose root multiset has
/// power sums sums[0..m-1] (Newton's identities in the other direction).
QPoly from_power_sums(std::span<const Rational> sums);

}  // namespace hcbim
