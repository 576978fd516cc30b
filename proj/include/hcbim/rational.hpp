#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcbim {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Tolerance context for the floating-point path. Equality of approximate
/// scalars means max-norm difference <= eps.
struct Tolerance {
  double eps = 1e-9;
};

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& x);

/// Parses "p", "p/q" or "-p/q" (optional surrounding whitespace). The result
/// is canonicalized; a zero denominator or stray characters throw ParseError.
Rational parse_rational(std::string_view text);

Complex to_complex(const Rational& x);

bool approx_equal(const Complex& a, const Complex& b, const Tolerance& tol);

/// Row k of Pascal's triangle: binom(k, 0..k).
std::vector<Integer> binomial_row(unsigned k);

// Scalar helpers shared by the templated algorithms. They are overloaded
// rather than specialized so both mpq_class and std::complex<double> work.
inline Rational scalar_from_integer(const Integer& v, const Rational*) {
  return Rational(v);
}
inline Complex scalar_from_integer(const Integer& v, const Complex*) {
  return Complex(v.get_d(), 0.0);
}

template <class T>
T from_integer(const Integer& v) {
  return scalar_from_integer(v, static_cast<const T*>(nullptr));
}

template <class T>
T from_long(long v) {
  return from_integer<T>(Integer(v));
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

template <class T>
T power(const T& base, unsigned k) {
  T result = from_long<T>(1);
  T b = base;
  while (k != 0) {
    if (k & 1u) result *= b;
    k >>= 1;
    if (k != 0) b *= b;
  }
  return result;
}

}  // namespace hcbim
