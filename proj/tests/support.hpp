#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcbim/rational.hpp"

namespace testing {

using hcbim::Rational;

inline Rational q(const char* s) { return hcbim::parse_rational(s); }
inline Rational q(long v) { return Rational(v); }
inline Rational q(int v) { return Rational(v); }

inline std::vector<Rational> qs(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }

  /// Numerator in [-bound, bound], denominator in [1, bound].
  Rational rational(long bound) {
    Rational x(integer(-bound, bound), integer(1, bound));
    x.canonicalize();
    return x;
  }

  std::vector<Rational> rationals(std::size_t count, long bound) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(rational(bound));
    return out;
  }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace testing
