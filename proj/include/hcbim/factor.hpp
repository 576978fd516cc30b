#pragma once

#include <vector>

#include "hcbim/poly.hpp"

namespace hcbim {

struct PolyFactor {
  QPoly poly;  // monic, irreducible over Q
  int multiplicity = 1;

  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization over Q into monic irreducibles, sorted by degree
/// and then coefficients. Constants factor as the empty list.
std::vector<PolyFactor> factor_rational(const QPoly& p);

/// Monic irreducible factors of a square-free polynomial.
std::vector<QPoly> factor_square_free(const QPoly& p);

/// Yun's algorithm: returns (a_i, i) with p = lc * prod a_i^i, a_i square-free
/// and pairwise coprime. Entries with constant a_i are omitted.
std::vector<PolyFactor> square_free_decomposition(const QPoly& p);

/// Rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace hcbim
