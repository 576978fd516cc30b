#pragma once

#include <cstddef>
#include <vector>

#include "hcbim/poly.hpp"
#include "hcbim/rational.hpp"
#include "hcbim/series.hpp"

namespace hcbim {

/// All roots of an irreducible polynomial of degree >= 2 taken with the
/// same integer weight. Positive weights contribute to B, negative to C.
struct AlgebraicNodeClass {
  QPoly minimal_poly;
  long weight = 0;

  friend bool operator==(const AlgebraicNodeClass&, const AlgebraicNodeClass&) = default;
};

/// Exact witness: chi(u) - psi(u) = sum_B e^{bu} - sum_C e^{cu}, plus the
/// irrational node classes that cannot be listed as rationals.
struct Witness {
  std::vector<Rational> B;
  std::vector<Rational> C;
  std::vector<AlgebraicNodeClass> algebraic;

  std::size_t r() const;
  std::size_t s() const;
  bool empty() const { return B.empty() && C.empty() && algebraic.empty(); }

  /// Sorts B and C and cancels common nodes pairwise.
  void reduce();
  /// Signed power sums t_j = sum n_x x^j for j = 0..count-1.
  TaylorSeq<Rational> taylor(std::size_t count) const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ApproxWitness {
  std::vector<Complex> B;
  std::vector<Complex> C;

  std::size_t r() const { return B.size(); }
  std::size_t s() const { return C.size(); }
};

/// d_k for 1 <= k <= K. Rational nodes go through P_k directly; algebraic
/// classes through Newton power sums and multiply_by_expm1.
MomentSequence<Rational> moments_from_witness(const Witness& w, std::size_t K);

}  // namespace hcbim
