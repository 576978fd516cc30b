#pragma once

// Truncated Verma modules M_lambda (highest weight lambda - rho) and the
// tensor products M_lambda (x) V, M_lambda (x) V*. A basis vector is a
// lowering PBW monomial applied to the highest-weight vector, optionally
// paired with a basis vector v_k (or v*_k) of the second factor.
//
// Truncation is by height: the lowering monomial prod E_ij^{a_ij} (i > j)
// has height sum a_ij (i - j), which is the height of its weight deficit.
// Keeping whole weight spaces makes every weight-preserving operator act
// exactly on the truncation.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hcbim/charcenter.hpp"
#include "hcbim/matrix.hpp"
#include "hcbim/uea.hpp"

namespace hcbim {

enum class TensorFactor { None, V, VDual };

const char* to_string(TensorFactor f);

struct BasisLabel {
  Monomial lowering;        // full-length exponent vector, lowering entries only
  std::size_t factor = 0;   // 1-based index of v_k / v*_k; 0 when there is no factor

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

using ModuleVector = std::map<BasisLabel, Rational>;

struct VermaBlock {
  WeightVector deficit;         // top weight minus block weight
  std::vector<Rational> weight;  // absolute weight of the block
  std::vector<BasisLabel> basis;
  RationalMatrix matrix;
};

struct BlockOperator {
  std::size_t n = 0;
  std::size_t depth = 0;
  TensorFactor factor = TensorFactor::None;
  bool block_diagonal = true;
  std::vector<VermaBlock> blocks;  // filled when block_diagonal
  // Otherwise the matrix on the whole truncation; coordinates leaving the
  // truncation are dropped.
  std::vector<BasisLabel> full_basis;
  RationalMatrix full;
};

class VermaModule {
 public:
  VermaModule(GlAlgebra& algebra, const Weight& lambda);

  std::size_t rank() const { return algebra_.rank(); }
  const Weight& lambda() const { return lambda_; }
  /// lambda - rho
  const std::vector<Rational>& top() const { return top_; }

  WeightVector deficit(const Monomial& lowering) const;
  static long height(const WeightVector& deficit);

  /// Lowering monomials of height <= depth, ordered by (height, deficit, exponents).
  std::vector<Monomial> basis(std::size_t depth) const;
  /// Number of lowering monomials with the given deficit (Kostant partition function).
  std::size_t kostant(const WeightVector& deficit) const;

  /// x . (m v), with m a lowering monomial.
  ModuleVector act(const UEAElement& x, const Monomial& m);
  ModuleVector act(const UEAElement& x, const ModuleVector& v);
  /// E_g . (m v) for a generator index g; memoized.
  const ModuleVector& act_generator(std::size_t g, const Monomial& m);

  GlAlgebra& algebra() { return algebra_; }

 private:
  ModuleVector on_highest_weight(const UEAElement& y) const;

  GlAlgebra& algebra_;
  Weight lambda_;
  std::vector<Rational> top_;
  std::vector<std::size_t> lowering_;  // generator indices of E_ij, i > j
  std::map<std::pair<std::size_t, Monomial>, ModuleVector> memo_;
};

/// Matrix of x on the height-<=D truncation of M_lambda. Weight-preserving x
/// gives blocks; anything else gives the flagged full matrix.
BlockOperator verma_action(GlAlgebra& algebra, const Weight& lambda, std::size_t depth, const UEAElement& x);
BlockOperator verma_action(const Weight& lambda, std::size_t depth, const UEAElement& x);

/// Delta(C_2) - C_2 (x) 1 on the truncation of M_lambda (x) V or M_lambda (x) V*.
BlockOperator tensor_casimir_difference(GlAlgebra& algebra, const Weight& lambda, std::size_t depth,
                                        TensorFactor factor);

/// V:  1/2 (Delta(C_2) - C_2 (x) 1 - 1)
/// V*: -1/2 (Delta(C_2) - C_2 (x) 1 - 1)
BlockOperator omega_operator(GlAlgebra& algebra, const Weight& lambda, std::size_t depth, TensorFactor factor);
BlockOperator omega_operator(const Weight& lambda, std::size_t depth, TensorFactor factor);

struct BlockCheck {
  WeightVector deficit;
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;  // sum of weight multiplicities of the summands
  bool annihilated = false;            // prod_l (Omega - lambda_l) == 0
  bool shift_identity = false;         // Delta(C_2) - C_2 (x) 1 == P_2(Omega) or Pbar_2(Omega)
  Rational trace;
  Rational expected_trace;
  std::vector<Rational> eigenvalues;   // lambda_l whose summand meets this block

  bool passed() const {
    return annihilated && shift_identity && trace == expected_trace && dimension == expected_dimension;
  }
};

struct OracleReport {
  std::string check;
  Weight lambda;
  std::size_t depth = 0;
  TensorFactor factor = TensorFactor::None;
  bool passed = false;
  std::vector<Rational> eigenvalues;  // descending
  std::vector<BlockCheck> blocks;
  // casimir check only
  Rational expected_scalar;
  std::vector<Generator> noncommuting;
  std::size_t non_scalar_blocks = 0;
};

/// NonGenericWeight when lambda has a repeated entry.
OracleReport omega_spectrum_check(GlAlgebra& algebra, const Weight& lambda, std::size_t depth, TensorFactor factor);
OracleReport omega_spectrum_check(const Weight& lambda, std::size_t depth, TensorFactor factor);

/// casimir2 commutes with every generator and acts as sum lambda_i^2 on the truncation.
OracleReport casimir_check(GlAlgebra& algebra, const Weight& lambda, std::size_t depth);
OracleReport casimir_check(const Weight& lambda, std::size_t depth);

}  // namespace hcbim
