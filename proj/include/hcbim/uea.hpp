#pragma once

// U(gl_n) in the PBW basis. Generators E_ij are ordered: strictly lower
// (i > j), then diagonal, then strictly upper (i < j), each block
// lexicographic in (i, j). A normal monomial is an exponent vector over that
// order; [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcbim/rational.hpp"

namespace hcbim {

struct Generator {
  std::size_t i = 1;  // 1-based row
  std::size_t j = 1;  // 1-based column

  friend bool operator==(const Generator&, const Generator&) = default;
};

using Monomial = std::vector<std::uint16_t>;

struct UEAElement {
  std::size_t n = 0;
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rational& s);

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const UEAElement&, const UEAElement&) = default;
};

class GlAlgebra {
 public:
  explicit GlAlgebra(std::size_t n);

  std::size_t rank() const { return n_; }
  std::size_t generator_count() const { return n_ * n_; }

  /// Position of E_ij in the PBW order; InvalidGenerator when out of range.
  std::size_t index(Generator g) const;
  Generator generator(std::size_t index) const { return order_.at(index); }
  bool is_lowering(std::size_t index) const { return order_.at(index).i > order_.at(index).j; }
  bool is_raising(std::size_t index) const { return order_.at(index).i < order_.at(index).j; }

  UEAElement one() const;
  UEAElement element(Generator g) const;

  /// Normal form of the product of the given generators.
  UEAElement straighten(std::span<const Generator> word);
  UEAElement multiply(const UEAElement& a, const UEAElement& b);
  UEAElement commutator(const UEAElement& a, const UEAElement& b);

  /// sum_{i,j} E_ij E_ji + <rho, rho>, acting on M_lambda by sum_i lambda_i^2.
  UEAElement casimir2();

  /// Generator indices of a normal monomial, in order.
  std::vector<std::size_t> word_of(const Monomial& m) const;
  std::string to_string(const UEAElement& x) const;

  /// Right multiplication of an element by a single generator.
  UEAElement multiply_generator(const UEAElement& x, std::size_t g);

 private:
  const UEAElement& monomial_times_generator(const Monomial& m, std::size_t g);
  /// [E_a, E_b] as (generator index, coefficient) pairs.
  std::vector<std::pair<std::size_t, long>> bracket(std::size_t a, std::size_t b) const;

  std::size_t n_;
  std::vector<Generator> order_;
  std::vector<std::size_t> index_of_;  // (i-1)*n + (j-1) -> position
  std::map<std::pair<Monomial, std::size_t>, UEAElement> memo_;
};

enum class RewriteOrder { Leftmost, Rightmost };

/// Independent reference: rewrites words by swapping the leftmost (or
/// rightmost) out-of-order adjacent pair until every word is sorted. No
/// memoization, exponential in the worst case; meant for cross-checks.
UEAElement straighten_by_rewriting(std::size_t n, std::span<const Generator> word, RewriteOrder order);

using WeightVector = std::vector<long>;
using WeightMultiset = std::map<WeightVector, std::size_t>;

/// Weights of S^r V (x) S^s V* for gl_n with multiplicities.
WeightMultiset tensor_weight_multiset(std::size_t n, std::size_t r, std::size_t s);

/// a >= b in dominance order (partial sums of a - b non-negative, equal totals).
bool dominates(const WeightVector& a, const WeightVector& b);

/// True iff lambda - mu equals r e_1 - s e_n, the maximal weight of
/// S^r V (x) S^s V*, and is dominant. RankMismatch when ranks differ,
/// InvalidArgument for non-integral differences.
bool witness_weight_check(const std::vector<Rational>& lambda, const std::vector<Rational>& mu, std::size_t r,
                          std::size_t s);

}  // namespace hcbim
