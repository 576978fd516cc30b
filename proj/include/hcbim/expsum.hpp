#pragma once

// Decision procedure for "chi(u) - psi(u) is a signed integer exponential
// polynomial": divide the moment difference by (e^u - 1), find the minimal
// linear recurrence of the resulting power sums t_j = sum n_x x^j, factor its
// characteristic polynomial over Q and read off one integer weight per
// irreducible factor.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcbim/charcenter.hpp"
#include "hcbim/poly.hpp"
#include "hcbim/series.hpp"
#include "hcbim/witness.hpp"

namespace hcbim {

struct PronyKernel {
  /// Linear complexity of the whole input sequence.
  std::size_t rank = 0;
  bool exceeds_bound = false;
  /// Monic characteristic polynomial of the minimal recurrence,
  /// sum_a q_a t_{m+a} = 0. Meaningful only when !exceeds_bound.
  QPoly q;
  bool square_free = true;
  /// Ranks of the leading Hankel matrices H_1, H_2, ... up to H_{L+1} (as far
  /// as the data reaches). Computed by elimination, independently of q.
  std::vector<std::size_t> rank_profile;
};

/// Requires t.size() >= 2L, else NeedMoreOrders.
PronyKernel hankel_rank_and_recurrence(const TaylorSeq<Rational>& t, std::size_t L);

/// Berlekamp-Massey over Q: minimal connection polynomial as a monic
/// characteristic polynomial of degree equal to the linear complexity.
QPoly minimal_recurrence(const std::vector<Rational>& seq);

struct ExponentialTerm {
  QPoly factor;  // monic irreducible over Q
  long weight = 0;

  friend bool operator==(const ExponentialTerm&, const ExponentialTerm&) = default;
};

struct ExponentialPolynomial {
  std::vector<ExponentialTerm> terms;  // sorted by factor

  std::size_t node_count() const;
  TaylorSeq<Rational> taylor(std::size_t count) const;
};

struct ApproxExponentialTerm {
  Complex node;
  long weight = 0;
};

struct ApproxExponentialPolynomial {
  std::vector<ApproxExponentialTerm> terms;  // sorted by (re, im)
  double residual = 0.0;                     // max relative misfit over the input
};

/// Exact reconstruction. Throws RankExceedsBound, NotPureExponential (repeated
/// recurrence root) or NonIntegerWeight.
ExponentialPolynomial recover_exponential_polynomial(const TaylorSeq<Rational>& t, std::size_t L);

/// Floating-point reconstruction: roots of the least-squares recurrence,
/// Vandermonde weights rounded to integers, Gauss-Newton polishing of the
/// nodes, accepted when the relative residual is within tol.
ApproxExponentialPolynomial recover_exponential_polynomial(const TaylorSeq<Complex>& t, std::size_t L,
                                                           const Tolerance& tol);

Witness witness_from_exponential_polynomial(const ExponentialPolynomial& ep);
ApproxWitness witness_from_exponential_polynomial(const ApproxExponentialPolynomial& ep);

enum class DecisionStatus { NonzeroWitness, NoWitnessWithinBound, NotExponentialForm, Inconclusive };

const char* to_string(DecisionStatus s);

struct Decision {
  DecisionStatus status = DecisionStatus::Inconclusive;
  std::optional<Witness> witness;
  std::optional<ApproxWitness> approx_witness;
  std::size_t rank = 0;
  std::vector<std::size_t> rank_profile;
  /// Number of supplied moments the witness was checked against. The
  /// criterion itself quantifies over all orders; this is what was verified.
  std::size_t verified_order = 0;
  std::size_t supplied_order = 0;
  std::size_t max_nodes = 0;
  std::string detail;
};

Decision decide_nonvanishing(const CentralCharacter& chi, const CentralCharacter& psi, std::size_t L);
Decision decide_difference(const MomentSequence<Rational>& d, std::size_t L);
Decision decide_difference(const MomentSequence<Complex>& d, std::size_t L, const Tolerance& tol);

}  // namespace hcbim
