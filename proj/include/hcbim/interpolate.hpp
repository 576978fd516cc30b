#pragma once

// Finite-rank realizations of a pair (chi, psi) whose difference has a
// witness: for each n > r + s, weights mu^(n) = (b_1..b_r, a_1..a_m,
// c_s+1..c_1+1) with the a_i completing the power sums of psi, and
// lambda^(n) = mu^(n) + e_1 + ... + e_r - e_{n-s+1} - ... - e_n.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcbim/charcenter.hpp"
#include "hcbim/poly.hpp"
#include "hcbim/witness.hpp"

namespace hcbim {

/// Root multiset of a monic polynomial. The roots are listed only when the
/// polynomial splits over Q; otherwise the multiset is symbolic and all
/// power sums come from Newton's identities on the coefficients.
struct NodeMultiset {
  QPoly poly = QPoly::constant(1);
  std::optional<std::vector<Rational>> roots;

  std::size_t size() const { return static_cast<std::size_t>(poly.degree()); }
  std::vector<Rational> power_sums(std::size_t K) const;
};

/// Solves p_k(x_1..x_m) = targets_k - sum_{v in fixed} v^k for k = 1..m.
NodeMultiset powersum_complete(std::span<const Rational> targets, std::span<const Rational> fixed);

struct FamilyEntry {
  std::size_t n = 0;
  std::vector<Rational> head;  // b_1..b_r
  NodeMultiset completion;     // a_1..a_m, m = n - r - s
  std::vector<Rational> tail;  // c_s+1, ..., c_1+1
  std::size_t valid_order = 0;

  std::size_t r() const { return head.size(); }
  std::size_t s() const { return tail.size(); }

  /// Explicit weights, available when the completion splits over Q.
  std::optional<Weight> mu() const;
  std::optional<Weight> lambda() const;

  /// sum_i mu_i^k and sum_i lambda_i^k for k = 1..K, exact even when the
  /// completion is symbolic.
  CentralCharacter mu_character(std::size_t K) const;
  CentralCharacter lambda_character(std::size_t K) const;
};

struct WeightFamily {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<FamilyEntry> entries;
};

/// Inclusive rank interval.
struct RankRange {
  std::size_t first = 1;
  std::size_t last = 1;
};

/// Throws NeedMoreOrders when psi is too short for the top of the range and
/// InvalidArgument for witnesses with irrational node classes.
WeightFamily build_weight_family(const Witness& witness, const CentralCharacter& psi, RankRange ranks);

struct FamilyViolation {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string which;  // "lambda" or "mu"
  Rational expected;
  Rational actual;
};

struct FamilyReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<FamilyViolation> violations;
};

/// For every entry and every k <= min(K, n - r - s): power sums of lambda^(n)
/// equal chi_k and those of mu^(n) equal psi_k.
FamilyReport verify_weight_family(const WeightFamily& family, const CentralCharacter& chi,
                                  const CentralCharacter& psi);

}  // namespace hcbim
