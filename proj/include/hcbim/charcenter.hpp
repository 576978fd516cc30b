#pragma once

// Central characters of gl_n from highest weights (Harish-Chandra
// normalization: C_k acts on M_lambda by sum_i lambda_i^k), their
// differences, and the closed-form difference for lambda = mu + e_1 + ... +
// e_r - e_{n-s+1} - ... - e_n.

#include <cstddef>
#include <optional>
#include <vector>

#include "hcbim/rational.hpp"
#include "hcbim/series.hpp"
#include "hcbim/witness.hpp"

namespace hcbim {

template <class T>
struct WeightT {
  std::vector<T> entries;

  std::size_t rank() const { return entries.size(); }

  /// Pairwise-distinct entries, i.e. trivial stabilizer in the Weyl group.
  bool is_generic() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        if (entries[i] == entries[j]) return false;
    return true;
  }

  friend bool operator==(const WeightT&, const WeightT&) = default;
};

using Weight = WeightT<Rational>;

template <class T>
struct CentralCharacterT {
  MomentSequence<T> moments{MomentKind::Character, {}};
  std::optional<WeightT<T>> origin;
  std::optional<std::size_t> rank_tag;
  std::optional<T> t_tag;  // Deligne parameter; carried, never used

  std::size_t order() const { return moments.order(); }
};

using CentralCharacter = CentralCharacterT<Rational>;

/// rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2).
std::vector<Rational> rho(std::size_t n);

template <class T>
CentralCharacterT<T> character_from_weight(const WeightT<T>& lambda, std::size_t K) {
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "moment order K must be positive");
  CentralCharacterT<T> chi;
  chi.moments.values.assign(K, from_long<T>(0));
  for (const T& x : lambda.entries) {
    T p = from_long<T>(1);
    for (std::size_t k = 1; k <= K; ++k) {
      p *= x;
      chi.moments.values[k - 1] += p;
    }
  }
  chi.origin = lambda;
  chi.rank_tag = lambda.rank();
  return chi;
}

template <class T>
MomentSequence<T> character_difference(const CentralCharacterT<T>& chi, const CentralCharacterT<T>& psi) {
  if (chi.order() != psi.order()) {
    throw Error(ErrorCode::OrderMismatch, "characters have different orders (" + std::to_string(chi.order()) +
                                              " vs " + std::to_string(psi.order()) + ")");
  }
  MomentSequence<T> d{MomentKind::Difference, chi.moments.values};
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= psi.moments.values[i];
  return d;
}

struct Lemma9Result {
  MomentSequence<Rational> difference;
  Witness witness;  // reduced, with C-nodes already shifted to mu_j - 1
};

/// d_k = sum_{i<=r} P_k(mu_i) + sum_{j>n-s} Pbar_k(mu_j). Throws RankTooSmall
/// when r + s > n.
Lemma9Result lemma9_difference(const Weight& mu, std::size_t r, std::size_t s, std::size_t K);

/// mu + e_1 + ... + e_r - e_{n-s+1} - ... - e_n
Weight shift_weight(const Weight& mu, std::size_t r, std::size_t s);

}  // namespace hcbim
