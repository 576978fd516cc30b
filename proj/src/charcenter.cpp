#include "hcbim/charcenter.hpp"

namespace hcbim {

std::vector<Rational> rho(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.emplace_back(static_cast<long>(n + 1) - 2 * static_cast<long>(i), 2);
    out.back().canonicalize();
  }
  return out;
}

Weight shift_weight(const Weight& mu, std::size_t r, std::size_t s) {
  const std::size_t n = mu.rank();
  if (r + s > n) {
    throw Error(ErrorCode::RankTooSmall, "r + s = " + std::to_string(r + s) + " exceeds rank " + std::to_string(n));
  }
  Weight lambda = mu;
  for (std::size_t i = 0; i < r; ++i) lambda.entries[i] += 1;
  for (std::size_t j = n - s; j < n; ++j) lambda.entries[j] -= 1;
  return lambda;
}

Lemma9Result lemma9_difference(const Weight& mu, std::size_t r, std::size_t s, std::size_t K) {
  const std::size_t n = mu.rank();
  if (r + s > n) {
    throw Error(ErrorCode::RankTooSmall, "r + s = " + std::to_string(r + s) + " exceeds rank " + std::to_string(n));
  }
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "moment order K must be positive");
  Lemma9Result out;
  out.difference = MomentSequence<Rational>{MomentKind::Difference, std::vector<Rational>(K, Rational(0))};
  for (std::size_t k = 1; k <= K; ++k) {
    Rational acc = 0;
    for (std::size_t i = 0; i < r; ++i) acc += pk_eval<Rational>(static_cast<unsigned>(k), mu.entries[i]);
    for (std::size_t j = n - s; j < n; ++j) acc += pbar_eval<Rational>(static_cast<unsigned>(k), mu.entries[j]);
    out.difference.values[k - 1] = acc;
  }
  out.witness.B.assign(mu.entries.begin(), mu.entries.begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t j = n - s; j < n; ++j) out.witness.C.push_back(mu.entries[j] - 1);
  out.witness.reduce();
  return out;
}

}  // namespace hcbim
