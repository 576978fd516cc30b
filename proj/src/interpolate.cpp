#include "hcbim/interpolate.hpp"

#include <algorithm>

#include "hcbim/factor.hpp"

namespace hcbim {

std::vector<Rational> NodeMultiset::power_sums(std::size_t K) const {
  if (roots) {
    std::vector<Rational> out(K, Rational(0));
    for (const auto& x : *roots) {
      Rational p = 1;
      for (std::size_t k = 0; k < K; ++k) {
        p *= x;
        out[k] += p;
      }
    }
    return out;
  }
  return hcbim::power_sums(poly, K);
}

NodeMultiset powersum_complete(std::span<const Rational> targets, std::span<const Rational> fixed) {
  std::vector<Rational> residual(targets.begin(), targets.end());
  for (const auto& v : fixed) {
    Rational p = 1;
    for (auto& r : residual) {
      p *= v;
      r -= p;
    }
  }
  NodeMultiset out;
  out.poly = from_power_sums(residual);
  auto roots = rational_roots(out.poly);
  if (static_cast<int>(roots.size()) == out.poly.degree()) out.roots = std::move(roots);
  return out;
}

std::optional<Weight> FamilyEntry::mu() const {
  if (!completion.roots) return std::nullopt;
  Weight w;
  w.entries = head;
  w.entries.insert(w.entries.end(), completion.roots->begin(), completion.roots->end());
  w.entries.insert(w.entries.end(), tail.begin(), tail.end());
  return w;
}

std::optional<Weight> FamilyEntry::lambda() const {
  auto m = mu();
  if (!m) return std::nullopt;
  return shift_weight(*m, r(), s());
}

namespace {

CentralCharacter character_of_parts(const std::vector<Rational>& explicit_entries, const NodeMultiset& completion,
                                    std::size_t n, std::size_t K) {
  Weight w{explicit_entries};
  CentralCharacter chi = character_from_weight(w, K);
  const auto extra = completion.power_sums(K);
  for (std::size_t k = 0; k < K; ++k) chi.moments.values[k] += extra[k];
  chi.origin.reset();
  chi.rank_tag = n;
  return chi;
}

}  // namespace

CentralCharacter FamilyEntry::mu_character(std::size_t K) const {
  std::vector<Rational> fixed = head;
  fixed.insert(fixed.end(), tail.begin(), tail.end());
  auto chi = character_of_parts(fixed, completion, n, K);
  if (auto m = mu()) chi.origin = *m;
  return chi;
}

CentralCharacter FamilyEntry::lambda_character(std::size_t K) const {
  std::vector<Rational> fixed;
  for (const auto& b : head) fixed.push_back(b + 1);
  for (const auto& c : tail) fixed.push_back(c - 1);
  auto chi = character_of_parts(fixed, completion, n, K);
  if (auto l = lambda()) chi.origin = *l;
  return chi;
}

WeightFamily build_weight_family(const Witness& witness, const CentralCharacter& psi, RankRange ranks) {
  if (!witness.algebraic.empty()) {
    throw Error(ErrorCode::InvalidArgument, "weight families need rational witness nodes");
  }
  if (ranks.first > ranks.last) throw Error(ErrorCode::InvalidArgument, "empty rank range");
  WeightFamily family;
  family.r = witness.B.size();
  family.s = witness.C.size();
  const std::size_t rs = family.r + family.s;
  if (ranks.last > rs && psi.order() < ranks.last - rs) {
    throw Error(ErrorCode::NeedMoreOrders, "psi must be given to order " + std::to_string(ranks.last - rs) +
                                               ", got " + std::to_string(psi.order()));
  }
  std::vector<Rational> B = witness.B, C = witness.C;
  std::sort(B.begin(), B.end());
  std::sort(C.begin(), C.end());
  // mu_{n-j+1} = c_j + 1, so the tail lists c_s+1, ..., c_1+1.
  std::vector<Rational> tail;
  for (auto it = C.rbegin(); it != C.rend(); ++it) tail.push_back(*it + 1);
  std::vector<Rational> fixed = B;
  fixed.insert(fixed.end(), tail.begin(), tail.end());

  for (std::size_t n = std::max(ranks.first, rs + 1); n <= ranks.last; ++n) {
    const std::size_t m = n - rs;
    FamilyEntry e;
    e.n = n;
    e.head = B;
    e.tail = tail;
    e.valid_order = m;
    e.completion = powersum_complete(std::span<const Rational>(psi.moments.values.data(), m), fixed);
    family.entries.push_back(std::move(e));
  }
  return family;
}

FamilyReport verify_weight_family(const WeightFamily& family, const CentralCharacter& chi,
                                  const CentralCharacter& psi) {
  FamilyReport report;
  for (const auto& e : family.entries) {
    const std::size_t K = std::min({chi.order(), psi.order(), e.valid_order});
    if (K == 0) continue;
    const auto lam = e.lambda_character(K);
    const auto mu = e.mu_character(K);
    for (std::size_t k = 1; k <= K; ++k) {
      report.checks += 2;
      if (lam.moments.at(k) != chi.moments.at(k))
        report.violations.push_back({e.n, k, "lambda", chi.moments.at(k), lam.moments.at(k)});
      if (mu.moments.at(k) != psi.moments.at(k))
        report.violations.push_back({e.n, k, "mu", psi.moments.at(k), mu.moments.at(k)});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace hcbim
