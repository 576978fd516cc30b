#include "hcbim/witness.hpp"

#include <algorithm>

namespace hcbim {

std::size_t Witness::r() const {
  std::size_t n = B.size();
  for (const auto& a : algebraic)
    if (a.weight > 0) n += static_cast<std::size_t>(a.weight) * static_cast<std::size_t>(a.minimal_poly.degree());
  return n;
}

std::size_t Witness::s() const {
  std::size_t n = C.size();
  for (const auto& a : algebraic)
    if (a.weight < 0) n += static_cast<std::size_t>(-a.weight) * static_cast<std::size_t>(a.minimal_poly.degree());
  return n;
}

void Witness::reduce() {
  std::sort(B.begin(), B.end());
  std::sort(C.begin(), C.end());
  std::vector<Rational> b, c;
  std::size_t i = 0, j = 0;
  while (i < B.size() || j < C.size()) {
    if (j == C.size() || (i < B.size() && B[i] < C[j])) {
      b.push_back(B[i++]);
    } else if (i == B.size() || C[j] < B[i]) {
      c.push_back(C[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  B = std::move(b);
  C = std::move(c);
  std::sort(algebraic.begin(), algebraic.end(),
            [](const AlgebraicNodeClass& x, const AlgebraicNodeClass& y) { return x.minimal_poly < y.minimal_poly; });
  // Merge classes sharing a minimal polynomial.
  std::vector<AlgebraicNodeClass> merged;
  for (auto& a : algebraic) {
    if (!merged.empty() && merged.back().minimal_poly == a.minimal_poly) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }
  std::erase_if(merged, [](const AlgebraicNodeClass& a) { return a.weight == 0; });
  algebraic = std::move(merged);
}

TaylorSeq<Rational> Witness::taylor(std::size_t count) const {
  TaylorSeq<Rational> t{std::vector<Rational>(count, Rational(0))};
  for (std::size_t j = 0; j < count; ++j) {
    Rational acc = 0;
    for (const auto& b : B) acc += power<Rational>(b, static_cast<unsigned>(j));
    for (const auto& c : C) acc -= power<Rational>(c, static_cast<unsigned>(j));
    t.coeffs[j] = acc;
  }
  for (const auto& a : algebraic) {
    const auto sums = power_sums(a.minimal_poly, count == 0 ? 0 : count - 1);
    if (count > 0) t.coeffs[0] += Rational(a.weight * a.minimal_poly.degree());
    for (std::size_t j = 1; j < count; ++j) t.coeffs[j] += sums[j - 1] * a.weight;
  }
  return t;
}

MomentSequence<Rational> moments_from_witness(const Witness& w, std::size_t K) {
  auto d = moments_from_witness<Rational>(std::span<const Rational>(w.B), std::span<const Rational>(w.C), K);
  if (!w.algebraic.empty()) {
    Witness alg;
    alg.algebraic = w.algebraic;
    const auto extra = multiply_by_expm1(alg.taylor(K));
    for (std::size_t k = 0; k < K; ++k) d.values[k] += extra.values[k];
  }
  return d;
}

}  // namespace hcbim
