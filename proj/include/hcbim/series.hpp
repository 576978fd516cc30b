#pragma once

// Exact and floating-point moment sequences, the shift polynomials
// P_k(b) = (b+1)^k - b^k and Pbar_k(c) = (c-1)^k - c^k, and the two
// exponential-generating-function maps between moment differences d_k and
// Taylor coefficients t_j of g(u) = (sum_k d_k u^k / k!) / (e^u - 1).

#include <cstddef>
#include <span>
#include <vector>

#include "hcbim/error.hpp"
#include "hcbim/rational.hpp"

namespace hcbim {

/// Character sequences carry an implicit index-0 entry of 1, difference
/// sequences an implicit 0. Only indices 1..K are stored.
enum class MomentKind { Character, Difference };

template <class T>
struct MomentSequence {
  MomentKind kind = MomentKind::Difference;
  std::vector<T> values;  // values[k-1] == d_k

  std::size_t order() const { return values.size(); }
  const T& at(std::size_t k) const { return values.at(k - 1); }

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Coefficients t_0..t_{K-1} of g(u) = sum_j t_j u^j / j!.
template <class T>
struct TaylorSeq {
  std::vector<T> coeffs;

  std::size_t size() const { return coeffs.size(); }
  friend bool operator==(const TaylorSeq&, const TaylorSeq&) = default;
};

template <class T>
T pk_eval(unsigned k, const T& b) {
  const T one = from_long<T>(1);
  return T(power<T>(T(b + one), k) - power<T>(b, k));
}

template <class T>
T pbar_eval(unsigned k, const T& c) {
  const T one = from_long<T>(1);
  return T(power<T>(T(c - one), k) - power<T>(c, k));
}

/// d_k = sum_{b in B} P_k(b) - sum_{c in C} P_k(c), k = 1..K.
template <class T>
MomentSequence<T> moments_from_witness(std::span<const T> B, std::span<const T> C, std::size_t K) {
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "moment order K must be positive");
  MomentSequence<T> d{MomentKind::Difference, std::vector<T>(K, from_long<T>(0))};
  for (std::size_t k = 1; k <= K; ++k) {
    T acc = from_long<T>(0);
    for (const T& b : B) acc += pk_eval<T>(static_cast<unsigned>(k), b);
    for (const T& c : C) acc -= pk_eval<T>(static_cast<unsigned>(k), c);
    d.values[k - 1] = acc;
  }
  return d;
}

/// Solves d_k = sum_{j<k} binom(k, j) t_j for t_0..t_{K-1}. The recurrence
/// always has a unique solution; on the exact path every step is an exact
/// rational division by k.
template <class T>
TaylorSeq<T> divide_by_expm1(const MomentSequence<T>& d) {
  if (d.kind != MomentKind::Difference) {
    throw Error(ErrorCode::InvalidArgument, "divide_by_expm1 needs a difference sequence (implicit d_0 = 0)");
  }
  const std::size_t K = d.order();
  TaylorSeq<T> t{std::vector<T>(K, from_long<T>(0))};
  for (std::size_t k = 1; k <= K; ++k) {
    const auto row = binomial_row(static_cast<unsigned>(k));
    T acc = d.values[k - 1];
    for (std::size_t j = 0; j + 1 < k; ++j) acc -= from_integer<T>(row[j]) * t.coeffs[j];
    t.coeffs[k - 1] = acc / from_long<T>(static_cast<long>(k));
  }
  return t;
}

/// Inverse of divide_by_expm1: d_k = sum_{j<k} binom(k, j) t_j.
template <class T>
MomentSequence<T> multiply_by_expm1(const TaylorSeq<T>& t) {
  const std::size_t K = t.size();
  MomentSequence<T> d{MomentKind::Difference, std::vector<T>(K, from_long<T>(0))};
  for (std::size_t k = 1; k <= K; ++k) {
    const auto row = binomial_row(static_cast<unsigned>(k));
    T acc = from_long<T>(0);
    for (std::size_t j = 0; j < k; ++j) acc += from_integer<T>(row[j]) * t.coeffs[j];
    d.values[k - 1] = acc;
  }
  return d;
}

template <class T>
MomentSequence<T> operator+(const MomentSequence<T>& a, const MomentSequence<T>& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "moment sequences differ in order");
  MomentSequence<T> out{a.kind == b.kind && a.kind == MomentKind::Difference ? MomentKind::Difference
                                                                              : MomentKind::Character,
                        a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

/// Converts an exact sequence to the floating-point path.
MomentSequence<Complex> to_approx(const MomentSequence<Rational>& d);
TaylorSeq<Complex> to_approx(const TaylorSeq<Rational>& t);

}  // namespace hcbim
