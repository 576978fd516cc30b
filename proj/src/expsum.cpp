#include "hcbim/expsum.hpp"

#include <algorithm>

#include "hcbim/factor.hpp"
#include "hcbim/matrix.hpp"

namespace hcbim {

const char* to_string(DecisionStatus s) {
  switch (s) {
    case DecisionStatus::NonzeroWitness: return "NONZERO_WITNESS";
    case DecisionStatus::NoWitnessWithinBound: return "NO_WITNESS_WITHIN_BOUND";
    case DecisionStatus::NotExponentialForm: return "NOT_EXPONENTIAL_FORM";
    case DecisionStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

QPoly minimal_recurrence(const std::vector<Rational>& seq) {
  std::vector<Rational> C{Rational(1)}, B{Rational(1)};
  std::size_t L = 0, m = 1;
  Rational b = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational disc = seq[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc += C[i] * seq[n - i];
    if (sgn(disc) == 0) {
      ++m;
      continue;
    }
    const Rational coef = disc / b;
    std::vector<Rational> next = C;
    if (next.size() < B.size() + m) next.resize(B.size() + m, Rational(0));
    for (std::size_t i = 0; i < B.size(); ++i) next[i + m] -= coef * B[i];
    if (2 * L <= n) {
      B = C;
      L = n + 1 - L;
      b = disc;
      m = 1;
    } else {
      ++m;
    }
    C = std::move(next);
  }
  C.resize(L + 1, Rational(0));
  // q(z) = z^L C(1/z)
  std::vector<Rational> q(L + 1);
  for (std::size_t i = 0; i <= L; ++i) q[L - i] = C[i];
  return QPoly(std::move(q));
}

namespace {

bool annihilates(const QPoly& q, const std::vector<Rational>& t) {
  const std::size_t rho = static_cast<std::size_t>(q.degree());
  for (std::size_t m = 0; m + rho < t.size(); ++m) {
    Rational acc = 0;
    for (std::size_t a = 0; a <= rho; ++a) acc += q.coeff(a) * t[m + a];
    if (sgn(acc) != 0) return false;
  }
  return true;
}

}  // namespace

PronyKernel hankel_rank_and_recurrence(const TaylorSeq<Rational>& t, std::size_t L) {
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "node bound L must be positive");
  if (t.size() < 2 * L) {
    throw Error(ErrorCode::NeedMoreOrders, "need at least " + std::to_string(2 * L) + " Taylor coefficients, got " +
                                               std::to_string(t.size()));
  }
  PronyKernel k;
  const std::size_t N = t.size();
  for (std::size_t size = 1; size <= L + 1 && 2 * size - 1 <= N; ++size) {
    RationalMatrix H(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) H(i, j) = t.coeffs[i + j];
    k.rank_profile.push_back(H.rank());
  }
  const QPoly q = minimal_recurrence(t.coeffs);
  k.rank = static_cast<std::size_t>(q.degree());
  k.exceeds_bound = k.rank > L;
  if (!k.exceeds_bound) {
    if (!annihilates(q, t.coeffs)) throw Error(ErrorCode::InvalidArgument, "internal: recurrence does not annihilate input");
    k.q = q;
    k.square_free = is_square_free(q);
  }
  return k;
}

std::size_t ExponentialPolynomial::node_count() const {
  std::size_t n = 0;
  for (const auto& term : terms) n += static_cast<std::size_t>(term.factor.degree());
  return n;
}

TaylorSeq<Rational> ExponentialPolynomial::taylor(std::size_t count) const {
  TaylorSeq<Rational> t{std::vector<Rational>(count, Rational(0))};
  for (const auto& term : terms) {
    if (count == 0) break;
    t.coeffs[0] += Rational(term.weight * term.factor.degree());
    const auto sums = power_sums(term.factor, count - 1);
    for (std::size_t j = 1; j < count; ++j) t.coeffs[j] += sums[j - 1] * term.weight;
  }
  return t;
}

ExponentialPolynomial recover_exponential_polynomial(const TaylorSeq<Rational>& t, std::size_t L) {
  const PronyKernel kernel = hankel_rank_and_recurrence(t, L);
  if (kernel.exceeds_bound) {
    throw Error(ErrorCode::RankExceedsBound,
                "minimal recurrence has order " + std::to_string(kernel.rank) + " > " + std::to_string(L));
  }
  if (!kernel.square_free) {
    throw Error(ErrorCode::NotPureExponential,
                "characteristic polynomial " + kernel.q.to_string() + " has a repeated root");
  }
  ExponentialPolynomial ep;
  const QPoly& q = kernel.q;
  const std::size_t rho = kernel.rank;
  if (rho == 0) return ep;

  // sum_j t_j y^{-j-1} = S(y) / q(y), so the weight at a root x is S(x) / q'(x).
  std::vector<Rational> s(rho, Rational(0));
  for (std::size_t k = 1; k <= rho; ++k)
    for (std::size_t j = 0; j < k; ++j) s[k - 1 - j] += q.coeff(k) * t.coeffs[j];
  const QPoly S(std::move(s));
  const QPoly dq = q.derivative();

  for (QPoly& f : factor_square_free(q)) {
    const QPoly w = (S % f) * inverse_mod(dq % f, f) % f;
    if (w.degree() > 0) {
      throw Error(ErrorCode::NonIntegerWeight, "weight is not constant on the roots of " + f.to_string());
    }
    const Rational m = w.coeff(0);
    if (m.get_den() != 1) {
      throw Error(ErrorCode::NonIntegerWeight,
                  "roots of " + f.to_string() + " carry weight " + to_string(m));
    }
    if (sgn(m) == 0) throw Error(ErrorCode::InvalidArgument, "internal: zero weight on a minimal recurrence root");
    if (!((S - dq * m) % f).is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "internal: weight congruence failed for " + f.to_string());
    }
    ep.terms.push_back({std::move(f), m.get_num().get_si()});
  }
  std::sort(ep.terms.begin(), ep.terms.end(),
            [](const ExponentialTerm& a, const ExponentialTerm& b) { return a.factor < b.factor; });
  if (ep.taylor(t.size()) != t) {
    throw Error(ErrorCode::InvalidArgument, "internal: reconstruction does not reproduce the input");
  }
  return ep;
}

Witness witness_from_exponential_polynomial(const ExponentialPolynomial& ep) {
  Witness w;
  for (const auto& term : ep.terms) {
    if (term.factor.degree() == 1) {
      const Rational node = -term.factor.coeff(0);
      auto& target = term.weight > 0 ? w.B : w.C;
      for (long i = 0; i < std::abs(term.weight); ++i) target.push_back(node);
    } else {
      w.algebraic.push_back({term.factor, term.weight});
    }
  }
  w.reduce();
  return w;
}

Decision decide_nonvanishing(const CentralCharacter& chi, const CentralCharacter& psi, std::size_t L) {
  return decide_difference(character_difference(chi, psi), L);
}

Decision decide_difference(const MomentSequence<Rational>& d, std::size_t L) {
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "node bound L must be positive");
  Decision dec;
  dec.supplied_order = d.order();
  dec.max_nodes = L;
  if (d.order() < 2 * L + 1) {
    dec.status = DecisionStatus::Inconclusive;
    dec.detail = "need at least 2L+1 = " + std::to_string(2 * L + 1) + " moments, got " + std::to_string(d.order());
    return dec;
  }
  const TaylorSeq<Rational> t = divide_by_expm1(d);
  const PronyKernel kernel = hankel_rank_and_recurrence(t, L);
  dec.rank = kernel.rank;
  dec.rank_profile = kernel.rank_profile;
  if (kernel.exceeds_bound) {
    dec.status = DecisionStatus::NoWitnessWithinBound;
    dec.detail = "minimal recurrence order " + std::to_string(kernel.rank) + " exceeds L = " + std::to_string(L);
    return dec;
  }
  try {
    Witness w = witness_from_exponential_polynomial(recover_exponential_polynomial(t, L));
    if (moments_from_witness(w, d.order()) != d) {
      throw Error(ErrorCode::InvalidArgument, "internal: witness does not reproduce the moments");
    }
    dec.status = DecisionStatus::NonzeroWitness;
    dec.verified_order = d.order();
    dec.witness = std::move(w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPureExponential && e.code() != ErrorCode::NonIntegerWeight) throw;
    dec.status = DecisionStatus::NotExponentialForm;
    dec.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  return dec;
}

}  // namespace hcbim
