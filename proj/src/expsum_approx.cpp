#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hcbim/expsum.hpp"

namespace hcbim {
namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Fit {
  std::vector<Complex> nodes;
  std::vector<long> weights;
  double residual = 0.0;
  CVector unrounded;
  double unrounded_residual = 0.0;
  bool zero_weight = false;
};

// Componentwise backward error. Each t_j is measured against the size of
// the terms that produce it, sum |w_i| |x_i|^j, not only against |t_j|:
// large nodes of opposite sign cancel in t_j, and rounding in double scales
// with the terms rather than with their sum.
double relative_residual(const std::vector<Complex>& t, const std::vector<Complex>& nodes, const CVector& weights) {
  double worst = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    Complex acc = 0.0;
    double magnitude = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Complex term = weights(static_cast<Eigen::Index>(i)) * std::pow(nodes[i], static_cast<int>(j));
      acc += term;
      magnitude += std::abs(term);
    }
    worst = std::max(worst, std::abs(acc - t[j]) / std::max({1.0, std::abs(t[j]), magnitude}));
  }
  return worst;
}

std::vector<Complex> companion_roots(const CVector& q) {
  // z^rho + q_{rho-1} z^{rho-1} + ... + q_0
  const Eigen::Index rho = q.size();
  CMatrix comp = CMatrix::Zero(rho, rho);
  for (Eigen::Index i = 1; i < rho; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < rho; ++i) comp(i, rho - 1) = -q(i);
  Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + rho);
  return roots;
}

// One fit at a fixed rank; row j of every least-squares problem is divided
// by scale(j).
Fit fit_rank(const std::vector<Complex>& t, std::size_t rho, const Eigen::VectorXd& scale) {
  const std::size_t N = t.size();

  // Recurrence coefficients by least squares over every available window.
  const std::size_t rows = N - rho;
  CMatrix A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rho));
  CVector rhs(static_cast<Eigen::Index>(rows));
  for (std::size_t m = 0; m < rows; ++m) {
    const double w = 1.0 / scale(static_cast<Eigen::Index>(m + rho));
    for (std::size_t a = 0; a < rho; ++a) A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(a)) = t[m + a] * w;
    rhs(static_cast<Eigen::Index>(m)) = -t[m + rho] * w;
  }
  Eigen::VectorXd colscale = A.colwise().norm().transpose();
  for (Eigen::Index a = 0; a < colscale.size(); ++a)
    if (colscale(a) == 0.0) colscale(a) = 1.0;
  CMatrix As = A * colscale.cwiseInverse().asDiagonal();
  CVector q = As.completeOrthogonalDecomposition().solve(rhs);
  q = q.cwiseQuotient(colscale.cast<Complex>());

  Fit fit;
  fit.nodes = companion_roots(q);

  auto vandermonde = [&](const std::vector<Complex>& x) {
    CMatrix V(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(x.size()));
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < x.size(); ++i)
        V(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
            std::pow(x[i], static_cast<int>(j)) / scale(static_cast<Eigen::Index>(j));
    return V;
  };
  CVector ts(static_cast<Eigen::Index>(N));
  for (std::size_t j = 0; j < N; ++j) ts(static_cast<Eigen::Index>(j)) = t[j] / scale(static_cast<Eigen::Index>(j));

  const CVector w = vandermonde(fit.nodes).completeOrthogonalDecomposition().solve(ts);
  fit.unrounded = w;
  fit.unrounded_residual = relative_residual(t, fit.nodes, w);
  CVector wi(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const long r = std::lround(w(i).real());
    fit.weights.push_back(r);
    wi(i) = static_cast<double>(r);
    if (r == 0) fit.zero_weight = true;
  }
  if (fit.zero_weight) {
    fit.residual = INFINITY;
    return fit;
  }

  // Gauss-Newton on the nodes with the integer weights held fixed.
  std::vector<Complex> x = fit.nodes;
  double best = relative_residual(t, x, wi);
  std::vector<Complex> best_x = x;
  for (int iter = 0; iter < 60; ++iter) {
    CMatrix J(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(rho));
    CVector r(static_cast<Eigen::Index>(N));
    for (std::size_t j = 0; j < N; ++j) {
      Complex acc = 0.0;
      const double s = scale(static_cast<Eigen::Index>(j));
      for (std::size_t i = 0; i < rho; ++i) {
        acc += wi(static_cast<Eigen::Index>(i)) * std::pow(x[i], static_cast<int>(j));
        J(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
            j == 0 ? Complex(0.0)
                   : wi(static_cast<Eigen::Index>(i)) * static_cast<double>(j) * std::pow(x[i], static_cast<int>(j) - 1) / s;
      }
      r(static_cast<Eigen::Index>(j)) = (acc - t[j]) / s;
    }
    const CVector dx = J.completeOrthogonalDecomposition().solve(-r);
    double step = 0.0;
    for (std::size_t i = 0; i < rho; ++i) {
      x[i] += dx(static_cast<Eigen::Index>(i));
      step = std::max(step, std::abs(dx(static_cast<Eigen::Index>(i))) / std::max(1.0, std::abs(x[i])));
    }
    const double res = relative_residual(t, x, wi);
    if (res < best) {
      best = res;
      best_x = x;
    }
    if (step < 1e-17) break;
  }
  fit.nodes = best_x;
  fit.residual = best;
  return fit;
}

// First pass scales rows by |t_j|; later passes by the term magnitudes of
// the previous fit, which is what rounding actually scales with.
Fit fit_rank(const std::vector<Complex>& t, std::size_t rho) {
  const auto N = static_cast<Eigen::Index>(t.size());
  Eigen::VectorXd scale(N);
  for (Eigen::Index j = 0; j < N; ++j) scale(j) = std::max(1.0, std::abs(t[static_cast<std::size_t>(j)]));
  Fit best = fit_rank(t, rho, scale);
  for (int pass = 0; pass < 2 && !best.nodes.empty(); ++pass) {
    const Fit& prev = best;
    for (Eigen::Index j = 0; j < N; ++j) {
      double magnitude = 0.0;
      for (std::size_t i = 0; i < prev.nodes.size(); ++i)
        magnitude += std::abs(prev.unrounded(static_cast<Eigen::Index>(i))) * std::pow(std::abs(prev.nodes[i]), static_cast<double>(j));
      scale(j) = std::max({1.0, std::abs(t[static_cast<std::size_t>(j)]), magnitude});
    }
    Fit next = fit_rank(t, rho, scale);
    const auto key = [](const Fit& f) { return f.zero_weight ? INFINITY : f.residual; };
    if (key(next) < key(best) || (key(best) == INFINITY && next.unrounded_residual < best.unrounded_residual)) best = std::move(next);
  }
  return best;
}

}  // namespace

ApproxExponentialPolynomial recover_exponential_polynomial(const TaylorSeq<Complex>& t, std::size_t L,
                                                           const Tolerance& tol) {
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "node bound L must be positive");
  if (t.size() < 2 * L) {
    throw Error(ErrorCode::NeedMoreOrders, "need at least " + std::to_string(2 * L) + " Taylor coefficients, got " +
                                               std::to_string(t.size()));
  }
  ApproxExponentialPolynomial ep;
  double zero_res = 0.0;
  for (const auto& v : t.coeffs) zero_res = std::max(zero_res, std::abs(v) / std::max(1.0, std::abs(v)));
  if (zero_res <= tol.eps) return ep;

  bool non_integer = false;
  for (std::size_t rho = 1; rho <= L; ++rho) {
    const Fit fit = fit_rank(t.coeffs, rho);
    if (!fit.zero_weight && fit.residual <= tol.eps) {
      for (std::size_t i = 0; i < rho; ++i) {
        Complex x = fit.nodes[i];
        if (std::abs(x.imag()) <= tol.eps * std::max(1.0, std::abs(x))) x.imag(0.0);
        ep.terms.push_back({x, fit.weights[i]});
      }
      ep.residual = fit.residual;
      std::sort(ep.terms.begin(), ep.terms.end(), [](const auto& a, const auto& b) {
        if (a.node.real() != b.node.real()) return a.node.real() < b.node.real();
        return a.node.imag() < b.node.imag();
      });
      return ep;
    }
    if (fit.unrounded_residual <= tol.eps) non_integer = true;
  }
  if (non_integer) throw Error(ErrorCode::NonIntegerWeight, "data fit only with non-integer weights");
  throw Error(ErrorCode::RankExceedsBound, "no fit with at most " + std::to_string(L) + " nodes within tolerance");
}

ApproxWitness witness_from_exponential_polynomial(const ApproxExponentialPolynomial& ep) {
  ApproxWitness w;
  for (const auto& term : ep.terms) {
    auto& target = term.weight > 0 ? w.B : w.C;
    for (long i = 0; i < std::abs(term.weight); ++i) target.push_back(term.node);
  }
  return w;
}

Decision decide_difference(const MomentSequence<Complex>& d, std::size_t L, const Tolerance& tol) {
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "node bound L must be positive");
  Decision dec;
  dec.supplied_order = d.order();
  dec.max_nodes = L;
  if (d.order() < 2 * L + 1) {
    dec.status = DecisionStatus::Inconclusive;
    dec.detail = "need at least 2L+1 = " + std::to_string(2 * L + 1) + " moments, got " + std::to_string(d.order());
    return dec;
  }
  const TaylorSeq<Complex> t = divide_by_expm1(d);
  try {
    const auto ep = recover_exponential_polynomial(t, L, tol);
    dec.rank = ep.terms.size();
    dec.status = DecisionStatus::NonzeroWitness;
    dec.verified_order = d.order();
    dec.approx_witness = witness_from_exponential_polynomial(ep);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RankExceedsBound) {
      dec.status = DecisionStatus::NoWitnessWithinBound;
    } else if (e.code() == ErrorCode::NonIntegerWeight || e.code() == ErrorCode::NotPureExponential) {
      dec.status = DecisionStatus::NotExponentialForm;
    } else {
      throw;
    }
    dec.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  return dec;
}

}  // namespace hcbim
