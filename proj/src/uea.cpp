#include "hcbim/uea.hpp"

#include <algorithm>
#include <sstream>

#include "hcbim/charcenter.hpp"
#include "hcbim/error.hpp"

namespace hcbim {

void UEAElement::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, Rational(-c));
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, c] : terms) c *= s;
  return *this;
}

GlAlgebra::GlAlgebra(std::size_t n) : n_(n), index_of_(n * n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j < i; ++j) order_.push_back({i, j});
  for (std::size_t i = 1; i <= n; ++i) order_.push_back({i, i});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) order_.push_back({i, j});
  for (std::size_t p = 0; p < order_.size(); ++p) index_of_[(order_[p].i - 1) * n + (order_[p].j - 1)] = p;
}

std::size_t GlAlgebra::index(Generator g) const {
  if (g.i < 1 || g.i > n_ || g.j < 1 || g.j > n_) {
    throw Error(ErrorCode::InvalidGenerator, "E_" + std::to_string(g.i) + "," + std::to_string(g.j) +
                                                 " is not a generator of gl_" + std::to_string(n_));
  }
  return index_of_[(g.i - 1) * n_ + (g.j - 1)];
}

UEAElement GlAlgebra::one() const {
  UEAElement e{n_, {}};
  e.add_term(Monomial(generator_count(), 0), Rational(1));
  return e;
}

UEAElement GlAlgebra::element(Generator g) const {
  UEAElement e{n_, {}};
  Monomial m(generator_count(), 0);
  m[index(g)] = 1;
  e.add_term(m, Rational(1));
  return e;
}

std::vector<std::pair<std::size_t, long>> GlAlgebra::bracket(std::size_t a, std::size_t b) const {
  const Generator x = order_[a], y = order_[b];
  std::vector<std::pair<std::size_t, long>> out;
  if (x.j == y.i) out.emplace_back(index({x.i, y.j}), 1);
  if (y.j == x.i) out.emplace_back(index({y.i, x.j}), -1);
  // E_ii - E_ii cancels when both terms hit the same generator.
  if (out.size() == 2 && out[0].first == out[1].first) out.clear();
  return out;
}

const UEAElement& GlAlgebra::monomial_times_generator(const Monomial& m, std::size_t g) {
  const auto key = std::make_pair(m, g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::size_t last = generator_count();
  for (std::size_t p = generator_count(); p-- > 0;) {
    if (m[p] != 0) {
      last = p;
      break;
    }
  }
  UEAElement result{n_, {}};
  if (last == generator_count() || g >= last) {
    Monomial next = m;
    ++next[g];
    result.add_term(next, Rational(1));
  } else {
    // m = m' E_a with a > g:  m E_g = (m' E_g) E_a + m' [E_a, E_g]
    Monomial head = m;
    --head[last];
    const UEAElement left = monomial_times_generator(head, g);
    result = multiply_generator(left, last);
    for (const auto& [h, c] : bracket(last, g)) {
      UEAElement part = monomial_times_generator(head, h);
      part *= Rational(c);
      result += part;
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

UEAElement GlAlgebra::multiply_generator(const UEAElement& x, std::size_t g) {
  UEAElement out{n_, {}};
  for (const auto& [m, c] : x.terms) {
    const UEAElement& prod = monomial_times_generator(m, g);
    for (const auto& [pm, pc] : prod.terms) out.add_term(pm, pc * c);
  }
  return out;
}

std::vector<std::size_t> GlAlgebra::word_of(const Monomial& m) const {
  std::vector<std::size_t> w;
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::uint16_t e = 0; e < m[p]; ++e) w.push_back(p);
  return w;
}

UEAElement GlAlgebra::straighten(std::span<const Generator> word) {
  UEAElement x = one();
  for (const auto& g : word) x = multiply_generator(x, index(g));
  return x;
}

UEAElement GlAlgebra::multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement out{n_, {}};
  for (const auto& [mb, cb] : b.terms) {
    UEAElement part = a;
    for (std::size_t g : word_of(mb)) part = multiply_generator(part, g);
    part *= cb;
    out += part;
  }
  return out;
}

UEAElement GlAlgebra::commutator(const UEAElement& a, const UEAElement& b) {
  return multiply(a, b) - multiply(b, a);
}

UEAElement GlAlgebra::casimir2() {
  UEAElement c{n_, {}};
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) {
      const Generator word[] = {{i, j}, {j, i}};
      c += straighten(word);
    }
  Rational rho_sq = 0;
  for (const auto& x : rho(n_)) rho_sq += x * x;
  c += one() * rho_sq;
  return c;
}

std::string GlAlgebra::to_string(const UEAElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const auto w = word_of(m);
    bool started = w.empty() || mag != 1;
    if (started) os << hcbim::to_string(mag);
    for (std::size_t g : w) {
      if (started) os << "*";
      os << "E" << order_[g].i << order_[g].j;
      started = true;
    }
  }
  return os.str();
}

UEAElement straighten_by_rewriting(std::size_t n, std::span<const Generator> word, RewriteOrder order) {
  GlAlgebra layout(n);  // only used for the generator order and brackets
  using Word = std::vector<std::size_t>;
  std::map<Word, Rational> pending;
  Word start;
  for (const auto& g : word) start.push_back(layout.index(g));
  pending[start] = 1;
  UEAElement out{n, {}};
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational c = node.mapped();
    if (sgn(c) == 0) continue;
    std::ptrdiff_t pos = -1;
    if (order == RewriteOrder::Leftmost) {
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p] > w[p + 1]) {
          pos = static_cast<std::ptrdiff_t>(p);
          break;
        }
    } else {
      for (std::size_t p = w.size(); p-- > 1;)
        if (w[p - 1] > w[p]) {
          pos = static_cast<std::ptrdiff_t>(p - 1);
          break;
        }
    }
    if (pos < 0) {
      Monomial m(n * n, 0);
      for (std::size_t g : w) ++m[g];
      out.add_term(m, c);
      continue;
    }
    const std::size_t p = static_cast<std::size_t>(pos);
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    pending[swapped] += c;
    // E_a E_b = E_b E_a + [E_a, E_b]
    const Generator a = layout.generator(w[p]), b = layout.generator(w[p + 1]);
    auto emit = [&](Generator g, long sign) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      shorter.push_back(layout.index(g));
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      pending[shorter] += c * sign;
    };
    if (a.j == b.i) emit({a.i, b.j}, 1);
    if (b.j == a.i) emit({b.i, a.j}, -1);
  }
  return out;
}

WeightMultiset tensor_weight_multiset(std::size_t n, std::size_t r, std::size_t s) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  // Weights of S^k V: compositions of k into n parts, each with multiplicity 1.
  auto sym_weights = [n](std::size_t k) {
    std::vector<WeightVector> out;
    WeightVector cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
      if (pos + 1 == n) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (long v = left; v >= 0; --v) {
        cur[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, static_cast<long>(k));
    return out;
  };
  WeightMultiset out;
  for (const auto& a : sym_weights(r))
    for (const auto& b : sym_weights(s)) {
      WeightVector w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = a[i] - b[i];
      ++out[w];
    }
  return out;
}

bool dominates(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::RankMismatch, "weights of different rank");
  long partial = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    partial += a[i] - b[i];
    if (partial < 0) return false;
  }
  return partial == 0;
}

bool witness_weight_check(const std::vector<Rational>& lambda, const std::vector<Rational>& mu, std::size_t r,
                          std::size_t s) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorCode::RankMismatch, "lambda has rank " + std::to_string(lambda.size()) + ", mu has rank " +
                                             std::to_string(mu.size()));
  }
  const std::size_t n = lambda.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  WeightVector diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = lambda[i] - mu[i];
    if (d.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "lambda - mu is not integral");
    diff[i] = d.get_num().get_si();
  }
  WeightVector top(n, 0);
  top[0] += static_cast<long>(r);
  top[n - 1] -= static_cast<long>(s);
  if (diff != top) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (diff[i] < diff[i + 1]) return false;
  return true;
}

}  // namespace hcbim
