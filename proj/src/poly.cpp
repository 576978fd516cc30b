#include "hcbim/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hcbim/error.hpp"

namespace hcbim {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::linear_factor(const Rational& root) {
  return QPoly(std::vector<Rational>{Rational(-root), Rational(1)});
}

QPoly QPoly::from_roots(std::span<const Rational> roots) {
  QPoly p = constant(1);
  for (const auto& r : roots) p *= linear_factor(r);
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool QPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rational QPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& QPoly::lead() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  return c_.back();
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex QPoly::eval(const Complex& x) const {
  Complex acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.emplace_back(c_[i] * static_cast<unsigned long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  QPoly out = *this;
  const Rational inv = 1 / lead();
  for (auto& x : out.c_) x *= inv;
  return out;
}

QPoly QPoly::reversed() const {
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return QPoly(std::move(r));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

bool operator<(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.c_[static_cast<std::size_t>(i)];
    const auto& y = b.c_[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

std::string QPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[static_cast<std::size_t>(i)];
    if (sgn(a) == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << '-';
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << hcbim::to_string(mag);
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational inv = 1 / b.lead();
  for (int i = da; i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  auto eg = extended_gcd(a % m, m);
  if (eg.g.degree() != 0) throw Error(ErrorCode::InvalidArgument, "polynomial is not invertible modulo " + m.to_string());
  return eg.s % m;
}

bool is_square_free(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Rational> power_sums(const QPoly& h, std::size_t count) {
  if (!h.is_monic()) throw Error(ErrorCode::InvalidArgument, "power_sums needs a monic polynomial");
  const std::size_t m = static_cast<std::size_t>(h.degree());
  // h = z^m + a_{m-1} z^{m-1} + ... + a_0; e_i = (-1)^i a_{m-i}.
  auto e = [&](std::size_t i) -> Rational {
    if (i > m) return Rational(0);
    Rational v = h.coeff(m - i);
    return (i % 2 == 0) ? v : Rational(-v);
  };
  std::vector<Rational> p(count + 1, Rational(0));
  for (std::size_t k = 1; k <= count; ++k) {
    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    Rational acc = 0;
    for (std::size_t i = 1; i < k && i <= m; ++i) {
      Rational term = e(i) * p[k - i];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    if (k <= m) {
      Rational term = e(k) * static_cast<unsigned long>(k);
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    p[k] = acc;
  }
  return std::vector<Rational>(p.begin() + 1, p.end());
}

QPoly from_power_sums(std::span<const Rational> sums) {
  const std::size_t m = sums.size();
  std::vector<Rational> e(m + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * sums[i - 1];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    e[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> c(m + 1, Rational(0));
  for (std::size_t i = 0; i <= m; ++i) {
    c[m - i] = (i % 2 == 0) ? e[i] : Rational(-e[i]);
  }
  return QPoly(std::move(c));
}

}  // namespace hcbim
