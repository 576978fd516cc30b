#include "hcbim/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "hcbim/error.hpp"

namespace hcbim {
namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31. Constant term first.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mp_sub(const Field& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mp_mul(const Field& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(const Field& F, const ModPoly& a, const ModPoly& b) {
  ModPoly rem = a;
  trim(rem);
  if (deg(rem) < deg(b)) return {{}, rem};
  const u64 inv = F.inv(b.back());
  ModPoly quo(static_cast<std::size_t>(deg(rem) - deg(b) + 1), 0);
  for (int i = deg(rem); i >= deg(b); --i) {
    const u64 f = F.mul(rem[static_cast<std::size_t>(i)], inv);
    quo[static_cast<std::size_t>(i - deg(b))] = f;
    if (f == 0) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - deg(b) + j)];
      slot = F.sub(slot, F.mul(f, b[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(deg(b)));
  trim(rem);
  trim(quo);
  return {quo, rem};
}

ModPoly mp_mod(const Field& F, const ModPoly& a, const ModPoly& b) { return mp_divmod(F, a, b).second; }

ModPoly mp_monic(const Field& F, ModPoly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, inv);
  return a;
}

ModPoly mp_gcd(const Field& F, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(F, a);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mp_bezout(const Field& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mp_sub(F, s0, mp_mul(F, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = mp_sub(F, t0, mp_mul(F, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(r0.at(0));
  for (auto& x : s0) x = F.mul(x, inv);
  for (auto& x : t0) x = F.mul(x, inv);
  return {s0, t0};
}

ModPoly mp_powmod(const Field& F, ModPoly base, const Integer& e, const ModPoly& m) {
  ModPoly result{1};
  base = mp_mod(F, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_mod(F, mp_mul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_mod(F, mp_mul(F, result, base), m);
  }
  return result;
}

ModPoly mp_derivative(const Field& F, const ModPoly& a) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.p));
  trim(d);
  return d;
}

// Distinct-degree factorization of a monic square-free f.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Field& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  int i = 1;
  while (deg(f) >= 2 * i) {
    h = mp_powmod(F, h, Integer(static_cast<unsigned long>(F.p)), f);
    ModPoly g = mp_gcd(F, f, mp_sub(F, h, x));
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = mp_divmod(F, f, g).first;
      h = mp_mod(F, h, f);
    }
    ++i;
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const Field& F, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, F.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = mp_powmod(F, a, e, f);
    b = mp_sub(F, b, ModPoly{1});
    ModPoly g = mp_gcd(F, f, b);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, mp_divmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const Field& F, const ModPoly& f) {
  std::mt19937_64 rng(0x5eed5eedULL + F.p);
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(F, f)) equal_degree(F, g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_nonneg(a, m);
  if (2 * r > m) r -= m;
  return r;
}

ZPoly z_reduce_symmetric(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod_symmetric(c, m);
  trim(a);
  return a;
}

ModPoly to_mod(const Field& F, const ZPoly& a) {
  ModPoly r(a.size());
  const Integer p(static_cast<unsigned long>(F.p));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_nonneg(a[i], p).get_ui();
  trim(r);
  return r;
}

ZPoly to_z(const ModPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Exact division by a monic divisor; nullopt-like flag when not divisible.
bool z_divides_monic(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly rem = a;
  const int db = deg(b);
  if (deg(rem) < db) return rem.empty();
  ZPoly quo(static_cast<std::size_t>(deg(rem) - db + 1), Integer(0));
  for (int i = deg(rem); i >= db; --i) {
    const Integer f = rem[static_cast<std::size_t>(i)];
    quo[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  trim(quo);
  quotient = std::move(quo);
  return true;
}

// Lifts f = g0 * h0 (mod p), all monic, to f = G * H (mod modulus).
std::pair<ZPoly, ZPoly> hensel_lift_pair(const Field& F, const ZPoly& f, const ModPoly& g0, const ModPoly& h0,
                                         const Integer& modulus) {
  const auto [s, t] = mp_bezout(F, g0, h0);
  ZPoly G = to_z(g0), H = to_z(h0);
  const Integer p(static_cast<unsigned long>(F.p));
  Integer m = p;
  while (m < modulus) {
    ZPoly e = z_sub(f, z_mul(G, H));
    for (auto& c : e) c /= m;  // exact: f == G*H (mod m)
    const ModPoly ep = to_mod(F, e);
    const ModPoly dG = mp_mod(F, mp_mul(F, t, ep), g0);
    const ModPoly dH = mp_mod(F, mp_mul(F, s, ep), h0);
    for (std::size_t i = 0; i < dG.size(); ++i) G[i] += m * Integer(static_cast<unsigned long>(dG[i]));
    for (std::size_t i = 0; i < dH.size(); ++i) H[i] += m * Integer(static_cast<unsigned long>(dH[i]));
    m *= p;
  }
  return {G, H};
}

std::vector<ZPoly> hensel_lift(const Field& F, const ZPoly& f, const std::vector<ModPoly>& factors,
                               const Integer& modulus) {
  std::vector<ZPoly> lifted;
  ZPoly target = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = mp_mul(F, rest, factors[j]);
    auto [G, H] = hensel_lift_pair(F, target, factors[i], rest, modulus);
    lifted.push_back(z_reduce_symmetric(G, modulus));
    target = z_reduce_symmetric(H, modulus);
  }
  lifted.push_back(target);
  return lifted;
}

Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> ps;
    for (u64 c = 3; ps.size() < 200; c += 2) {
      bool prime = true;
      for (u64 q = 3; q * q <= c; q += 2)
        if (c % q == 0) {
          prime = false;
          break;
        }
      if (prime) ps.push_back(c);
    }
    return ps;
  }();
  return primes;
}

// Factors a monic, square-free integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& g) {
  const int d = deg(g);
  if (d <= 1) return {g};

  Field best{0};
  std::vector<ModPoly> best_factors;
  int tried = 0;
  for (u64 p : small_primes()) {
    const Field F{p};
    const ModPoly gp = to_mod(F, g);
    if (deg(gp) != d) continue;
    if (deg(mp_gcd(F, gp, mp_derivative(F, gp))) != 0) continue;
    auto fs = factor_mod_p(F, gp);
    if (best.p == 0 || fs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1 || ++tried == 6) break;
  }
  if (best.p == 0) throw Error(ErrorCode::InvalidArgument, "no suitable prime for factorization");
  if (best_factors.size() == 1) return {g};

  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer bound = isqrt_ceil(norm2) + 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(d));
  const Integer p(static_cast<unsigned long>(best.p));
  Integer modulus = p;
  while (modulus <= 2 * bound) modulus *= p;

  std::vector<ZPoly> lifted = hensel_lift(best, g, best_factors, modulus);

  std::vector<ZPoly> found;
  ZPoly target = g;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ZPoly cand{Integer(1)};
      for (std::size_t i : idx) cand = z_reduce_symmetric(z_mul(cand, lifted[i]), modulus);
      ZPoly quotient;
      if (z_divides_monic(target, cand, quotient)) {
        found.push_back(cand);
        target = std::move(quotient);
        for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
        hit = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!hit) ++size;
  }
  if (deg(target) > 0) found.push_back(target);
  return found;
}

}  // namespace

std::vector<PolyFactor> square_free_decomposition(const QPoly& p) {
  std::vector<PolyFactor> out;
  if (p.degree() <= 0) return out;
  const QPoly f = p.monic();
  const QPoly a0 = gcd(f, f.derivative());
  QPoly b = divmod(f, a0).first;
  QPoly c = divmod(f.derivative(), a0).first;
  QPoly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly a = gcd(b, dd);
    if (a.degree() > 0) out.push_back({a, i});
    b = divmod(b, a).first;
    c = divmod(dd, a).first;
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<QPoly> factor_square_free(const QPoly& p) {
  if (p.degree() <= 0) return {};
  if (p.degree() == 1) return {p.monic()};

  // Integer primitive form f with positive leading coefficient a.
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly f;
  for (const auto& c : p.coeffs()) f.push_back(Integer(c * den));
  Integer content = 0;
  for (const auto& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0) content = -content;
  for (auto& c : f) c /= content;

  // g(x) = a^(d-1) f(x/a) is monic with integer coefficients.
  const int d = deg(f);
  const Integer a = f.back();
  ZPoly g(f.size());
  for (int i = 0; i <= d; ++i) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(d - 1 - (i == d ? d - 1 : i)));
    g[static_cast<std::size_t>(i)] = i == d ? Integer(1) : f[static_cast<std::size_t>(i)] * scale;
  }

  std::vector<QPoly> out;
  for (const ZPoly& h : zassenhaus(g)) {
    // Undo the substitution: h(a x) is proportional to a factor of f.
    std::vector<Rational> c(h.size());
    Integer apow = 1;
    for (std::size_t i = 0; i < h.size(); ++i) {
      c[i] = Rational(h[i] * apow);
      apow *= a;
    }
    out.push_back(QPoly(std::move(c)).monic());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolyFactor> factor_rational(const QPoly& p) {
  std::vector<PolyFactor> out;
  for (const auto& part : square_free_decomposition(p)) {
    for (auto& q : factor_square_free(part.poly)) out.push_back({std::move(q), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) { return x.poly < y.poly; });
  return out;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  for (const auto& f : factor_rational(p)) {
    if (f.poly.degree() != 1) continue;
    for (int i = 0; i < f.multiplicity; ++i) roots.push_back(-f.poly.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hcbim
