// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hcbim/charcenter.hpp"
#include "hcbim/expsum.hpp"
#include "hcbim/interpolate.hpp"
#include "hcbim/verma.hpp"
#include "support.hpp"

using namespace hcbim;

namespace {

struct Outcome {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 means none
  std::function<Outcome()> run;
};

Witness random_witness(testing::Rng& rng, std::size_t max_b, std::size_t max_c, long bound) {
  Witness w;
  const auto nb = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_b)));
  const auto nc = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_c)));
  for (std::size_t i = 0; i < nb; ++i) w.B.push_back(rng.rational(bound));
  for (std::size_t i = 0; i < nc; ++i) w.C.push_back(rng.rational(bound));
  w.reduce();
  return w;
}

Weight random_integral(testing::Rng& rng, std::size_t n, long bound) {
  Weight out;
  for (std::size_t i = 0; i < n; ++i) out.entries.emplace_back(rng.integer(-bound, bound));
  return out;
}

CentralCharacter add_witness(const CentralCharacter& psi, const Witness& w) {
  CentralCharacter chi;
  chi.moments.values = psi.moments.values;
  const auto d = moments_from_witness(w, psi.order());
  for (std::size_t i = 0; i < d.values.size(); ++i) chi.moments.values[i] += d.values[i];
  return chi;
}

// Criterion-1 cases, shared with the float rerun.
struct RoundTripCase {
  Witness witness;
  CentralCharacter chi, psi;
  std::size_t L;
};

std::vector<RoundTripCase> round_trip_cases() {
  testing::Rng rng(20240601);
  std::vector<RoundTripCase> cases;
  for (int i = 0; i < 200; ++i) {
    RoundTripCase c;
    c.witness = random_witness(rng, 4, 4, 5);
    c.L = std::max<std::size_t>(1, c.witness.r() + c.witness.s());
    c.psi = character_from_weight(random_integral(rng, 4, 6), 2 * c.L + 2);
    c.chi = add_witness(c.psi, c.witness);
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome criterion1() {
  Outcome o;
  for (const auto& c : round_trip_cases()) {
    ++o.total;
    const auto dec = decide_nonvanishing(c.chi, c.psi, c.L);
    if (dec.status == DecisionStatus::NonzeroWitness && dec.witness && *dec.witness == c.witness) ++o.passed;
  }
  return o;
}

// Determinant by cofactor expansion; used only on 4x4 Hankel matrices.
Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
  }
  return total;
}

Outcome criterion2() {
  // A sequence t with a nonsingular 4x4 Hankel matrix satisfies no linear
  // recurrence of order <= 3, so no sum of <= 3 exponentials produces it.
  testing::Rng rng(7001);
  Outcome o;
  std::size_t resampled = 0;
  const std::size_t K = 8, L = 3;
  while (o.total < 50) {
    Witness base;
    const auto nodes = rng.integer(1, 3);
    for (long i = 0; i < nodes; ++i) {
      const Rational x = rng.rational(4);
      const long wt = rng.integer(1, 2) * (rng.integer(0, 1) ? 1 : -1);
      for (long m = 0; m < std::abs(wt); ++m) (wt > 0 ? base.B : base.C).push_back(x);
    }
    base.reduce();
    auto d = moments_from_witness(base, K);
    d.values[static_cast<std::size_t>(rng.integer(0, K - 1))] += rng.rational(3) + (rng.integer(0, 1) ? 1 : -1) * 4;
    const auto t = divide_by_expm1(d).coeffs;
    std::vector<std::vector<Rational>> h(4, std::vector<Rational>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) h[i][j] = t[i + j];
    if (det(h) == 0) {
      ++resampled;
      continue;
    }
    ++o.total;
    const auto dec = decide_difference(d, L);
    if (dec.status != DecisionStatus::NonzeroWitness && dec.status != DecisionStatus::Inconclusive) ++o.passed;
  }
  o.note = "resampled " + std::to_string(resampled);
  return o;
}

Outcome criterion3() {
  testing::Rng rng(7003);
  Outcome o;
  std::size_t pairs = 0;
  const std::size_t K = 10;
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const Weight mu = random_integral(rng, n, 9);
    bool all = true;
    for (std::size_t r = 0; r <= n; ++r)
      for (std::size_t s = 0; r + s <= n; ++s) {
        ++pairs;
        const auto direct =
            character_difference(character_from_weight(shift_weight(mu, r, s), K), character_from_weight(mu, K));
        if (lemma9_difference(mu, r, s, K).difference != direct) all = false;
      }
    ++o.total;
    if (all) ++o.passed;
  }
  o.note = std::to_string(pairs) + " (r,s) pairs";
  return o;
}

Outcome criterion4() {
  testing::Rng rng(7004);
  Outcome o;
  std::size_t decisions = 0;
  for (int i = 0; i < 20; ++i) {
    const Witness wit = random_witness(rng, 2, 2, 5);
    const std::size_t rs = wit.r() + wit.s();
    const std::size_t L = std::max<std::size_t>(1, rs);
    const std::size_t lo = rs + 1, hi = rs + 8;
    const auto psi = character_from_weight(random_integral(rng, 6, 6), hi);
    const auto chi = add_witness(psi, wit);
    const auto fam = build_weight_family(wit, psi, {lo, hi});
    bool ok = fam.entries.size() == 8 && verify_weight_family(fam, chi, psi).passed;
    for (const auto& e : fam.entries) {
      // The decision needs 2L+1 moments; below that the members' own
      // characters are taken to the larger order.
      const std::size_t K = std::max(e.n - rs, 2 * L + 1);
      const auto dec = decide_nonvanishing(e.lambda_character(K), e.mu_character(K), L);
      ++decisions;
      ok = ok && dec.status == DecisionStatus::NonzeroWitness && dec.witness && *dec.witness == wit;
    }
    ++o.total;
    if (ok) ++o.passed;
  }
  o.note = std::to_string(decisions) + " decisions";
  return o;
}

Weight random_generic(testing::Rng& rng, std::size_t n) {
  std::set<long> used;
  Weight out;
  while (out.entries.size() < n) {
    const long v = rng.integer(-8, 8);
    if (used.insert(v).second) out.entries.emplace_back(v);
  }
  return out;
}

Outcome criterion5() {
  testing::Rng rng(7005);
  Outcome o;
  const std::size_t D = 3;
  std::size_t blocks = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    GlAlgebra algebra(n);
    for (int i = 0; i < 10; ++i) {
      const Weight lambda = random_generic(rng, n);
      bool ok = true;
      for (auto f : {TensorFactor::V, TensorFactor::VDual}) {
        const auto rep = omega_spectrum_check(algebra, lambda, D, f);
        for (const auto& b : rep.blocks) ok = ok && b.annihilated && b.shift_identity;
        blocks += rep.blocks.size();
      }
      ++o.total;
      if (ok) ++o.passed;
    }
  }
  o.note = std::to_string(blocks) + " weight blocks, depth 3";
  return o;
}

Outcome criterion6() {
  testing::Rng rng(7006);
  Outcome o;
  std::vector<GlAlgebra> algebras;
  for (std::size_t n = 1; n <= 3; ++n) algebras.emplace_back(n);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(1 + i % 3);
    Weight lambda;
    for (std::size_t k = 0; k < n; ++k) lambda.entries.emplace_back(rng.integer(-6, 6));
    ++o.total;
    if (casimir_check(algebras[n - 1], lambda, 3).passed) ++o.passed;
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst = 0;
  for (const auto& c : round_trip_cases()) {
    ++o.total;
    const auto exact = decide_nonvanishing(c.chi, c.psi, c.L);
    const auto d = character_difference(c.chi, c.psi);
    const auto approx = decide_difference(to_approx(d), c.L, Tolerance{1e-9});
    if (exact.status != DecisionStatus::NonzeroWitness || approx.status != DecisionStatus::NonzeroWitness) continue;
    const auto& w = *exact.witness;
    const auto& a = *approx.approx_witness;
    if (a.B.size() != w.B.size() || a.C.size() != w.C.size()) continue;
    double err = 0;
    for (std::size_t i = 0; i < w.B.size(); ++i) err = std::max(err, std::abs(a.B[i] - to_complex(w.B[i])));
    for (std::size_t i = 0; i < w.C.size(); ++i) err = std::max(err, std::abs(a.C[i] - to_complex(w.C[i])));
    worst = std::max(worst, err);
    if (err <= 1e-9) ++o.passed;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst node error %.2e", worst);
  o.note = buf;
  return o;
}

Outcome criterion8() {
  Outcome o;
  MomentSequence<Rational> d{MomentKind::Difference, std::vector<Rational>(12, Rational(0))};
  d.values[0] = 1;
  const auto first = decide_difference(d, 5);
  const auto second = decide_difference(d, 5);
  o.total = 1;
  const bool same = first.status == second.status && first.rank == second.rank &&
                    first.rank_profile == second.rank_profile && first.detail == second.detail;
  if (first.status == DecisionStatus::NoWitnessWithinBound && same) o.passed = 1;
  o.note = std::string(to_string(first.status)) + ", recurrence order " + std::to_string(first.rank);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "witness round trip (exact)", 10.0, criterion1},
      {2, "no false witness on perturbed sequences", 0.0, criterion2},
      {3, "shifted-weight difference identity", 0.0, criterion3},
      {4, "finite-rank weight families", 0.0, criterion4},
      {5, "Omega annihilator and shift identity", 60.0, criterion5},
      {6, "quadratic Casimir central and scalar", 10.0, criterion6},
      {7, "exact/float agreement", 0.0, criterion7},
      {8, "negative control", 0.0, criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0.0 || secs < c.time_limit;
    const bool ok = error.empty() && o.total > 0 && o.passed == o.total && in_time;
    if (!ok) ++failures;
    std::printf("criterion %d: %s  %s  %zu/%zu  %.2fs", c.id, ok ? "PASS" : "FAIL", c.title, o.passed, o.total, secs);
    if (c.time_limit > 0) std::printf(" (limit %.0fs)", c.time_limit);
    if (!o.note.empty()) std::printf("  [%s]", o.note.c_str());
    if (!error.empty()) std::printf("  error: %s", error.c_str());
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
