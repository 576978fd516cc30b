#include "hcbim/verma.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hcbim/error.hpp"

namespace hcbim {

const char* to_string(TensorFactor f) {
  switch (f) {
    case TensorFactor::None: return "none";
    case TensorFactor::V: return "V";
    case TensorFactor::VDual: return "V*";
  }
  return "?";
}

namespace {

void accumulate(ModuleVector& out, const BasisLabel& label, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = out.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) out.erase(it);
  }
}

WeightVector unit(std::size_t n, std::size_t k) {  // k is 1-based
  WeightVector e(n, 0);
  e[k - 1] = 1;
  return e;
}

WeightVector add(WeightVector a, const WeightVector& b, long sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

bool weight_preserving(const GlAlgebra& algebra, const UEAElement& x) {
  const std::size_t n = algebra.rank();
  for (const auto& [m, c] : x.terms) {
    WeightVector w(n, 0);
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (m[p] == 0) continue;
      const Generator g = algebra.generator(p);
      w[g.i - 1] += m[p];
      w[g.j - 1] -= m[p];
    }
    if (std::any_of(w.begin(), w.end(), [](long v) { return v != 0; })) return false;
  }
  return true;
}

}  // namespace

VermaModule::VermaModule(GlAlgebra& algebra, const Weight& lambda) : algebra_(algebra), lambda_(lambda) {
  const std::size_t n = algebra.rank();
  if (lambda.rank() != n) {
    throw Error(ErrorCode::RankMismatch, "weight of rank " + std::to_string(lambda.rank()) + " for gl_" +
                                             std::to_string(n));
  }
  const auto r = rho(n);
  for (std::size_t i = 0; i < n; ++i) top_.push_back(lambda.entries[i] - r[i]);
  for (std::size_t p = 0; p < algebra.generator_count(); ++p)
    if (algebra.is_lowering(p)) lowering_.push_back(p);
}

WeightVector VermaModule::deficit(const Monomial& lowering) const {
  WeightVector beta(rank(), 0);
  for (std::size_t p : lowering_) {
    if (lowering[p] == 0) continue;
    const Generator g = algebra_.generator(p);
    beta[g.j - 1] += lowering[p];
    beta[g.i - 1] -= lowering[p];
  }
  return beta;
}

long VermaModule::height(const WeightVector& deficit) {
  long h = 0;
  for (std::size_t k = 0; k < deficit.size(); ++k) h -= static_cast<long>(k + 1) * deficit[k];
  return h;
}

std::vector<Monomial> VermaModule::basis(std::size_t depth) const {
  std::vector<Monomial> out;
  Monomial cur(algebra_.generator_count(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
    if (pos == lowering_.size()) {
      out.push_back(cur);
      return;
    }
    const Generator g = algebra_.generator(lowering_[pos]);
    const long h = static_cast<long>(g.i - g.j);
    for (long e = 0; e * h <= left; ++e) {
      cur[lowering_[pos]] = static_cast<std::uint16_t>(e);
      rec(pos + 1, left - e * h);
    }
    cur[lowering_[pos]] = 0;
  };
  rec(0, static_cast<long>(depth));
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
    const auto da = deficit(a), db = deficit(b);
    const long ha = height(da), hb = height(db);
    if (ha != hb) return ha < hb;
    if (da != db) return da > db;
    return a < b;
  });
  return out;
}

std::size_t VermaModule::kostant(const WeightVector& deficit_vec) const {
  const long h = height(deficit_vec);
  if (h < 0) return 0;
  std::size_t count = 0;
  for (const auto& m : basis(static_cast<std::size_t>(h)))
    if (deficit(m) == deficit_vec) ++count;
  return count;
}

ModuleVector VermaModule::on_highest_weight(const UEAElement& y) const {
  ModuleVector out;
  for (const auto& [m, c] : y.terms) {
    Rational coeff = c;
    Monomial low(m.size(), 0);
    bool killed = false;
    for (std::size_t p = 0; p < m.size() && !killed; ++p) {
      if (m[p] == 0) continue;
      if (algebra_.is_raising(p)) {
        killed = true;
      } else if (algebra_.is_lowering(p)) {
        low[p] = m[p];
      } else {
        const Generator g = algebra_.generator(p);
        for (std::uint16_t e = 0; e < m[p]; ++e) coeff *= top_[g.i - 1];
      }
    }
    if (!killed) accumulate(out, {low, 0}, coeff);
  }
  return out;
}

ModuleVector VermaModule::act(const UEAElement& x, const Monomial& m) {
  UEAElement basis_elem{rank(), {}};
  basis_elem.add_term(m, Rational(1));
  return on_highest_weight(algebra_.multiply(x, basis_elem));
}

ModuleVector VermaModule::act(const UEAElement& x, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [label, c] : v)
    for (const auto& [l2, c2] : act(x, label.lowering)) accumulate(out, {l2.lowering, label.factor}, c * c2);
  return out;
}

const ModuleVector& VermaModule::act_generator(std::size_t g, const Monomial& m) {
  const auto key = std::make_pair(g, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  UEAElement gen{rank(), {}};
  Monomial gm(algebra_.generator_count(), 0);
  gm[g] = 1;
  gen.add_term(gm, Rational(1));
  return memo_.emplace(key, act(gen, m)).first->second;
}

namespace {

struct TensorSpace {
  VermaModule& module;
  TensorFactor factor;
  std::size_t depth;

  std::size_t n() const { return module.rank(); }

  WeightVector label_deficit(const BasisLabel& l) const {
    WeightVector beta = module.deficit(l.lowering);
    switch (factor) {
      case TensorFactor::None: return beta;
      case TensorFactor::V: return add(add(beta, unit(n(), 1)), unit(n(), l.factor), -1);
      case TensorFactor::VDual: return add(add(beta, unit(n(), l.factor)), unit(n(), n()), -1);
    }
    return beta;
  }

  std::vector<Rational> top_weight() const {
    std::vector<Rational> t = module.top();
    if (factor == TensorFactor::V) t.front() += 1;
    if (factor == TensorFactor::VDual) t.back() -= 1;
    return t;
  }

  std::vector<BasisLabel> labels() const {
    std::vector<BasisLabel> out;
    const auto mons = module.basis(depth);
    if (factor == TensorFactor::None) {
      for (const auto& m : mons) out.push_back({m, 0});
    } else {
      for (const auto& m : mons)
        for (std::size_t k = 1; k <= n(); ++k) {
          BasisLabel l{m, k};
          if (VermaModule::height(label_deficit(l)) <= static_cast<long>(depth)) out.push_back(l);
        }
    }
    return out;
  }

  // Delta(E_g) on a single label.
  ModuleVector apply_generator(std::size_t g, const BasisLabel& l) {
    ModuleVector out;
    for (const auto& [ml, c] : module.act_generator(g, l.lowering)) accumulate(out, {ml.lowering, l.factor}, c);
    if (factor == TensorFactor::None) return out;
    const Generator e = module.algebra().generator(g);
    if (factor == TensorFactor::V && e.j == l.factor) accumulate(out, {l.lowering, e.i}, Rational(1));
    if (factor == TensorFactor::VDual && e.i == l.factor) accumulate(out, {l.lowering, e.j}, Rational(-1));
    return out;
  }

  ModuleVector apply_generator(std::size_t g, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [l, c] : v)
      for (const auto& [l2, c2] : apply_generator(g, l)) accumulate(out, l2, c * c2);
    return out;
  }

  // Delta(x) on a label, x in normal form.
  ModuleVector apply_coproduct(const UEAElement& x, const BasisLabel& l) {
    ModuleVector out;
    for (const auto& [m, c] : x.terms) {
      ModuleVector v{{l, Rational(1)}};
      const auto word = module.algebra().word_of(m);
      for (auto it = word.rbegin(); it != word.rend() && !v.empty(); ++it) v = apply_generator(*it, v);
      for (const auto& [l2, c2] : v) accumulate(out, l2, c * c2);
    }
    return out;
  }

  // x (x) 1 on a label.
  ModuleVector apply_left(const UEAElement& x, const BasisLabel& l) {
    ModuleVector out;
    for (const auto& [ml, c] : module.act(x, l.lowering)) accumulate(out, {ml.lowering, l.factor}, c);
    return out;
  }
};

BlockOperator assemble(TensorSpace& space, bool blocks, const std::function<ModuleVector(const BasisLabel&)>& apply) {
  BlockOperator op;
  op.n = space.n();
  op.depth = space.depth;
  op.factor = space.factor;
  op.block_diagonal = blocks;
  const auto labels = space.labels();
  if (!blocks) {
    op.full_basis = labels;
    std::map<BasisLabel, std::size_t> pos;
    for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = i;
    op.full = RationalMatrix(labels.size(), labels.size());
    for (std::size_t j = 0; j < labels.size(); ++j)
      for (const auto& [l, c] : apply(labels[j]))
        if (auto it = pos.find(l); it != pos.end()) op.full(it->second, j) = c;
    return op;
  }
  std::map<WeightVector, std::vector<BasisLabel>> grouped;
  for (const auto& l : labels) grouped[space.label_deficit(l)].push_back(l);
  std::vector<WeightVector> order;
  for (const auto& [d, ls] : grouped) order.push_back(d);
  std::sort(order.begin(), order.end(), [](const WeightVector& a, const WeightVector& b) {
    const long ha = VermaModule::height(a), hb = VermaModule::height(b);
    return ha != hb ? ha < hb : a > b;
  });
  const auto top = space.top_weight();
  for (const auto& d : order) {
    VermaBlock block;
    block.deficit = d;
    block.basis = grouped[d];
    std::sort(block.basis.begin(), block.basis.end());
    for (std::size_t i = 0; i < top.size(); ++i) block.weight.push_back(top[i] - d[i]);
    std::map<BasisLabel, std::size_t> pos;
    for (std::size_t i = 0; i < block.basis.size(); ++i) pos[block.basis[i]] = i;
    block.matrix = RationalMatrix(block.basis.size(), block.basis.size());
    for (std::size_t j = 0; j < block.basis.size(); ++j) {
      for (const auto& [l, c] : apply(block.basis[j])) {
        auto it = pos.find(l);
        // Whole weight spaces are kept, so a weight-preserving operator
        // cannot leave the block.
        if (it == pos.end()) throw Error(ErrorCode::InvalidArgument, "operator leaves its weight block");
        block.matrix(it->second, j) = c;
      }
    }
    op.blocks.push_back(std::move(block));
  }
  return op;
}

RationalMatrix square(const RationalMatrix& m) { return m * m; }

}  // namespace

BlockOperator verma_action(GlAlgebra& algebra, const Weight& lambda, std::size_t depth, const UEAElement& x) {
  if (x.n != algebra.rank()) throw Error(ErrorCode::RankMismatch, "element and algebra have different rank");
  VermaModule module(algebra, lambda);
  TensorSpace space{module, TensorFactor::None, depth};
  return assemble(space, weight_preserving(algebra, x),
                  [&](const BasisLabel& l) { return module.act(x, l.lowering); });
}

BlockOperator verma_action(const Weight& lambda, std::size_t depth, const UEAElement& x) {
  GlAlgebra algebra(x.n);
  return verma_action(algebra, lambda, depth, x);
}

BlockOperator tensor_casimir_difference(GlAlgebra& algebra, const Weight& lambda, std::size_t depth,
                                        TensorFactor factor) {
  if (factor == TensorFactor::None) throw Error(ErrorCode::InvalidArgument, "a tensor factor is required");
  VermaModule module(algebra, lambda);
  TensorSpace space{module, factor, depth};
  const UEAElement c2 = algebra.casimir2();
  return assemble(space, true, [&](const BasisLabel& l) {
    ModuleVector v = space.apply_coproduct(c2, l);
    for (const auto& [l2, c] : space.apply_left(c2, l)) accumulate(v, l2, Rational(-c));
    return v;
  });
}

BlockOperator omega_operator(GlAlgebra& algebra, const Weight& lambda, std::size_t depth, TensorFactor factor) {
  BlockOperator op = tensor_casimir_difference(algebra, lambda, depth, factor);
  const Rational scale = factor == TensorFactor::VDual ? Rational(-1, 2) : Rational(1, 2);
  for (auto& b : op.blocks) {
    b.matrix -= RationalMatrix::identity(b.matrix.rows());
    b.matrix *= scale;
  }
  return op;
}

BlockOperator omega_operator(const Weight& lambda, std::size_t depth, TensorFactor factor) {
  GlAlgebra algebra(lambda.rank());
  return omega_operator(algebra, lambda, depth, factor);
}

OracleReport omega_spectrum_check(GlAlgebra& algebra, const Weight& lambda, std::size_t depth, TensorFactor factor) {
  if (factor == TensorFactor::None) throw Error(ErrorCode::InvalidArgument, "a tensor factor is required");
  if (!lambda.is_generic()) throw Error(ErrorCode::NonGenericWeight, "weight has a repeated entry");
  const std::size_t n = lambda.rank();
  const BlockOperator diff = tensor_casimir_difference(algebra, lambda, depth, factor);
  const BlockOperator omega = omega_operator(algebra, lambda, depth, factor);
  VermaModule module(algebra, lambda);

  OracleReport report;
  report.check = factor == TensorFactor::V ? "omega-V" : "omega-Vdual";
  report.lambda = lambda;
  report.depth = depth;
  report.factor = factor;
  report.passed = true;
  std::set<Rational> seen;

  for (std::size_t b = 0; b < omega.blocks.size(); ++b) {
    const VermaBlock& ob = omega.blocks[b];
    const RationalMatrix& om = ob.matrix;
    const std::size_t dim = om.rows();
    const RationalMatrix id = RationalMatrix::identity(dim);
    BlockCheck check;
    check.deficit = ob.deficit;
    check.dimension = dim;

    RationalMatrix prod = id;
    for (const auto& l : lambda.entries) prod = prod * (om - id * l);
    check.annihilated = prod.is_zero();

    // P_2(x) = (x+1)^2 - x^2,  Pbar_2(x) = (x-1)^2 - x^2
    const RationalMatrix shifted = factor == TensorFactor::V ? om + id : om - id;
    check.shift_identity = diff.blocks[b].matrix == square(shifted) - square(om);

    check.trace = om.trace();
    check.expected_trace = 0;
    for (std::size_t l = 1; l <= n; ++l) {
      // Weight multiplicity of the summand M_{lambda +- e_l} at this block.
      const WeightVector beta = factor == TensorFactor::V
                                    ? add(add(ob.deficit, unit(n, 1), -1), unit(n, l))
                                    : add(add(ob.deficit, unit(n, n)), unit(n, l), -1);
      const std::size_t mult = module.kostant(beta);
      check.expected_dimension += mult;
      check.expected_trace += lambda.entries[l - 1] * static_cast<long>(mult);
      if (mult != 0) {
        check.eigenvalues.push_back(lambda.entries[l - 1]);
        seen.insert(lambda.entries[l - 1]);
      }
    }
    std::sort(check.eigenvalues.begin(), check.eigenvalues.end(), std::greater<>());
    report.passed = report.passed && check.passed();
    report.blocks.push_back(std::move(check));
  }
  report.eigenvalues.assign(seen.rbegin(), seen.rend());
  return report;
}

OracleReport omega_spectrum_check(const Weight& lambda, std::size_t depth, TensorFactor factor) {
  GlAlgebra algebra(lambda.rank());
  return omega_spectrum_check(algebra, lambda, depth, factor);
}

OracleReport casimir_check(GlAlgebra& algebra, const Weight& lambda, std::size_t depth) {
  const std::size_t n = algebra.rank();
  const UEAElement c2 = algebra.casimir2();
  OracleReport report;
  report.check = "casimir";
  report.lambda = lambda;
  report.depth = depth;
  report.expected_scalar = 0;
  for (const auto& x : lambda.entries) report.expected_scalar += x * x;

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (!algebra.commutator(c2, algebra.element({i, j})).is_zero()) report.noncommuting.push_back({i, j});

  const BlockOperator op = verma_action(algebra, lambda, depth, c2);
  if (!op.block_diagonal) {
    report.non_scalar_blocks = 1;
  } else {
    for (const auto& b : op.blocks) {
      BlockCheck check;
      check.deficit = b.deficit;
      check.dimension = check.expected_dimension = b.matrix.rows();
      check.trace = b.matrix.trace();
      check.expected_trace = report.expected_scalar * static_cast<long>(b.matrix.rows());
      const bool scalar = b.matrix == RationalMatrix::identity(b.matrix.rows()) * report.expected_scalar;
      check.annihilated = check.shift_identity = scalar;
      if (!scalar) ++report.non_scalar_blocks;
      report.blocks.push_back(std::move(check));
    }
  }
  report.eigenvalues = {report.expected_scalar};
  report.passed = report.noncommuting.empty() && report.non_scalar_blocks == 0;
  return report;
}

OracleReport casimir_check(const Weight& lambda, std::size_t depth) {
  GlAlgebra algebra(lambda.rank());
  return casimir_check(algebra, lambda, depth);
}

}  // namespace hcbim
