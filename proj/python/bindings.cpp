#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcbim/error.hpp"
#include "hcbim/factor.hpp"
#include "hcbim/json_io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hcbim;

namespace {

// Rationals cross the boundary as fractions.Fraction; int, str and Fraction
// are accepted on the way in.
py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw Error(ErrorCode::ParseError, "floats are not exact scalars");
  return parse_rational(py::str(h).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(to_rational(x));
  return out;
}

py::object to_py(const Rational& x) { return fraction_type()(to_string(x)); }

py::list to_py(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list poly_to_py(const QPoly& p) { return to_py(p.coeffs()); }

py::dict witness_to_py(const Witness& w) {
  py::list alg;
  for (const auto& a : w.algebraic) alg.append(py::dict("poly"_a = poly_to_py(a.minimal_poly), "weight"_a = a.weight));
  return py::dict("B"_a = to_py(w.B), "C"_a = to_py(w.C), "algebraic"_a = alg);
}

py::dict decision_to_py(const Decision& d) {
  py::dict out("status"_a = to_string(d.status), "rank"_a = d.rank, "rank_profile"_a = d.rank_profile,
               "verified_order"_a = d.verified_order, "detail"_a = d.detail);
  if (d.witness) {
    out["witness"] = witness_to_py(*d.witness);
  } else if (d.approx_witness) {
    out["witness"] = py::dict("B"_a = d.approx_witness->B, "C"_a = d.approx_witness->C, "algebraic"_a = py::list());
  } else {
    out["witness"] = py::none();
  }
  return out;
}

Witness make_witness(const py::iterable& B, const py::iterable& C) {
  Witness w;
  w.B = to_rationals(B);
  w.C = to_rationals(C);
  w.reduce();
  return w;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_hcbim, m) {
  m.doc() = "Exact central-character differences, weight families and U(gl_n) oracles";

  static PyObject* error_type = py::exception<Error>(m, "HcbimError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "moments_from_witness",
      [](const py::iterable& B, const py::iterable& C, std::size_t K) {
        return to_py(moments_from_witness(make_witness(B, C), K).values);
      },
      "B"_a, "C"_a, "K"_a, "d_1..d_K of sum e^{bu} - sum e^{cu}");

  m.def(
      "divide_by_expm1",
      [](const py::iterable& d) {
        return to_py(divide_by_expm1(MomentSequence<Rational>{MomentKind::Difference, to_rationals(d)}).coeffs);
      },
      "d"_a, "Taylor data t_0..t_{K-1} of d(u) / (e^u - 1)");

  m.def(
      "character_from_weight",
      [](const py::iterable& lambda, std::size_t K) {
        return to_py(character_from_weight(Weight{to_rationals(lambda)}, K).moments.values);
      },
      "weight"_a, "K"_a, "power sums sum_i lambda_i^k, k = 1..K");

  m.def(
      "lemma9_difference",
      [](const py::iterable& mu, std::size_t r, std::size_t s, std::size_t K) {
        const auto res = lemma9_difference(Weight{to_rationals(mu)}, r, s, K);
        return py::dict("difference"_a = to_py(res.difference.values), "witness"_a = witness_to_py(res.witness));
      },
      "mu"_a, "r"_a, "s"_a, "K"_a);

  m.def(
      "decide",
      [](const py::iterable& chi, const py::iterable& psi, std::size_t max_nodes) {
        CentralCharacter a, b;
        a.moments.values = to_rationals(chi);
        b.moments.values = to_rationals(psi);
        return decision_to_py(decide_nonvanishing(a, b, max_nodes));
      },
      "chi"_a, "psi"_a, "max_nodes"_a = 6, "exact decision from two moment sequences");

  m.def(
      "decide_difference",
      [](const py::iterable& d, std::size_t max_nodes, const std::string& mode, double tol) {
        if (mode == "exact")
          return decision_to_py(decide_difference({MomentKind::Difference, to_rationals(d)}, max_nodes));
        if (mode != "float") throw Error(ErrorCode::InvalidArgument, "mode must be exact or float");
        std::vector<Complex> values;
        for (const auto& x : d) values.push_back(py::isinstance<py::float_>(x) || py::isinstance<py::int_>(x)
                                                     ? Complex(x.cast<double>(), 0.0)
                                                     : x.cast<Complex>());
        return decision_to_py(decide_difference({MomentKind::Difference, values}, max_nodes, Tolerance{tol}));
      },
      "d"_a, "max_nodes"_a = 6, "mode"_a = "exact", "tol"_a = 1e-9);

  m.def(
      "build_weight_family",
      [](const py::iterable& B, const py::iterable& C, const py::iterable& psi, std::size_t first, std::size_t last) {
        const Witness w = make_witness(B, C);
        CentralCharacter p;
        p.moments.values = to_rationals(psi);
        CentralCharacter chi;
        chi.moments.values = p.moments.values;
        const auto d = moments_from_witness(w, p.order());
        for (std::size_t i = 0; i < d.values.size(); ++i) chi.moments.values[i] += d.values[i];
        const auto fam = build_weight_family(w, p, {first, last});
        py::list entries;
        for (const auto& e : fam.entries) {
          py::dict item("n"_a = e.n, "valid_order"_a = e.valid_order);
          const auto lam = e.lambda(), mu = e.mu();
          item["lambda"] = lam ? py::object(to_py(lam->entries)) : py::object(py::none());
          item["mu"] = mu ? py::object(to_py(mu->entries)) : py::object(py::none());
          item["completion"] = poly_to_py(e.completion.poly);
          entries.append(item);
        }
        return py::dict("r"_a = fam.r, "s"_a = fam.s, "entries"_a = entries,
                        "verified"_a = verify_weight_family(fam, chi, p).passed);
      },
      "B"_a, "C"_a, "psi"_a, "first"_a, "last"_a);

  m.def(
      "factor",
      [](const py::iterable& coeffs) {
        py::list out;
        for (const auto& f : factor_rational(QPoly(to_rationals(coeffs))))
          out.append(py::make_tuple(poly_to_py(f.poly), f.multiplicity));
        return out;
      },
      "coeffs"_a, "monic irreducible factors over Q, coefficients low to high");

  m.def(
      "straighten",
      [](const std::vector<std::pair<std::size_t, std::size_t>>& word, std::size_t n) {
        GlAlgebra algebra(n);
        std::vector<Generator> w;
        for (const auto& [i, j] : word) w.push_back({i, j});
        return algebra.to_string(algebra.straighten(w));
      },
      "word"_a, "n"_a, "PBW normal form of E_{i1 j1} E_{i2 j2} ... as text");

  m.def(
      "casimir2",
      [](std::size_t n) {
        GlAlgebra algebra(n);
        return algebra.to_string(algebra.casimir2());
      },
      "n"_a);

  m.def(
      "tensor_weight_multiset",
      [](std::size_t n, std::size_t r, std::size_t s) {
        py::dict out;
        for (const auto& [w, mult] : tensor_weight_multiset(n, r, s)) out[py::tuple(py::cast(w))] = mult;
        return out;
      },
      "n"_a, "r"_a, "s"_a);

  m.def(
      "omega_spectrum_check",
      [](const py::iterable& lambda, std::size_t depth, const std::string& factor) {
        if (factor != "V" && factor != "V*") throw Error(ErrorCode::InvalidArgument, "factor must be V or V*");
        const auto f = factor == "V" ? TensorFactor::V : TensorFactor::VDual;
        return json_to_py(to_json(omega_spectrum_check(Weight{to_rationals(lambda)}, depth, f)));
      },
      "weight"_a, "depth"_a = 2, "factor"_a = "V");

  m.def(
      "casimir_check",
      [](const py::iterable& lambda, std::size_t depth) {
        return json_to_py(to_json(casimir_check(Weight{to_rationals(lambda)}, depth)));
      },
      "weight"_a, "depth"_a = 2);
}
