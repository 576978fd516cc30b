"""Exact central-character differences for gl_n, weight families and
brute-force U(gl_n) oracles.

Rational inputs may be ints, strings like "3/2" or fractions.Fraction;
rational outputs are Fractions.
"""

from ._hcbim import (
    HcbimError,
    build_weight_family,
    casimir2,
    casimir_check,
    character_from_weight,
    decide,
    decide_difference,
    divide_by_expm1,
    factor,
    lemma9_difference,
    moments_from_witness,
    omega_spectrum_check,
    straighten,
    tensor_weight_multiset,
)

__all__ = [
    "HcbimError",
    "build_weight_family",
    "casimir2",
    "casimir_check",
    "character_from_weight",
    "decide",
    "decide_difference",
    "divide_by_expm1",
    "factor",
    "lemma9_difference",
    "moments_from_witness",
    "omega_spectrum_check",
    "straighten",
    "tensor_weight_multiset",
]
