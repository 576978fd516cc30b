from fractions import Fraction

import pytest

import hcbim


def test_moments_and_division():
    d = hcbim.moments_from_witness([4], [-1], 4)
    assert d == [0, 10, 60, 370]
    assert all(isinstance(x, Fraction) for x in d)
    assert hcbim.divide_by_expm1(d) == [0, 5, 15, 65]
    assert hcbim.divide_by_expm1([Fraction(1), 1, "1", "2/2"]) == [1, 0, 0, 0]


def test_characters():
    assert hcbim.character_from_weight([4, 1, 0], 3) == [5, 17, 65]
    res = hcbim.lemma9_difference([4, 1, 0], 1, 1, 3)
    assert res["difference"] == [0, 10, 60]
    assert res["witness"]["B"] == [4] and res["witness"]["C"] == [-1]


def test_decide_exact_and_float():
    dec = hcbim.decide_difference([0, 10, 60, 370, 2100], max_nodes=2)
    assert dec["status"] == "NONZERO_WITNESS"
    assert dec["witness"]["B"] == [Fraction(4)]
    assert dec["verified_order"] == 5

    approx = hcbim.decide_difference([0, 10, 60, 370, 2100], max_nodes=2, mode="float")
    assert approx["status"] == "NONZERO_WITNESS"
    assert abs(approx["witness"]["B"][0] - 4) < 1e-9

    chi = hcbim.character_from_weight([5, 1, -1], 5)
    psi = hcbim.character_from_weight([4, 1, 0], 5)
    assert hcbim.decide(chi, psi, max_nodes=2)["witness"]["C"] == [-1]

    impulse = [1] + [0] * 11
    assert hcbim.decide_difference(impulse, max_nodes=5)["status"] == "NO_WITNESS_WITHIN_BOUND"
    assert hcbim.decide_difference([0, 10, 60], max_nodes=2)["status"] == "INCONCLUSIVE"


def test_errors_surface_as_exceptions():
    with pytest.raises(hcbim.HcbimError, match="RankTooSmall"):
        hcbim.lemma9_difference([1, 2], 2, 1, 3)
    with pytest.raises(hcbim.HcbimError):
        hcbim.character_from_weight([0.5], 2)
    with pytest.raises(ValueError):
        hcbim.moments_from_witness(["1/0"], [], 2)


def test_family():
    fam = hcbim.build_weight_family([4], [-1], hcbim.character_from_weight([4, 1, 1, 0], 2), 4, 4)
    assert fam["verified"]
    (entry,) = fam["entries"]
    assert entry["mu"] == [4, 1, 1, 0]
    assert entry["lambda"] == [5, 1, 1, -1]


def test_algebra():
    assert hcbim.straighten([(1, 2), (2, 1)], 2) == "-E22 + E11 + E21*E12"
    assert hcbim.tensor_weight_multiset(2, 1, 1) == {(0, 0): 2, (1, -1): 1, (-1, 1): 1}
    assert hcbim.factor([-2, 0, 1]) == [([-2, 0, 1], 1)]
    rep = hcbim.omega_spectrum_check([4, 1, 0], 2, "V")
    assert rep["status"] == "pass"
    assert rep["detail"]["eigenvalues"] == ["4", "1", "0"]
    assert hcbim.casimir_check([3, 1], 3)["status"] == "pass"
