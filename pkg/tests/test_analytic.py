"""Closed-form classification, enumerators, and psi factorizations."""

import pytest

from iccodes import build_field
from iccodes.analytic import (NOT_DESK_SCALE_FAMILY, AnalyticError, classify,
                              predicted_enumerator,
                              predicted_period_polynomial, solve_quadratic_form,
                              three_weight_enumerator_T3_19)
from iccodes.codes import brute_weight_distribution, build_code
from iccodes.cyclotomy import compute_period_polynomial

CLASSIFICATION_CASES = [
    ((11, 1, 2, 5), "T3.3"),
    ((7, 1, 2, 6), "T3.12ii"),
    ((29, 1, 2, 7), "T3.15"),
    ((2, 1, 6, 7), "T3.19"),
    ((17, 1, 3, 8), "T3.22"),
    ((3, 2, 2, 8), "T3.26"),
    ((17, 1, 2, 8), "T3.28ii"),
    ((5, 2, 2, 6), "T3.10ii"),
    ((7, 1, 5, 6), "T3.8"),
    ((19, 2, 5, 5), "T3.5ii"),
    ((2, 4, 10, 5), "T3.6i"),
    ((13, 2, 7, 7), "T3.17ii"),
    ((3, 6, 7, 7), "T3.18ii"),
    ((5, 2, 8, 8), "T3.25i"),
    ((17, 1, 8, 8), "T3.28i"),
    ((13, 1, 3, 6), "NONE"),
    ((13, 1, 6, 6), "T3.12i"),
    ((31, 1, 3, 5), "T3.3"),
]


@pytest.mark.parametrize("params,tid", CLASSIFICATION_CASES)
def test_classification(params, tid):
    assert classify(*params).theorem_id == tid


def test_classify_requires_divisibility():
    with pytest.raises(AnalyticError):
        classify(7, 1, 2, 5)


def test_solve_quadratic_form_fixtures():
    assert (3, 1) in solve_quadratic_form("c2_7d2", 16).solutions
    assert (1, 1) in solve_quadratic_form(
        "w2_4z2", 5, mod=4, residues=(1,), coprime_to=5).solutions
    assert (3, 2) in solve_quadratic_form(
        "l2_2t2", 17, mod=8, residues=(1, 3), coprime_to=17).solutions
    with pytest.raises(AnalyticError):
        solve_quadratic_form("c2_4d2", 3)  # no representation
    with pytest.raises(AnalyticError):
        solve_quadratic_form("c2_4d2", -5)


ENUMERATOR_MATCHES = [
    (11, 1, 2, 5),
    (7, 1, 2, 6),
    (29, 1, 2, 7),
    (3, 2, 2, 8),
    (17, 1, 2, 8),
    (5, 2, 2, 6),
    (17, 1, 3, 8),
]


@pytest.mark.parametrize("params", ENUMERATOR_MATCHES)
def test_predicted_enumerator_matches_brute_force(params):
    case = classify(*params)
    pe, reason = predicted_enumerator(case, *params)
    assert pe is not None, reason
    brute = brute_weight_distribution(build_code(*params))
    assert dict(pe.terms) == brute.nonzero()


def test_cubic_seven_weight_formula_fails_both_readings():
    # (2,1,6,7): the closed form breaks under both readings of the digit
    # parameter; the exhaustive distribution {2:9, 4:27, 6:27} stands alone
    pe, diag = three_weight_enumerator_T3_19(2, 2)
    assert pe is None and diag["failures"]
    pe, diag = three_weight_enumerator_T3_19(2, 2, a=1)
    assert pe is None and diag["failures"]


@pytest.mark.parametrize("params", [(19, 2, 5, 5), (5, 2, 8, 8), (17, 1, 8, 8)])
def test_symbolic_enumerators_beyond_desk_scale(params):
    case = classify(*params)
    assert case.theorem_id in NOT_DESK_SCALE_FAMILY
    pe, reason = predicted_enumerator(case, *params)
    assert pe is not None, reason
    pe.check(*params)  # count sum, integrality, first moment
    r = params[0] ** (params[1] * params[2])
    assert sum(c for _, c in pe.terms) == r - 1


PSI_ROOT_FIXTURES = [
    ((19, 1, 2, 5), {15: 1, -4: 4}),
    ((2, 1, 4, 5), {3: 1, -1: 4}),
    ((5, 1, 2, 6), {4: 1, -1: 5}),
    ((13, 1, 2, 7), {11: 1, -2: 6}),
    ((7, 1, 2, 8), {6: 1, -1: 7}),
]


@pytest.mark.parametrize("params,roots", PSI_ROOT_FIXTURES)
def test_semiprimitive_psi_roots(params, roots):
    psi = predicted_period_polynomial(*params)
    assert psi.kind == "factored"
    assert dict(psi.roots) == roots
    f = build_field(params[0], params[1] * params[2])
    assert compute_period_polynomial(f, params[3]).coeffs == psi.coeffs


@pytest.mark.parametrize("params", [(3, 1, 4, 8), (5, 1, 2, 8), (17, 1, 2, 8),
                                    (17, 1, 4, 8), (5, 1, 4, 8), (2, 1, 8, 5)])
def test_quartic_psi_branches_match_computed(params):
    psi = predicted_period_polynomial(*params)
    assert psi.kind == "factored"
    f = build_field(params[0], params[1] * params[2])
    computed = compute_period_polynomial(f, params[3]).coeffs
    candidates = psi.candidates or [psi.coeffs]
    assert computed in candidates


def test_irreducible_psi_prediction():
    psi = predicted_period_polynomial(11, 1, 1, 5)
    assert psi.kind == "irreducible"
    f = build_field(11, 1)
    pp = compute_period_polynomial(f, 5)
    assert pp.coeffs == [1, 3, -3, -4, 1, 1]
    assert all(pp(x) != 0 for x in (-4, -3, -2, -1, 0, 1, 2, 3, 4))


def test_unsupported_psi_is_flagged():
    psi = predicted_period_polynomial(13, 1, 3, 6)
    assert psi.kind == "unsupported"
    assert psi.notes
