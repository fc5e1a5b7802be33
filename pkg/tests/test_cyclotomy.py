"""Trace counts, Gaussian periods, and period polynomials."""

import pytest

from iccodes import build_field
from iccodes.cyclotomy import (class_of, compute_period_polynomial,
                               gaussian_periods, period_polynomial,
                               trace_count_matrix)
from iccodes.gf import ZERO, FieldError


def test_class_of():
    f = build_field(11, 2)
    assert class_of(7, 5, f) == 2
    assert class_of(120 - 1, 5, f) == 4
    with pytest.raises(FieldError):
        class_of(ZERO, 5, f)
    with pytest.raises(FieldError):
        class_of(3, 7, f)  # 7 does not divide 120


def test_trace_count_matrix_invariants():
    f = build_field(11, 2)
    mat = trace_count_matrix(f, 5)
    assert mat.counts.shape == (5, 11)
    assert (mat.counts.sum(axis=1) == 24).all()
    col = mat.counts.sum(axis=0)
    assert col[0] == 10 and (col[1:] == 11).all()


def test_integer_periods_gf361_n5():
    f = build_field(19, 2)
    ps = gaussian_periods(trace_count_matrix(f, 5))
    assert ps.all_exact
    assert sorted(ps.values) == [-4, -4, -4, -4, 15]
    assert sum(ps.values) == -1


def test_periods_sum_and_omega_choice_invariance():
    # a case with genuinely complex periods
    f = build_field(7, 2)
    mat = trace_count_matrix(f, 6)
    ps1 = gaussian_periods(mat, omega_power=1)
    ps2 = gaussian_periods(mat, omega_power=3)
    assert not ps1.all_exact
    v1 = sorted(ps1.values, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    v2 = sorted(ps2.values, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    assert all(abs(a - b) < 1e-9 for a, b in zip(v1, v2))
    with pytest.raises(FieldError):
        gaussian_periods(mat, omega_power=7)


def test_period_polynomial_exact_integer_roots():
    f = build_field(2, 4)  # GF(16), N = 5: psi = (X-3)(X+1)^4
    pp = compute_period_polynomial(f, 5)
    assert pp.exact
    assert pp.coeffs == [-3, -11, -14, -6, 1, 1]
    assert pp(3) == 0 and pp(-1) == 0


def test_period_polynomial_complex_periods_integer_coeffs():
    f = build_field(7, 2)
    pp = compute_period_polynomial(f, 6)
    assert not pp.exact
    assert all(isinstance(c, int) for c in pp.coeffs)
    assert len(pp.coeffs) == 7 and pp.coeffs[-1] == 1
    # the product of the periods is (-1)^6 * constant term
    assert pp.coeffs[0] == -104


def test_period_polynomial_semiprimitive_gf49_n8():
    f = build_field(7, 2)  # psi = (X-6)(X+1)^7
    pp = compute_period_polynomial(f, 8)
    assert pp.exact
    assert pp.coeffs == [-6, -41, -119, -189, -175, -91, -21, 1, 1]


def test_period_polynomial_quadratic_baseline():
    # GF(9), N = 2: the two periods are 1 and -2
    f = build_field(3, 2)
    ps = gaussian_periods(trace_count_matrix(f, 2))
    assert sorted(ps.values) == [-2, 1]
    assert period_polynomial(ps).coeffs == [-2, 1, 1]
