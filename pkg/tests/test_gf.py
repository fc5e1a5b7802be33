"""Field-table construction and arithmetic."""

import numpy as np
import pytest

from iccodes import gf
from iccodes.gf import ZERO, FieldCapError, FieldError, build_field


def test_smallest_irreducible_moduli():
    # ascending coefficients; these are the classical smallest-first choices
    assert gf.find_irreducible(2, 3) == [1, 1, 0, 1]       # x^3 + x + 1
    assert gf.find_irreducible(2, 4) == [1, 1, 0, 0, 1]    # x^4 + x + 1
    assert gf.find_irreducible(3, 2) == [1, 0, 1]          # x^2 + 1
    assert gf.find_irreducible(5, 1) == [0, 1]             # x itself


def test_build_field_rejects_bad_inputs():
    with pytest.raises(FieldError):
        build_field(4, 2)
    with pytest.raises(FieldError):
        build_field(7, 0)
    with pytest.raises(FieldCapError):
        build_field(2, 30, cap=1 << 20)


def test_exp_log_roundtrip_gf25():
    f = build_field(5, 2)
    assert f.order == 25
    # exp and log tables are mutually inverse on the 24 nonzero elements
    for e in range(24):
        assert f.log(f.packed(e)) == e
    assert sorted(int(v) for v in f.exp_table) == list(range(1, 25))
    assert f.log(0) == ZERO


def test_arithmetic_consistency_gf25():
    f = build_field(5, 2)
    rm1 = 24
    for a in range(rm1):
        assert f.mul(a, f.inv(a)) == 0          # a * a^-1 = 1 = alpha^0
        assert f.add(a, f.neg(a)) == ZERO       # a + (-a) = 0
        assert f.pow(a, 24) == 0                # Lagrange
    assert f.mul(ZERO, 3) == ZERO
    assert f.pow(ZERO, 0) == 0
    with pytest.raises(ZeroDivisionError):
        f.inv(ZERO)


def test_addition_matches_packed_arithmetic_gf8():
    f = build_field(2, 3)
    for a in range(7):
        for b in range(7):
            expected = f.packed_add(f.packed(a), f.packed(b))
            got = f.add(a, b)
            assert (0 if got == ZERO else f.packed(got)) == expected


def test_determinism():
    f1 = build_field(3, 4)
    f2 = build_field(3, 4)
    assert f1.modulus == f2.modulus
    assert f1.alpha == f2.alpha
    assert (f1.exp_table == f2.exp_table).all()


def test_trace_kernel_size_gf121_over_gf11():
    f = build_field(11, 2)
    kernel = sum(1 for x in range(120) if f.rel_trace(x, 11) == ZERO) + 1
    assert kernel == 11  # r/q elements of GF(121) have zero trace to GF(11)


def test_trace_table_matches_scalar_trace():
    f = build_field(3, 4)  # GF(81)
    for q in (3, 9):
        table = f.rel_trace_table(q)
        for e in range(80):
            t = f.rel_trace(e, q)
            assert table[e] == (0 if t == ZERO else f.packed(t))


def test_trace_is_linear_and_frobenius_invariant():
    f = build_field(5, 2)
    q, rm1 = 5, 24
    def tr(x):
        return ZERO if x == ZERO else f.rel_trace(x, q)

    for a in range(rm1):
        for b in range(0, rm1, 5):
            assert tr(f.add(a, b)) == f.add(tr(a), tr(b))
        assert f.rel_trace(f.pow(a, q), q) == f.rel_trace(a, q)


def test_trace_lands_in_subfield():
    f = build_field(2, 6)
    for q in (2, 4, 8):
        table = f.rel_trace_table(q)
        for e in range(0, 63, 5):
            t = f.rel_trace(e, q)
            assert t == ZERO or f.in_subfield(t, q)
            assert table[e] == (0 if t == ZERO else f.packed(t))


def test_subfield_labels():
    f = build_field(3, 2)  # GF(9) over GF(3)
    assert f.subfield_label(ZERO, 3) == 0
    g = (f.order - 1) // 2  # alpha^4 generates GF(3)*
    assert f.subfield_label(g, 3) == 2
    assert f.subfield_label(0, 3) == 1  # alpha^0 = 1 = g^0
    with pytest.raises(FieldError):
        f.subfield_label(1, 3)  # alpha itself is not in GF(3)


def test_natural_labels_prime_field():
    f = build_field(7, 1)
    residues = sorted(f.natural_label(e) for e in range(6))
    assert residues == [1, 2, 3, 4, 5, 6]


def test_subfield_degree_validation():
    f = build_field(2, 6)
    assert f.subfield_degree(4) == 2
    with pytest.raises(FieldError):
        f.subfield_degree(16)  # 4 does not divide 6
    with pytest.raises(FieldError):
        f.subfield_degree(6)   # not a power of p
