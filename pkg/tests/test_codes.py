"""Code construction and exhaustive weight enumeration."""

import pytest

from iccodes.codes import (brute_weight_distribution, build_code, codeword,
                           count_Z, weight_from_Z, weight_from_period)
from iccodes.gf import ZERO, FieldCapError, FieldError

DESK_DISTRIBUTIONS = [
    ((11, 1, 2, 5), {0: 1, 22: 120}),
    ((7, 1, 2, 6), {0: 1, 6: 24, 8: 24}),
    ((29, 1, 2, 7), {0: 1, 116: 840}),
    ((2, 1, 6, 7), {0: 1, 2: 9, 4: 27, 6: 27}),
    ((3, 2, 2, 8), {0: 1, 8: 40, 10: 40}),
    ((17, 1, 2, 8), {0: 1, 32: 144, 36: 144}),
    ((5, 2, 2, 6), {0: 1, 96: 312, 104: 312}),
]


@pytest.mark.parametrize("params,expected", DESK_DISTRIBUTIONS)
def test_brute_distributions_both_methods(params, expected):
    spec = build_code(*params)
    direct = brute_weight_distribution(spec, method="direct")
    accel = brute_weight_distribution(spec, method="class")
    assert direct.counts == expected
    assert accel.counts == expected


def test_build_code_validation():
    with pytest.raises(FieldError):
        build_code(7, 1, 2, 5)  # 5 does not divide 48
    with pytest.raises(FieldError):
        build_code(11, 1, 2, 1)
    with pytest.raises(FieldCapError):
        build_code(2, 1, 30, 3, cap=1 << 20)


def test_codeword_symbols_and_length():
    spec = build_code(7, 1, 2, 6)
    zero = codeword(spec, ZERO, labels="natural")
    assert zero == [0] * 8
    words = [codeword(spec, b, labels="natural") for b in range(48)]
    assert all(len(w) == 8 and all(0 <= x < 7 for x in w) for w in words)
    weights = sorted(sum(1 for x in w if x) for w in words)
    assert weights == [6] * 24 + [8] * 24


def test_codeword_exponent_labels_extension_symbols():
    spec = build_code(5, 2, 2, 6)  # symbols in GF(25)
    word = codeword(spec, 0, labels="exponent")
    assert len(word) == 104
    assert all(0 <= x <= 25 for x in word)  # 0 plus the 24 subfield generators
    with pytest.raises(FieldError):
        codeword(spec, 0, labels="natural")  # GF(25) has no residue labels


def test_codewords_shifted_by_theta_are_cyclic_shifts():
    spec = build_code(11, 1, 2, 5)
    w1 = codeword(spec, 7, labels="natural")
    w2 = codeword(spec, (7 + spec.N) % (spec.r - 1), labels="natural")
    assert w2 == w1[1:] + w1[:1]


def test_count_Z_weight_identity():
    spec = build_code(11, 1, 2, 5)
    direct = brute_weight_distribution(spec, method="direct")
    for b in range(10):
        w = spec.n - (count_Z(spec, b) - 1) // spec.N
        assert w == weight_from_Z(spec, count_Z(spec, b))
        assert w in direct.counts
    with pytest.raises(FieldError):
        count_Z(spec, ZERO)


def test_weight_from_period():
    spec = build_code(19, 1, 2, 5)
    # periods 15 and -4 give the two candidate weights 54 and 72
    assert weight_from_period(spec, 15) == 54
    assert weight_from_period(spec, -4) == 72
    direct = brute_weight_distribution(spec, method="direct")
    assert set(direct.nonzero()) <= {54, 72}


def test_weight_from_period_requires_subfield_in_c0():
    spec = build_code(5, 2, 2, 6)  # (r-1)/(q-1) = 26, not divisible by 6
    with pytest.raises(FieldError):
        weight_from_period(spec, 0)


def test_dimension_from_distinct_codewords():
    assert brute_weight_distribution(build_code(2, 1, 6, 7)).dim == 6
    assert brute_weight_distribution(build_code(5, 2, 2, 6)).dim == 2
    assert brute_weight_distribution(build_code(11, 1, 2, 5)).dim == 2


def test_distribution_invariants_check():
    spec = build_code(13, 1, 2, 7)
    dist = brute_weight_distribution(spec)
    dist.check()
    assert sum(dist.counts.values()) == 169
    assert sum(w * c for w, c in dist.counts.items()) == spec.n * 12 * 169 // 13


def test_parallel_direct_matches_serial():
    spec = build_code(17, 1, 2, 8)
    serial = brute_weight_distribution(spec, method="direct", workers=1)
    parallel = brute_weight_distribution(spec, method="direct", workers=2)
    assert serial.counts == parallel.counts
