"""Cyclotomic classes, Gaussian periods, and the period polynomial.

Everything here is computed from first principles (one full pass over
the multiplicative group), so it serves as the oracle against which the
closed-form factorizations in the analytic module are checked.

The canonical additive character is chi(x) = omega^t(x), where t(x) is
the absolute trace of x identified with a residue in [0, p-1] and omega
is a primitive complex p-th root of unity.  A period is stored as an
exact integer whenever its class has uniform trace counts over the
nonzero residues (which covers every semiprimitive case); otherwise it
is a complex double.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .gf import ZERO, FieldError, FieldTable

COEFF_TOL = 1e-3        # numeric psi coefficient must be this close to an integer
SUM_TOL_SCALE = 1e-6    # tolerance for sum(eta) = -1 is SUM_TOL_SCALE * sqrt(r)


def class_of(x: int, N: int, field: FieldTable) -> int:
    """Index i of the cyclotomic class alpha^i <alpha^N> containing x."""
    if x == ZERO:
        raise FieldError("zero element belongs to no cyclotomic class")
    if (field.order - 1) % N:
        raise FieldError(f"N = {N} does not divide r-1 = {field.order - 1}")
    return x % N


@dataclass
class TraceCountMatrix:
    """counts[i][j] = number of x in class i with absolute trace residue j."""

    N: int
    p: int
    r: int
    counts: np.ndarray  # shape (N, p)

    def check(self) -> None:
        rm1 = self.r - 1
        assert (self.counts.sum(axis=1) == rm1 // self.N).all(), "class sizes unequal"
        col = self.counts.sum(axis=0)
        assert col[0] == self.r // self.p - 1, "trace kernel size wrong"
        assert (col[1:] == self.r // self.p).all(), "trace fibers unbalanced"


def trace_count_matrix(field: FieldTable, N: int) -> TraceCountMatrix:
    """Tally absolute traces of F_r* by cyclotomic class in one pass."""
    rm1 = field.order - 1
    if rm1 % N:
        raise FieldError(f"N = {N} does not divide r-1 = {rm1}")
    traces = field.rel_trace_table(field.p)  # packed == residue for GF(p) values
    cls = np.arange(rm1, dtype=np.int64) % N
    flat = np.bincount(cls * field.p + traces, minlength=N * field.p)
    mat = TraceCountMatrix(N=N, p=field.p, r=field.order,
                           counts=flat.reshape(N, field.p))
    mat.check()
    return mat


@dataclass
class GaussianPeriodSet:
    """The N Gaussian periods, exact integers where possible."""

    values: list  # int entries (exact) or complex entries (numeric)
    source: TraceCountMatrix

    @property
    def all_exact(self) -> bool:
        return all(isinstance(v, int) for v in self.values)

    def check_sum(self) -> None:
        total = sum(self.values)
        if self.all_exact:
            assert total == -1, f"sum of periods is {total}, expected -1"
        else:
            tol = SUM_TOL_SCALE * self.source.r ** 0.5
            assert abs(total - (-1)) < tol, f"sum of periods {total} not within {tol} of -1"


def gaussian_periods(matrix: TraceCountMatrix, omega_power: int = 1) -> GaussianPeriodSet:
    """Evaluate eta_i = sum_j counts[i][j] * omega^j.

    omega_power replaces omega by omega^t (gcd(t, p) = 1); the multiset
    of periods must be independent of that choice.
    """
    p = matrix.p
    if omega_power % p == 0:
        raise FieldError("omega power must be coprime to p")
    values = []
    for row in matrix.counts:
        nz = row[1:]
        if p == 2 or (nz == nz[0]).all():
            values.append(int(row[0]) - int(row[1]))
        else:
            eta = complex(row[0])
            for j in range(1, p):
                eta += int(row[j]) * cmath.exp(2j * cmath.pi * (j * omega_power % p) / p)
            values.append(eta)
    ps = GaussianPeriodSet(values=values, source=matrix)
    ps.check_sum()
    return ps


@dataclass
class PeriodPolynomial:
    """Monic integer polynomial with the Gaussian periods as roots."""

    coeffs: list  # ascending, length N+1, integer
    exact: bool

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _cyclotomic_expand(matrix: TraceCountMatrix) -> list:
    """Expand prod(X - eta_i) with exact arithmetic in Z[omega].

    Coefficients live in Z[x]/(x^p - 1) during the expansion (eta_i is
    the vector of its trace counts); a result vector represents a
    rational integer iff its coordinates 1..p-1 are all equal, in which
    case the value is v[0] - v[1].
    """
    p = matrix.p

    def cyc_mul(a, b):
        out = [0] * p
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[(i + j) % p] += ai * bj
        return out

    coeffs = [[1] + [0] * (p - 1)]
    for row in matrix.counts:
        neg_eta = [-int(c) for c in row]
        new = [[0] * p for _ in range(len(coeffs) + 1)]
        for i, vec in enumerate(coeffs):
            for j in range(p):
                new[i + 1][j] += vec[j]
            prod = cyc_mul(neg_eta, vec)
            for j in range(p):
                new[i][j] += prod[j]
        coeffs = new
    out = []
    for vec in coeffs:
        tail = vec[1:]
        if tail and any(t != tail[0] for t in tail):
            raise FieldError(
                f"period polynomial coefficient {vec} is not a rational integer "
                "(period computation bug)")
        out.append(vec[0] - (tail[0] if tail else 0))
    return out


def period_polynomial(periods: GaussianPeriodSet) -> PeriodPolynomial:
    """Expand prod(X - eta_i) into a monic integer polynomial.

    Integer periods are expanded directly; otherwise the expansion runs
    in exact cyclotomic-integer arithmetic, so the result is exact in
    both cases (no floating-point rounding enters the coefficients).
    """
    if periods.all_exact:
        coeffs = [1]
        for eta in periods.values:
            coeffs = [0] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= eta * coeffs[i + 1]
        return PeriodPolynomial(coeffs=coeffs, exact=True)

    coeffs = _cyclotomic_expand(periods.source)
    # numeric sanity: the complex evaluations must agree with the exact result
    poly = np.array([1.0 + 0j])
    for eta in periods.values:
        poly = np.convolve(poly, np.array([-eta, 1.0]))
    scale = max(1.0, float(np.abs(poly).max()))
    if np.abs(poly - np.array(coeffs, dtype=complex)).max() > COEFF_TOL * scale:
        raise FieldError("numeric periods disagree with exact expansion "
                         "(period computation bug)")
    return PeriodPolynomial(coeffs=coeffs, exact=False)


def compute_period_polynomial(field: FieldTable, N: int) -> PeriodPolynomial:
    """Convenience pipeline: counts -> periods -> polynomial."""
    return period_polynomial(gaussian_periods(trace_count_matrix(field, N)))
