"""Irreducible cyclic code construction and exhaustive weight counting.

A code is determined by (p, s, m, N): symbols live in GF(q), q = p^s,
the ambient field is GF(r), r = q^m, the length is n = (r-1)/N, and the
codeword attached to beta is (Tr(beta), Tr(beta*theta), ...,
Tr(beta*theta^(n-1))) with theta = alpha^N.

Two independent enumeration routes are provided:

* the direct route visits every beta and counts its nonzero coordinates;
* ``count_Z`` counts solutions of Tr(a x^N) = 0 by looping over all of
  F_r with scalar field operations, from which the weight follows as
  n - (Z-1)/N.

The direct route is the ground truth whenever anything disagrees.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gf import DEFAULT_FIELD_CAP, ZERO, FieldError, FieldTable, build_field


@dataclass
class CodeSpec:
    p: int
    s: int
    m: int
    N: int
    field: FieldTable

    @property
    def q(self) -> int:
        return self.p ** self.s

    @property
    def r(self) -> int:
        return self.q ** self.m

    @property
    def n(self) -> int:
        return (self.r - 1) // self.N

    @property
    def theta(self) -> int:
        return self.N  # exponent of alpha^N


def build_code(p: int, s: int, m: int, N: int, cap: int = DEFAULT_FIELD_CAP) -> CodeSpec:
    if N <= 1:
        raise FieldError(f"N must exceed 1, got {N}")
    r = p ** (s * m)
    if (r - 1) % N:
        raise FieldError(f"N = {N} does not divide r-1 = {r - 1}; no code C(r,{N}) exists")
    field = build_field(p, s * m, cap=cap)
    return CodeSpec(p=p, s=s, m=m, N=N, field=field)


def codeword(spec: CodeSpec, beta: int, labels: str = "exponent") -> list:
    """Symbol labels of c(beta); beta is an element exponent or ZERO."""
    f = spec.field
    rm1 = spec.r - 1
    out = []
    for j in range(spec.n):
        if beta == ZERO:
            t = ZERO
        else:
            t = f.rel_trace((beta + j * spec.N) % rm1, spec.q)
        if labels == "natural":
            out.append(0 if t == ZERO else f.natural_label(t))
        else:
            out.append(f.subfield_label(t, spec.q))
    return out


def _nonzero_trace_indicator(spec: CodeSpec) -> np.ndarray:
    """T[e] = 1 iff Tr_{r/q}(alpha^e) != 0, for e in [0, r-2]."""
    return (spec.field.rel_trace_table(spec.q) != 0).astype(np.uint8)


def _direct_weights_range(T: np.ndarray, N: int, start: int, stop: int,
                          chunk: int = 2048) -> np.ndarray:
    """Weight of c(alpha^b) for each b in [start, stop): per-beta coordinate sums."""
    rm1 = len(T)
    n = rm1 // N
    j = np.arange(n, dtype=np.int64) * N
    out = np.empty(stop - start, dtype=np.int64)
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        b = np.arange(lo, hi, dtype=np.int64)
        idx = (b[:, None] + j[None, :]) % rm1
        out[lo - start:hi - start] = T[idx].sum(axis=1, dtype=np.int64)
    return out


def _worker(args):
    T, N, start, stop = args
    return _direct_weights_range(T, N, start, stop)


@dataclass
class WeightDistribution:
    counts: dict  # weight -> number of beta values
    n: int
    q: int
    r: int
    dim: int      # log_q of the number of distinct codewords

    def check(self) -> None:
        assert sum(self.counts.values()) == self.r, "beta values not all counted"
        assert all(0 <= w <= self.n for w in self.counts), "weight out of range"
        first_moment = sum(w * c for w, c in self.counts.items())
        expected = self.n * (self.q - 1) * self.r // self.q
        assert first_moment == expected, (
            f"first moment {first_moment} != n(q-1)r/q = {expected}")

    def nonzero(self) -> dict:
        return {w: c for w, c in self.counts.items() if w > 0}


def _distribution_from_weights(spec: CodeSpec, weights: np.ndarray) -> WeightDistribution:
    counts: dict = {0: 1}  # beta = 0
    vals, cnts = np.unique(weights, return_counts=True)
    for w, c in zip(vals.tolist(), cnts.tolist()):
        counts[w] = counts.get(w, 0) + c
    kernel = counts.get(0, 1)  # beta values mapping to the zero codeword
    distinct = spec.r // kernel
    dim = round(math.log(distinct, spec.q))
    assert spec.q ** dim == distinct, "distinct codeword count is not a power of q"
    dist = WeightDistribution(counts=counts, n=spec.n, q=spec.q, r=spec.r, dim=dim)
    dist.check()
    return dist


def brute_weight_distribution(spec: CodeSpec, method: str = "direct",
                              workers: int = 1) -> WeightDistribution:
    """Exhaustive weight distribution over all r values of beta.

    method "direct" sums coordinates for every beta; "class" computes one
    representative weight per cyclotomic class and scales by class size.
    """
    T = _nonzero_trace_indicator(spec)
    rm1 = spec.r - 1
    if method == "class":
        per_class = np.bincount(np.arange(rm1, dtype=np.int64) % spec.N,
                                weights=T, minlength=spec.N).astype(np.int64)
        weights = np.repeat(per_class, rm1 // spec.N)
    elif method == "direct":
        if workers > 1:
            bounds = np.linspace(0, rm1, workers + 1, dtype=int)
            jobs = [(T, spec.N, int(a), int(b))
                    for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_worker, jobs))
            weights = np.concatenate(parts)
        else:
            weights = _direct_weights_range(T, spec.N, 0, rm1)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _distribution_from_weights(spec, weights)


def count_Z(spec: CodeSpec, a: int) -> int:
    """Number of x in F_r with Tr(a x^N) = 0, by scalar enumeration."""
    if a == ZERO:
        raise FieldError("count_Z requires a nonzero multiplier")
    f = spec.field
    z = 1  # x = 0
    for e in range(spec.r - 1):
        if f.rel_trace(f.mul(a, f.pow(e, spec.N)), spec.q) == ZERO:
            z += 1
    if (z - 1) % spec.N:
        raise FieldError(f"Z - 1 = {z - 1} not divisible by N = {spec.N} (count_Z bug)")
    return z


def weight_from_Z(spec: CodeSpec, Z: int) -> int:
    """wt = n - (Z-1)/N."""
    if (Z - 1) % spec.N:
        raise FieldError(f"Z - 1 = {Z - 1} not divisible by N = {spec.N}")
    w = spec.n - (Z - 1) // spec.N
    if not 0 <= w <= spec.n:
        raise FieldError(f"weight {w} outside [0, {spec.n}]")
    return w


def weight_from_period(spec: CodeSpec, eta: int) -> int:
    """wt = (q-1)(r-1-N*eta)/(Nq); valid when F_q* is inside C_0."""
    if ((spec.r - 1) // (spec.q - 1)) % spec.N:
        raise FieldError("weight_from_period needs F_q* contained in C_0, "
                         f"i.e. N | (r-1)/(q-1)")
    num = (spec.q - 1) * (spec.r - 1 - spec.N * eta)
    den = spec.N * spec.q
    if num % den:
        raise FieldError(f"period {eta} gives non-integral weight {num}/{den}")
    w = num // den
    if not 0 <= w <= spec.n:
        raise FieldError(f"weight {w} outside [0, {spec.n}]")
    return w
