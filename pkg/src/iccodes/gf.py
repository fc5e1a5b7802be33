"""Exact arithmetic in GF(p^d) via exponent/discrete-log lookup tables.

Nonzero field elements are represented by their discrete-log exponent
relative to a fixed primitive element alpha; the zero element is the
sentinel ``ZERO``.  The "packed" representation of an element is the
integer sum(c_i * p^i) of the coefficients of its polynomial residue,
which is what the exp/log tables map to and from.

The modulus polynomial and the primitive element are chosen
deterministically (smallest-first scan), so identical (p, d) inputs
always produce identical tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from sympy import factorint, isprime

ZERO = -1  # exponent sentinel for the zero element

DEFAULT_FIELD_CAP = 1 << 26


class FieldError(ValueError):
    pass


class FieldCapError(FieldError):
    """Requested field order exceeds the configured table-size cap."""


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficient lists in ascending order
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, mod, p):
    """Remainder of a modulo the monic polynomial mod, over GF(p)."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    del a[dm:]
    while len(a) < dm:
        a.append(0)
    return a


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, mod, p)


def _poly_divisible(a, b, p):
    """True if monic b divides a over GF(p)."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] % p
        if c:
            off = len(a) - 1 - db
            for j in range(db + 1):
                a[off + j] = (a[off + j] - c * b[j]) % p
        a.pop()
    return all(c % p == 0 for c in a)


def _unpack(v, p, d):
    out = []
    for _ in range(d):
        out.append(v % p)
        v //= p
    return out


def _pack(coeffs, p):
    v = 0
    for c in reversed(coeffs):
        v = v * p + (c % p)
    return v


def _is_irreducible(coeffs, p):
    """Trial-division irreducibility test for a monic polynomial over GF(p)."""
    d = len(coeffs) - 1
    if d == 1:
        return True
    if coeffs[0] % p == 0:  # divisible by x
        return False
    # no roots in GF(p)
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    # no monic factor of degree 2 .. d//2
    for deg in range(2, d // 2 + 1):
        for k in range(p ** deg):
            b = _unpack(k, p, deg) + [1]
            if _poly_divisible(coeffs, b, p):
                return False
    return True


def find_irreducible(p: int, d: int) -> list[int]:
    """Lexicographically smallest monic irreducible polynomial of degree d."""
    for k in range(p ** d):
        cand = _unpack(k, p, d) + [1]
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {d} over GF({p})")  # pragma: no cover


# ---------------------------------------------------------------------------
# field table
# ---------------------------------------------------------------------------

@dataclass
class FieldTable:
    """GF(p^d) realized by exp/log lookup arrays over a fixed modulus."""

    p: int
    d: int
    modulus: tuple
    order: int
    exp_table: np.ndarray       # exponent -> packed representation
    log_table: np.ndarray       # packed representation -> exponent (0 -> -1)
    alpha: int                  # packed representation of the primitive element
    _neg_one_exp: int = field(default=0, repr=False)

    # -- scalar element operations (exponent representation) ---------------

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % (self.order - 1)

    def pow(self, a: int, k: int) -> int:
        if a == ZERO:
            if k == 0:
                return 0
            return ZERO
        return (a * k) % (self.order - 1)

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % (self.order - 1)

    def add(self, a: int, b: int) -> int:
        pa = self.packed(a)
        pb = self.packed(b)
        return self.log(self.packed_add(pa, pb))

    def neg(self, a: int) -> int:
        if a == ZERO:
            return ZERO
        return (a + self._neg_one_exp) % (self.order - 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- representation conversions ----------------------------------------

    def packed(self, a: int) -> int:
        if a == ZERO:
            return 0
        return int(self.exp_table[a])

    def log(self, packed: int) -> int:
        return int(self.log_table[packed])

    def packed_add(self, u: int, v: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.d):
            out += ((u + v) % p) * mult
            u //= p
            v //= p
            mult *= p
        return out

    # -- subfields and traces ----------------------------------------------

    def subfield_degree(self, q: int) -> int:
        """Return s with q = p^s, raising unless s divides d."""
        s = round(math.log(q, self.p))
        if self.p ** s != q or self.d % s != 0:
            raise FieldError(f"{q} is not a subfield order of GF({self.p}^{self.d})")
        return s

    def rel_trace(self, x: int, q: int) -> int:
        """Trace of x from GF(p^d) onto the subfield of order q."""
        s = self.subfield_degree(q)
        if x == ZERO:
            return ZERO
        m = self.d // s
        rm1 = self.order - 1
        acc = 0
        for i in range(m):
            acc = self.packed_add(acc, int(self.exp_table[(x * pow(q, i, rm1)) % rm1]))
        return self.log(acc)

    def in_subfield(self, x: int, q: int) -> bool:
        self.subfield_degree(q)
        if x == ZERO:
            return True
        return x % ((self.order - 1) // (q - 1)) == 0

    def subfield_label(self, x: int, q: int) -> int:
        """Canonical symbol in [0, q-1]: 0 for zero, j+1 for g^j with g = alpha^((r-1)/(q-1))."""
        if x == ZERO:
            return 0
        step = (self.order - 1) // (q - 1)
        if x % step:
            raise FieldError(f"element exponent {x} not in subfield of order {q}")
        return x // step + 1

    def natural_label(self, x: int) -> int:
        """Integer residue of a prime-subfield element (constant polynomial)."""
        v = self.packed(x)
        if v >= self.p:
            raise FieldError("natural labels exist only for prime-subfield elements")
        return v

    # -- vectorized tables used by the enumeration modules -----------------

    def rel_trace_table(self, q: int) -> np.ndarray:
        """Packed Tr_{r/q}(alpha^e) for every exponent e in [0, r-2]."""
        s = self.subfield_degree(q)
        m = self.d // s
        rm1 = self.order - 1
        e = np.arange(rm1, dtype=np.int64)
        digits = np.zeros((self.d, rm1), dtype=np.int64)
        for i in range(m):
            v = self.exp_table[(e * pow(q, i, rm1)) % rm1]
            for j in range(self.d):
                digits[j] += (v // self.p ** j) % self.p
        digits %= self.p
        packed = np.zeros(rm1, dtype=np.int64)
        for j in range(self.d - 1, -1, -1):
            packed = packed * self.p + digits[j]
        return packed


def build_field(p: int, d: int, cap: int = DEFAULT_FIELD_CAP) -> FieldTable:
    """Construct GF(p^d) deterministically.

    The modulus is the lexicographically smallest monic irreducible of
    degree d; the primitive element is the residue of x when that is
    primitive, otherwise the first primitive element in packed order.
    """
    if not isprime(p):
        raise FieldError(f"p = {p} is not prime")
    if d < 1:
        raise FieldError(f"extension degree must be positive, got {d}")
    r = p ** d
    if r > cap:
        raise FieldCapError(f"field order {p}^{d} = {r} exceeds cap {cap}")

    modulus = find_irreducible(p, d)
    rm1 = r - 1
    group_factors = list(factorint(rm1)) if rm1 > 1 else []

    def order_is_full(coeffs):
        for ell in group_factors:
            acc = [1] + [0] * (d - 1)
            base = list(coeffs)
            k = rm1 // ell
            while k:
                if k & 1:
                    acc = _poly_mulmod(acc, base, modulus, p)
                base = _poly_mulmod(base, base, modulus, p)
                k >>= 1
            if _pack(acc, p) == 1:
                return False
        return True

    # prefer the residue of x itself, then scan packed values
    alpha_coeffs = None
    x_coeffs = _poly_mod([0, 1] + [0] * max(0, d - 2), modulus, p)
    if _pack(x_coeffs, p) != 0 and order_is_full(x_coeffs):
        alpha_coeffs = x_coeffs
    else:
        for v in range(1, r):
            cand = _unpack(v, p, d)
            if order_is_full(cand):
                alpha_coeffs = cand
                break
    if alpha_coeffs is None:  # pragma: no cover
        raise FieldError("no primitive element found (internal bug)")

    exp_table = np.empty(rm1, dtype=np.int64)
    log_table = np.full(r, ZERO, dtype=np.int64)
    val = [1] + [0] * (d - 1)
    for i in range(rm1):
        packed = _pack(val, p)
        exp_table[i] = packed
        log_table[packed] = i
        val = _poly_mulmod(val, alpha_coeffs, modulus, p)
    if _pack(val, p) != 1:  # pragma: no cover
        raise FieldError("primitive element order check failed (internal bug)")

    ft = FieldTable(
        p=p,
        d=d,
        modulus=tuple(modulus),
        order=r,
        exp_table=exp_table,
        log_table=log_table,
        alpha=_pack(alpha_coeffs, p),
    )
    ft._neg_one_exp = ft.log(ft.packed_add(0, (p - 1))) if p > 2 else 0
    return ft
