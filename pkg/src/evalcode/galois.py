"""Exact arithmetic in GF(p^r): field construction, traces, roots of unity.

Elements are encoded by their index ``sum(c_i * p**i)`` where ``(c_0, ..., c_{r-1})``
are the coordinates in the polynomial basis ``{1, x, ..., x^{r-1}}`` modulo a fixed
irreducible polynomial.  The modulus is the first irreducible monic polynomial of
degree r in element-index order, which makes every field construction deterministic
and reproducible across runs.

For q <= 2^20 a discrete-log table pair (exp/log) is precomputed, so multiplicative
arithmetic is table lookups; addition is XOR of indices in characteristic 2 and
digit-wise modular addition otherwise.  All scalar operations also exist as
vectorized numpy variants on index arrays, which is what the matrix kernels use.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

import numpy as np

_LOG_TABLE_LIMIT = 1 << 20


class FieldError(ValueError):
    """Raised for invalid field constructions or cross-field arithmetic."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p) (coefficient lists, ascending degree)


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, over GF(p)."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return _poly_trim(a)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_trim(out)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    r = len(f) - 1
    if r <= 0:
        return False
    for d in range(1, r // 2 + 1):
        for idx in range(p**d):
            div = _digits(idx, p, d) + [1]
            if not _poly_mod(f, div, p):
                return False
    # degree-1 factors are covered above for r >= 2; for r == 1 everything monic
    # of degree 1 is irreducible
    return True


def _digits(idx: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(idx % p)
        idx //= p
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------


class FieldSpec:
    """Immutable description of GF(p^r) with precomputed arithmetic tables.

    Do not construct directly; use :func:`make_field` (cached, one instance per
    (p, r) pair, so identity comparison works for spec-mismatch checks).
    """

    __slots__ = (
        "p", "r", "q", "modulus", "_exp", "_log", "_gidx",
        "_pow_p_digits", "_frob_table",
    )

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._build_tables()
        self._frob_table: dict[int, np.ndarray] = {}

    # -- construction ------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        pa = _digits(a, self.p, self.r)
        pb = _digits(b, self.p, self.r)
        prod = _poly_mod(_poly_mul(pa, pb, self.p), self.modulus, self.p)
        return sum(c * self.p**i for i, c in enumerate(prod))

    def _raw_pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _build_tables(self) -> None:
        q = self.q
        if q > _LOG_TABLE_LIMIT:
            raise FieldError(f"field GF({q}) exceeds the table limit 2^20")
        # least element index of multiplicative order q-1
        factors = _prime_factors(q - 1) if q > 2 else []
        g = 1
        if q > 2:
            for cand in range(2, q):
                if all(self._raw_pow(cand, (q - 1) // f) != 1 for f in factors):
                    g = cand
                    break
        self._gidx = g
        exp = np.zeros(max(2 * (q - 1), 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        acc = 1
        for k in range(q - 1):
            exp[k] = acc
            log[acc] = k
            acc = self._raw_mul(acc, g)
        exp[q - 1:] = exp[: q - 1][: exp.size - (q - 1)]
        log[0] = -1  # sentinel; log of zero must never be used unmasked
        self._exp = exp
        self._log = log
        # digit decomposition of every index, for odd-characteristic addition
        if self.p != 2 and self.r > 1:
            idxs = np.arange(q, dtype=np.int64)
            digs = np.empty((self.r, q), dtype=np.int64)
            t = idxs.copy()
            for i in range(self.r):
                digs[i] = t % self.p
                t //= self.p
            self._pow_p_digits = digs
        else:
            self._pow_p_digits = None

    # -- scalar ops on element indices ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        out, mul = 0, 1
        for _ in range(self.r):
            out += ((a + b) % self.p) * mul
            a //= self.p
            b //= self.p
            mul *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.r == 1:
            return (-a) % self.p
        out, mul = 0, 1
        for _ in range(self.r):
            out += ((-a) % self.p) * mul
            a //= self.p
            mul *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in " + self.name)
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        k = int(self._log[a])
        import math

        return (self.q - 1) // math.gcd(k, self.q - 1)

    # -- vectorized ops on numpy index arrays ------------------------------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        digs = self._pow_p_digits
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        mul = 1
        for i in range(self.r):
            out += ((digs[i][a] + digs[i][b]) % self.p) * mul
            mul *= self.p
        return out

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a.copy()
        if self.r == 1:
            return (-a) % self.p
        digs = self._pow_p_digits
        out = np.zeros(a.shape, dtype=np.int64)
        mul = 1
        for i in range(self.r):
            out += ((-digs[i][a]) % self.p) * mul
            mul *= self.p
        return out

    def sub_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        if np.any(nz):
            out[nz] = self._exp[self._log[a[nz]] + self._log[b[nz]]]
        return out

    def scale_arr(self, c: int, a: np.ndarray) -> np.ndarray:
        """c * a for a scalar c and index array a."""
        if c == 0:
            return np.zeros_like(a)
        out = np.zeros_like(a)
        nz = a != 0
        out[nz] = self._exp[self._log[a[nz]] + self._log[c]]
        return out

    def inv_arr(self, a: np.ndarray) -> np.ndarray:
        if np.any(a == 0):
            raise ZeroDivisionError("division by zero in " + self.name)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow_arr(self, a: np.ndarray, e: int) -> np.ndarray:
        """Elementwise a**e with the 0**0 == 1 convention."""
        out = np.zeros(a.shape, dtype=np.int64)
        nz = a != 0
        out[nz] = self._exp[(self._log[a[nz]] * e) % (self.q - 1)]
        if e == 0:
            out[~nz] = 1
        return out

    def frobenius_arr(self, a: np.ndarray, qprime: int) -> np.ndarray:
        """Elementwise a**qprime via a cached permutation table."""
        tab = self._frob_table.get(qprime)
        if tab is None:
            idxs = np.arange(self.q, dtype=np.int64)
            tab = self.pow_arr(idxs, qprime)
            self._frob_table[qprime] = tab
        return tab[a]

    # -- structure ---------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.p, self.r))

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        c = list(coeffs)
        if len(c) > self.r:
            raise FieldError(f"too many coefficients for {self.name}")
        return sum((ci % self.p) * self.p**i for i, ci in enumerate(c))

    def trace(self, a: int) -> int:
        """tr(a) = a + a^p + ... + a^{p^{r-1}}, an element of the prime field."""
        out, t = 0, a
        for _ in range(self.r):
            out = self.add(out, t)
            t = self.pow(t, self.p)
        return out

    def subfield_indices(self, s: int) -> np.ndarray:
        """Indices of all elements of the subfield GF(p^s), s | r."""
        if self.r % s != 0:
            raise FieldError(f"GF({self.p}^{s}) is not a subfield of {self.name}")
        qs = self.p**s
        if qs == self.q:
            return np.arange(self.q, dtype=np.int64)
        idxs = np.arange(self.q, dtype=np.int64)
        return idxs[self.frobenius_arr(idxs, qs) == idxs]

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.r == 1 else f"GF({self.p}^{self.r})"

    def __repr__(self) -> str:
        return f"FieldSpec({self.name}, modulus={list(self.modulus)})"

    def __call__(self, value: int | Iterable[int]) -> "FieldElement":
        if isinstance(value, (int, np.integer)):
            if not 0 <= value < self.q:
                value = value % self.p if self.r == 1 else value
                if not 0 <= value < self.q:
                    raise FieldError(f"index {value} out of range for {self.name}")
            return FieldElement(self, int(value))
        return FieldElement(self, self.from_coeffs(value))


class FieldElement:
    """A single element of a :class:`FieldSpec`, with operator overloads."""

    __slots__ = ("spec", "idx")

    def __init__(self, spec: FieldSpec, idx: int):
        self.spec = spec
        self.idx = idx

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec is not self.spec:
                raise FieldError("elements live in different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.spec(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec.add(self.idx, other.idx))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec.sub(self.idx, other.idx))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec.mul(self.idx, other.idx))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec.div(self.idx, other.idx))

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.idx, e))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.idx))

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.spec(int(other))
        return (
            isinstance(other, FieldElement)
            and other.spec is self.spec
            and other.idx == self.idx
        )

    def __hash__(self):
        return hash((id(self.spec), self.idx))

    def __bool__(self):
        return self.idx != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.idx)

    def trace(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.trace(self.idx))

    def order(self) -> int:
        return self.spec.order(self.idx)

    def __repr__(self):
        if self.spec.r == 1:
            return f"{self.idx}"
        return f"{self.spec.name}[{self.idx}]"


# ---------------------------------------------------------------------------
# module-level operations


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int = 1) -> FieldSpec:
    """Construct GF(p^r) with the deterministic least irreducible modulus."""
    if not _is_prime(p):
        raise FieldError(f"{p} is not prime")
    if r < 1:
        raise FieldError("extension degree must be >= 1")
    if p**r >= 2**63:
        raise FieldError("field too large")
    if r == 1:
        modulus = (0, 1)  # x, unused for prime fields
        return FieldSpec(p, 1, modulus)
    for idx in range(p**r):
        cand = tuple(_digits(idx, p, r)) + (1,)
        if _is_irreducible(cand, p):
            return FieldSpec(p, r, cand)
    raise FieldError("no irreducible polynomial found")  # pragma: no cover


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch one of {add, sub, mul, div} on two elements of the same field."""
    if a.spec is not b.spec:
        raise FieldError("elements live in different fields")
    try:
        fn = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise FieldError(f"unknown operation {op!r}") from None
    return fn(b)


def trace_to_prime(x: FieldElement) -> FieldElement:
    """Absolute trace down to GF(p); always lies in the prime field."""
    return x.trace()


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Least-index element of multiplicative order q-1 (1 for GF(2))."""
    return FieldElement(spec, spec._gidx)


def subgroup_roots(spec: FieldSpec, n: int) -> list[FieldElement]:
    """All n-th roots of unity, n | q-1, as increasing powers of g^{(q-1)/n}."""
    if n < 1 or (spec.q - 1) % n != 0:
        raise FieldError(f"{n} does not divide q-1 = {spec.q - 1}")
    h = spec.pow(spec._gidx, (spec.q - 1) // n)
    out, acc = [], 1
    for _ in range(n):
        out.append(FieldElement(spec, acc))
        acc = spec.mul(acc, h)
    return out
