"""Monomial-Cartesian evaluation codes on mixed affine/multiplicative grids.

A family fixes per-coordinate point sets Z_j: either all roots of X^{N_j} - X
(coordinate j not in J: the zero point plus the (N_j-1)-th roots of unity) or
all roots of X^{N_j-1} - 1 (j in J: units only).  Codes are spans of monomial
evaluations over the Cartesian product of the Z_j; exponents live in the box
E_J and are reduced back into it by the relations the grids impose.

The combinatorial layer mirrors the matrix layer exactly: Schur products are
reduced Minkowski sums, duals are computed by removing every exponent whose
evaluation pairs nonzero against the set, and distances are bounded by the
footprint product.  Matrix-level counterparts in linear_code serve as oracles.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

import numpy as np

from evalcode import _gfmat
from evalcode.galois import FieldElement, FieldError, FieldSpec, make_field, subgroup_roots
from evalcode.linear_code import LinearCode


def field_from_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q."""
    p = 2
    while p * p <= q:
        if q % p == 0:
            r = 0
            t = q
            while t % p == 0:
                t //= p
                r += 1
            if t != 1:
                raise FieldError(f"{q} is not a prime power")
            return make_field(p, r)
        p += 1
    return make_field(q, 1)


class JAffineFamily:
    """Ambient data (q, m, N_1..N_m, J) fixing the grid, the box E_J, and n_J."""

    __slots__ = ("spec", "m", "N", "J", "T", "_coords", "_root_lists", "_box_cache")

    def __init__(self, spec: FieldSpec, N: Sequence[int], J: Iterable[int] = ()):
        self.spec = spec
        self.N = tuple(int(v) for v in N)
        self.m = len(self.N)
        self.J = frozenset(int(j) for j in J)
        if not self.J <= set(range(1, self.m + 1)):
            raise ValueError(f"J must be a subset of 1..{self.m}")
        for j, Nj in enumerate(self.N, start=1):
            if Nj < 2:
                raise ValueError(f"N_{j} = {Nj} must be at least 2")
            if (spec.q - 1) % (Nj - 1) != 0:
                raise ValueError(f"N_{j}-1 = {Nj - 1} does not divide q-1 = {spec.q - 1}")
        self.T = tuple(
            Nj - 2 if j in self.J else Nj - 1 for j, Nj in enumerate(self.N, start=1)
        )
        self._coords = None
        self._root_lists = None
        self._box_cache = None

    # -- structure ---------------------------------------------------------

    @property
    def n_points(self) -> int:
        out = 1
        for j, Nj in enumerate(self.N, start=1):
            out *= (Nj - 1) if j in self.J else Nj
        return out

    def box(self) -> list[tuple[int, ...]]:
        """E_J, the full exponent box, in lexicographic order."""
        if self._box_cache is None:
            self._box_cache = list(itertools.product(*(range(t + 1) for t in self.T)))
        return self._box_cache

    def e_prime_box(self) -> list[tuple[int, ...]]:
        """E' = prod {0..N_j-2}, the sub-box where duality is combinatorial."""
        return list(itertools.product(*(range(Nj - 1) for Nj in self.N)))

    def in_e_prime(self, e: Sequence[int]) -> bool:
        return all(ej <= Nj - 2 for ej, Nj in zip(e, self.N))

    def root_lists(self) -> list[list[int]]:
        """Per-coordinate point sets as element indices, in evaluation order."""
        if self._root_lists is None:
            out = []
            for j, Nj in enumerate(self.N, start=1):
                mu = [x.idx for x in subgroup_roots(self.spec, Nj - 1)]
                out.append(mu if j in self.J else [0] + mu)
            self._root_lists = out
        return self._root_lists

    def coords(self) -> list[np.ndarray]:
        """m arrays of length n_J: coordinate values of every evaluation point."""
        if self._coords is None:
            roots = [np.array(r, dtype=np.int64) for r in self.root_lists()]
            grids = np.meshgrid(*roots, indexing="ij")
            self._coords = [g.reshape(-1) for g in grids]
        return self._coords

    def zsizes(self) -> tuple[int, ...]:
        return tuple(
            (Nj - 1) if j in self.J else Nj for j, Nj in enumerate(self.N, start=1)
        )

    def bar_reduce(self, e: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of an exponent vector inside E_J."""
        out = []
        for j, (ej, Nj) in enumerate(zip(e, self.N), start=1):
            if ej < 0:
                raise ValueError("negative exponent")
            if j in self.J:
                out.append(ej % (Nj - 1))
            else:
                out.append(0 if ej == 0 else (ej - 1) % (Nj - 1) + 1)
        return tuple(out)

    def monomial_row(self, e: Sequence[int]) -> np.ndarray:
        coords = self.coords()
        row = np.ones(self.n_points, dtype=np.int64)
        for j in range(self.m):
            if e[j]:
                row = self.spec.mul_arr(row, self.spec.pow_arr(coords[j], int(e[j])))
        return row

    def __eq__(self, other):
        return (
            isinstance(other, JAffineFamily)
            and self.spec is other.spec
            and self.N == other.N
            and self.J == other.J
        )

    def __hash__(self):
        return hash((id(self.spec), self.N, self.J))

    def __repr__(self):
        Js = "{" + ",".join(map(str, sorted(self.J))) + "}"
        return f"JAffineFamily(q={self.spec.q}, N={list(self.N)}, J={Js})"


class DefiningSet:
    """A finite set of exponent vectors inside the box E_J of one family."""

    __slots__ = ("family", "elems", "_set")

    def __init__(self, family: JAffineFamily, elems: Iterable[Sequence[int]]):
        self.family = family
        pts = {tuple(int(x) for x in e) for e in elems}
        for e in pts:
            if len(e) != family.m:
                raise ValueError(f"exponent {e} has wrong arity for {family}")
            if any(not 0 <= ej <= tj for ej, tj in zip(e, family.T)):
                raise ValueError(f"exponent {e} lies outside the box {family.T}")
        self.elems = tuple(sorted(pts))
        self._set = frozenset(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def __contains__(self, e):
        return tuple(e) in self._set

    def __eq__(self, other):
        return (
            isinstance(other, DefiningSet)
            and self.family == other.family
            and self._set == other._set
        )

    def __le__(self, other: "DefiningSet"):
        return self._set <= other._set

    def __hash__(self):
        return hash((self.family, self._set))

    def union(self, other: "DefiningSet") -> "DefiningSet":
        if other.family != self.family:
            raise ValueError("defining sets belong to different families")
        return DefiningSet(self.family, self._set | other._set)

    def __repr__(self):
        return f"DefiningSet({len(self.elems)} exponents in {self.family})"


# ---------------------------------------------------------------------------
# operations


def point_set(family: JAffineFamily) -> list[tuple[FieldElement, ...]]:
    """All n_J evaluation points, coordinates as field elements."""
    spec = family.spec
    return [
        tuple(FieldElement(spec, x) for x in pt)
        for pt in itertools.product(*family.root_lists())
    ]


def evaluate(family: JAffineFamily, delta: DefiningSet) -> LinearCode:
    """C_Δ = span{ev(X^e) : e in Δ}; dimension is exactly |Δ|."""
    if delta.family != family:
        raise ValueError("defining set belongs to a different family")
    if len(delta) == 0:
        return LinearCode.zero(family.spec, family.n_points)
    rows = np.stack([family.monomial_row(e) for e in delta])
    C = LinearCode(family.spec, rows)
    assert C.k == len(delta), "monomial evaluation must be injective"
    return C


def bar_reduce(family: JAffineFamily, e: Sequence[int]) -> tuple[int, ...]:
    return family.bar_reduce(e)


def minkowski_schur(family: JAffineFamily, d1: DefiningSet, d2: DefiningSet) -> DefiningSet:
    """Reduced Minkowski sum; the exponent set of the Schur product code."""
    if d1.family != family or d2.family != family:
        raise ValueError("defining sets belong to a different family")
    out = {
        family.bar_reduce([a + b for a, b in zip(e1, e2)])
        for e1 in d1
        for e2 in d2
    }
    return DefiningSet(family, out)


def nonzero_pairing_partners(family: JAffineFamily, e: Sequence[int]) -> list[set[int]]:
    """Per-coordinate sets B_j: ev(X^e)·ev(X^b) pairs nonzero iff b_j in B_j for all j.

    On a multiplicative coordinate (j in J) the character sum over the units is
    nonzero only at the single complementary exponent.  On a full affine
    coordinate the zero point contributes, so the boundary exponents 0 and
    N_j-1 behave specially, and exponent 0 pairs with itself iff p does not
    divide N_j.
    """
    out = []
    for j, (ej, Nj) in enumerate(zip(e, family.N), start=1):
        if j in family.J:
            out.append({(Nj - 1 - ej) % (Nj - 1)})
        elif 0 < ej < Nj - 1:
            out.append({Nj - 1 - ej})
        elif ej == 0:
            b = {Nj - 1}
            if Nj % family.spec.p != 0:
                b.add(0)
            out.append(b)
        else:  # ej == Nj - 1
            out.append({0, Nj - 1})
    return out


def delta_dual(family: JAffineFamily, delta: DefiningSet) -> DefiningSet:
    """Exponents whose evaluations are orthogonal to all of C_Δ.

    evaluate(delta_dual(Δ)) ⊆ dual(evaluate(Δ)) always; equality holds exactly
    when the removed partner sets cover n_J - |Δ| distinct exponents — in
    particular whenever Δ ⊆ E' and p | N_j for every j not in J, where each
    partner set is the componentwise complement singleton.
    """
    if delta.family != family:
        raise ValueError("defining set belongs to a different family")
    bad: set[tuple[int, ...]] = set()
    for e in delta:
        parts = nonzero_pairing_partners(family, e)
        bad.update(itertools.product(*parts))
    return DefiningSet(family, (e for e in family.box() if e not in bad))


def dual_is_exact(family: JAffineFamily, delta: DefiningSet, dd: DefiningSet) -> bool:
    """True iff the combinatorial dual has complementary size, which (with the
    containment that always holds) certifies evaluate(dd) == dual(evaluate(Δ))."""
    return len(dd) == family.n_points - len(delta)


def footprint_bound(family: JAffineFamily, delta: DefiningSet) -> int:
    """min over e in Δ of prod_j (|Z_j| - e_j); a distance lower bound."""
    if len(delta) == 0:
        raise ValueError("footprint of an empty set is undefined")
    z = family.zsizes()
    return min(math.prod(zj - ej for zj, ej in zip(z, e)) for e in delta)


def _footprint_argmin(family: JAffineFamily, delta: DefiningSet) -> tuple[int, ...]:
    z = family.zsizes()
    return min(delta, key=lambda e: math.prod(zj - ej for zj, ej in zip(z, e)))


def footprint_witness(family: JAffineFamily, delta: DefiningSet) -> tuple[np.ndarray, int]:
    """A codeword attaining the footprint bound, for decreasing Δ.

    The witness is the evaluation of prod_j prod_{l < e*_j} (X_j - beta_{j,l})
    with e* the footprint minimizer and beta the first points of Z_j; all its
    monomials lie in the down-set of e*, hence in Δ, so it is a codeword, and
    its zero set is exactly the struck points.
    """
    if not is_decreasing(delta):
        raise ValueError("footprint witness requires a decreasing set")
    spec = family.spec
    estar = _footprint_argmin(family, delta)
    # the down-set of e* must sit inside delta (decreasingness gives this; the
    # explicit check keeps the certificate self-contained)
    for mono in itertools.product(*(range(v + 1) for v in estar)):
        assert mono in delta
    coords = family.coords()
    roots = family.root_lists()
    word = np.ones(family.n_points, dtype=np.int64)
    for j in range(family.m):
        for l in range(estar[j]):
            beta = roots[j][l]
            word = spec.mul_arr(word, spec.sub_arr(coords[j], np.int64(beta)))
    weight = int(np.count_nonzero(word))
    z = family.zsizes()
    assert weight == math.prod(zj - ej for zj, ej in zip(z, estar))
    return word, weight


def is_decreasing(delta: DefiningSet) -> bool:
    """True iff Δ contains every componentwise-smaller exponent of each member."""
    s = delta._set
    for e in delta:
        for j in range(len(e)):
            if e[j] > 0:
                smaller = e[:j] + (e[j] - 1,) + e[j + 1 :]
                if smaller not in s:
                    return False
    return True


# ---------------------------------------------------------------------------
# standard Δ families on the full affine grid


def full_affine_family(q: int, m: int) -> JAffineFamily:
    spec = field_from_order(q)
    return JAffineFamily(spec, [q] * m, J=())


def delta_rm(q: int, m: int, s: int) -> DefiningSet:
    """Total-degree-at-most-s exponents in {0..q-1}^m."""
    return delta_wrm(q, m, s, (1,) * m)


def delta_wrm(q: int, m: int, s: int, S: Sequence[int]) -> DefiningSet:
    """Weighted-degree exponents: sum s_i e_i <= s, weights ascending."""
    S = tuple(int(w) for w in S)
    if list(S) != sorted(S):
        raise ValueError("weights must be sorted ascending")
    if len(S) != m:
        raise ValueError("need one weight per variable")
    if s < 0:
        raise ValueError("degree bound must be nonnegative")
    fam = full_affine_family(q, m)
    elems = [
        e
        for e in itertools.product(range(q), repeat=m)
        if sum(w * ej for w, ej in zip(S, e)) <= s
    ]
    return DefiningSet(fam, elems)


def delta_hyperbolic(q: int, m: int, s: int) -> DefiningSet:
    """Exponents with prod (q - e_j) >= s; footprint-optimal by construction."""
    fam = full_affine_family(q, m)
    elems = [
        e
        for e in itertools.product(range(q), repeat=m)
        if math.prod(q - ej for ej in e) >= s
    ]
    return DefiningSet(fam, elems)


def rm_distance(q: int, m: int, s: int) -> int:
    """(q-b) q^{m-1-a} where s = a(q-1)+b, 0 <= b < q-1 (degree-s full-grid codes)."""
    if s >= m * (q - 1):
        return 1
    a, b = divmod(s, q - 1)
    return (q - b) * q ** (m - 1 - a)


def wrm_nesting(s: int, m: int, S: Sequence[int]) -> tuple[int, int]:
    """(v_min, v_max): the degree-v full-grid codes nested around a weighted code.

    v_min uses suffix sums (the heaviest weights), v_max prefix sums (the
    lightest); weights must be ascending.
    """
    S = tuple(int(w) for w in S)
    if list(S) != sorted(S):
        raise ValueError("weights must be sorted ascending")
    v_min = max(v for v in range(m + 1) if s >= sum(S[m - v :]))
    v_max = max(v for v in range(m + 1) if s >= sum(S[:v]))
    return v_min, v_max
