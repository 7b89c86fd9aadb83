"""Cyclotomic orbits of exponents and subfield subcodes with exact bases.

Multiplying an exponent vector by a subfield order q' and bar-reducing it
partitions the box E_J into orbits ("cosets").  Orbit-closed defining sets are
exactly the ones whose evaluation codes interact well with the subfield
GF(q') ⊆ GF(q): the subfield subcode then has dimension |Δ| with an explicit
trace basis, and Schur products of subfield codes follow the reduced Minkowski
sum of the closed sets.

Consecutive runs of exponents inside a closed set give BCH-style lower bounds
on the dual distance of the subfield code; both grid shapes (units-only and
units-plus-zero) are covered.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from evalcode.cartesian import DefiningSet, JAffineFamily, minkowski_schur
from evalcode.linear_code import LinearCode, _subfield_relabel_maps


def _multiplier_degree(family: JAffineFamily, qprime: int) -> int:
    """log_p(q') after checking q' generates a subfield of the ambient field."""
    p = family.spec.p
    s, t = 0, qprime
    while t > 1 and t % p == 0:
        t //= p
        s += 1
    if t != 1 or s == 0 or family.spec.r % s != 0:
        raise ValueError(f"{qprime} is not the order of a subfield of GF({family.spec.q})")
    return s


class CyclotomicSet:
    """The orbit of one exponent vector under e -> bar(q' * e)."""

    __slots__ = ("family", "multiplier", "rep", "orbit")

    def __init__(self, family: JAffineFamily, multiplier: int, orbit: Iterable[Sequence[int]]):
        self.family = family
        self.multiplier = multiplier
        self.orbit = tuple(sorted(tuple(int(x) for x in e) for e in orbit))
        self.rep = self.orbit[0]

    @property
    def size(self) -> int:
        return len(self.orbit)

    def __iter__(self):
        return iter(self.orbit)

    def __len__(self):
        return len(self.orbit)

    def __contains__(self, e):
        return tuple(e) in self.orbit

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicSet)
            and self.family == other.family
            and self.multiplier == other.multiplier
            and self.orbit == other.orbit
        )

    def __hash__(self):
        return hash((self.family, self.multiplier, self.orbit))

    def __repr__(self):
        return f"CyclotomicSet(rep={self.rep}, size={self.size})"


def orbit_of(family: JAffineFamily, qprime: int, e: Sequence[int]) -> CyclotomicSet:
    """Closure of {e} under multiplication by q' with bar reduction."""
    _multiplier_degree(family, qprime)
    start = tuple(int(x) for x in e)
    if len(start) != family.m or any(
        not 0 <= xj <= tj for xj, tj in zip(start, family.T)
    ):
        raise ValueError(f"exponent {start} lies outside the box")
    orbit = [start]
    cur = start
    while True:
        cur = family.bar_reduce([qprime * xj for xj in cur])
        if cur == start:
            break
        orbit.append(cur)
    return CyclotomicSet(family, qprime, orbit)


def representatives(family: JAffineFamily, qprime: int) -> list[CyclotomicSet]:
    """One orbit per class, ordered by their minimal representatives."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for e in sorted(family.box()):
        if e in seen:
            continue
        orb = orbit_of(family, qprime, e)
        seen.update(orb.orbit)
        out.append(orb)
    return out


def closure(family: JAffineFamily, qprime: int, delta) -> DefiningSet:
    """Smallest orbit-closed superset of Δ."""
    elems: set[tuple[int, ...]] = set()
    for e in delta:
        elems.update(orbit_of(family, qprime, e).orbit)
    return DefiningSet(family, elems)


def is_coset_closed(family: JAffineFamily, qprime: int, delta: DefiningSet) -> bool:
    return all(family.bar_reduce([qprime * xj for xj in e]) in delta for e in delta)


def consecutive_union(family: JAffineFamily, qprime: int, i: int) -> DefiningSet:
    """Union of the first i+1 orbits in representative order."""
    reps = representatives(family, qprime)
    if not 0 <= i < len(reps):
        raise ValueError(f"index {i} out of range for {len(reps)} orbits")
    elems: set[tuple[int, ...]] = set()
    for orb in reps[: i + 1]:
        elems.update(orb.orbit)
    return DefiningSet(family, elems)


def _orbits_within(family: JAffineFamily, qprime: int, delta: DefiningSet) -> list[CyclotomicSet]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for e in delta:
        if e in seen:
            continue
        orb = orbit_of(family, qprime, e)
        if any(x not in delta for x in orb):
            raise ValueError(f"set is not closed: orbit of {e} leaves it")
        seen.update(orb.orbit)
        out.append(orb)
    return out


def subfield_code(family: JAffineFamily, qprime: int, delta: DefiningSet) -> LinearCode:
    """The GF(q')-subfield subcode of C_Δ for orbit-closed Δ, dimension |Δ|.

    Basis: for each orbit with representative a and length i_a, the i_a rows
    ev(T_a(xi^s X^a)), 0 <= s < i_a, where T_a(f) = sum_{t<i_a} f^{q'^t} and xi
    generates the degree-i_a extension of GF(q') inside the ambient field.
    """
    sdeg = _multiplier_degree(family, qprime)
    spec = family.spec
    sub, to_sub, _ = _subfield_relabel_maps(spec, sdeg)
    if len(delta) == 0:
        return LinearCode.zero(sub, family.n_points)
    orbits = _orbits_within(family, qprime, delta)
    rows = []
    for orb in orbits:
        ia = orb.size
        ext = qprime**ia - 1
        assert (spec.q - 1) % ext == 0, "orbit length must give a subfield of GF(q)"
        xi = spec.pow(spec._gidx, (spec.q - 1) // ext) if ext > 1 else 1
        base = family.monomial_row(orb.rep)
        coef = 1
        for _ in range(ia):
            u = spec.scale_arr(coef, base)
            acc = u.copy()
            for _ in range(ia - 1):
                u = spec.frobenius_arr(u, qprime)
                acc = spec.add_arr(acc, u)
            assert np.all(to_sub[acc] >= 0), "trace rows must land in the subfield"
            rows.append(to_sub[acc])
            coef = spec.mul(coef, xi)
    C = LinearCode(sub, np.stack(rows))
    assert C.k == len(delta), "trace rows must form a basis"
    return C


def schur_subfield(
    family: JAffineFamily, qprime: int, d1: DefiningSet, d2: DefiningSet
) -> DefiningSet:
    """Exponent set of the Schur product of two subfield codes (closed inputs)."""
    for d in (d1, d2):
        if not is_coset_closed(family, qprime, d):
            raise ValueError("defining set is not orbit-closed")
    out = minkowski_schur(family, d1, d2)
    assert is_coset_closed(family, qprime, out)
    return out


# ---------------------------------------------------------------------------
# BCH-style dual-distance bounds from consecutive exponents


def _longest_cyclic_run(present: Sequence[bool]) -> int:
    n = len(present)
    if all(present):
        return n
    best = run = 0
    for v in list(present) + list(present):  # doubled scan covers wraparound
        run = run + 1 if v else 0
        best = max(best, run)
    return min(best, n)


def dual_bch_bound(family: JAffineFamily, qprime: int, delta: DefiningSet,
                   use_multipliers: bool = True) -> int:
    """Lower bound on the dual distance of subfield_code(Δ), one variable only.

    Every dual word has polynomial syndrome zeros at all exponents of Δ, so a
    run of ell consecutive exponents forces weight >= ell + 1.  On the
    units-only grid runs are cyclic mod N-1 and may be taken inside c·Δ for
    any unit multiplier c; with the zero point included, a run must start at 0
    (the zero coordinate contributes only to the exponent-0 syndrome, and a
    case split on it keeps the bound).
    """
    if family.m != 1:
        raise ValueError("consecutive-run bound applies to one-variable families")
    _multiplier_degree(family, qprime)
    exps = {e[0] for e in delta}
    if not exps:
        return 1
    n_mod = family.N[0] - 1
    if 1 in family.J:
        mults = [c for c in range(1, n_mod) if math.gcd(c, n_mod) == 1] if use_multipliers else [1]
        best = 0
        for c in mults:
            scaled = [(c * a) % n_mod for a in exps]
            present = [False] * n_mod
            for a in scaled:
                present[a] = True
            best = max(best, _longest_cyclic_run(present))
        return best + 1
    # zero point present: runs {0..ell-1} inside {0} ∪ c·(Δ∖{0})
    if 0 not in exps:
        return 1
    units = {a for a in exps if a != 0}
    mults = [c for c in range(1, n_mod) if math.gcd(c, n_mod) == 1] if use_multipliers else [1]
    if not units:
        return 2 if family.N[0] > 1 else 1
    best = 1
    for c in mults:
        scaled = {(c * a - 1) % n_mod + 1 for a in units}
        ell = 1
        while ell in scaled:
            ell += 1
        best = max(best, ell)
    return best + 1
