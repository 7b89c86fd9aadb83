"""Linear codes over GF(q): canonical generator matrices, duals, Schur products,
subfield subcodes, and bounded minimum-distance machinery.

A :class:`LinearCode` stores its generator in reduced row echelon form, so two
codes are equal iff their stored matrices are equal.  Distance work never claims
exactness without a certified lower bound *and* an explicit codeword witness:
the engines here either enumerate exhaustively (within budget), exclude all
supports of a given size, or search for witnesses (deterministic seeded search).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from evalcode import _gfmat
from evalcode.galois import FieldElement, FieldError, FieldSpec, make_field, primitive_element

_ENUMERATION_CAP = 1 << 26
_SUPPORT_LEVEL_CAP = {True: 6, False: 5}  # exhaustive support search depth, keyed by q == 2


def _steps_from_env() -> int:
    try:
        return int(os.environ.get("EVALCODE_BUDGET_STEPS", ""))
    except ValueError:
        return 10**9


@dataclass(frozen=True)
class SearchBudget:
    """Caps for distance searches; exhaustion degrades results, never errors."""

    enumeration_cap: int = _ENUMERATION_CAP
    w_max: int = 6
    steps: int = 0

    def __post_init__(self):
        if self.steps <= 0:
            object.__setattr__(self, "steps", _steps_from_env())


class DistanceResult:
    """Certified bracket [lower, upper] on a code's minimum distance."""

    __slots__ = ("lower", "upper", "exact", "witness")

    def __init__(self, lower: int, upper: int, witness: np.ndarray | None = None):
        if lower > upper:
            raise ValueError(f"invalid distance bracket [{lower}, {upper}]")
        self.lower = int(lower)
        self.upper = int(upper)
        self.exact = lower == upper
        self.witness = witness

    def __repr__(self):
        if self.exact:
            return f"d={self.lower}"
        return f"d in [{self.lower},{self.upper}]"


class LinearCode:
    """A linear code over GF(q), canonically represented by its RREF generator."""

    __slots__ = ("spec", "n", "gen", "pivots", "_dual_cache")

    def __init__(self, spec: FieldSpec, rows, *, _reduced: bool = False):
        self.spec = spec
        rows = np.asarray(rows, dtype=np.int64)
        if rows.ndim == 1:
            rows = rows[None, :]
        self.n = rows.shape[1]
        if _reduced:
            self.gen = rows
            self.pivots = [int(np.argmax(r != 0)) for r in rows]
        else:
            self.gen, self.pivots = _gfmat.rref(rows, spec)
        self._dual_cache = None

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "LinearCode":
        return cls(spec, np.zeros((0, n), dtype=np.int64), _reduced=True)

    @classmethod
    def full(cls, spec: FieldSpec, n: int) -> "LinearCode":
        return cls(spec, np.eye(n, dtype=np.int64), _reduced=True)

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.spec is other.spec
            and self.n == other.n
            and self.gen.shape == other.gen.shape
            and np.array_equal(self.gen, other.gen)
        )

    def __hash__(self):
        return hash((id(self.spec), self.n, self.gen.tobytes()))

    def __contains__(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.n,):
            return False
        return _gfmat.in_row_space(self.gen, self.pivots, v, self.spec)

    def __repr__(self):
        return f"[{self.n},{self.k}]_{self.spec.q}"

    def parity_check(self) -> np.ndarray:
        return dual(self).gen


# ---------------------------------------------------------------------------
# spec operations


def dual(C: LinearCode) -> LinearCode:
    """Nullspace code; involution with dim(C) + dim(dual(C)) = n."""
    if C._dual_cache is None:
        D = LinearCode(C.spec, _gfmat.nullspace(C.gen, C.spec), _reduced=True)
        D._dual_cache = C
        C._dual_cache = D
    return C._dual_cache


def schur(C: LinearCode, D: LinearCode) -> LinearCode:
    """Componentwise-product span C * D."""
    if C.spec is not D.spec or C.n != D.n:
        raise FieldError("Schur product needs codes of equal length over one field")
    if C.k == 0 or D.k == 0:
        return LinearCode.zero(C.spec, C.n)
    return LinearCode(C.spec, _gfmat.schur_rows(C.gen, D.gen, C.spec))


def contains(outer: LinearCode, inner: LinearCode) -> bool:
    if outer.spec is not inner.spec or outer.n != inner.n:
        raise FieldError("containment needs codes of equal length over one field")
    if inner.k > outer.k:
        return False
    return all(
        _gfmat.in_row_space(outer.gen, outer.pivots, row, outer.spec) for row in inner.gen
    )


def puncture(C: LinearCode, positions: Iterable[int]) -> LinearCode:
    pos = sorted(set(int(i) for i in positions))
    if pos and not (0 <= pos[0] and pos[-1] < C.n):
        raise IndexError(f"puncture position out of range for length {C.n}")
    keep = [i for i in range(C.n) if i not in set(pos)]
    return LinearCode(C.spec, C.gen[:, keep])


def shorten(C: LinearCode, positions: Iterable[int]) -> LinearCode:
    pos = sorted(set(int(i) for i in positions))
    if pos and not (0 <= pos[0] and pos[-1] < C.n):
        raise IndexError(f"shorten position out of range for length {C.n}")
    if not pos:
        return LinearCode(C.spec, C.gen)
    if C.k == 0:
        return LinearCode.zero(C.spec, C.n - len(pos))
    sub = C.gen[:, pos]  # k x |pos|
    coeffs = _gfmat.nullspace(sub.T, C.spec)  # rows x with x @ sub == 0
    keep = [i for i in range(C.n) if i not in set(pos)]
    if coeffs.shape[0] == 0:
        return LinearCode.zero(C.spec, len(keep))
    rows = _gfmat.matmul(coeffs, C.gen, C.spec)
    return LinearCode(C.spec, rows[:, keep])


# ---------------------------------------------------------------------------
# subfield subcodes (matrix-level route)


def _subfield_relabel_maps(spec: FieldSpec, s: int) -> tuple[FieldSpec, np.ndarray, np.ndarray]:
    """Index maps between GF(p^s) inside spec and the canonical GF(p^s).

    The subfield copy inside GF(p^r) is generated by g^((q-1)/(q'-1)); it is
    identified with the standalone field by sending that generator to the least
    root of its minimal polynomial over GF(p) — a field isomorphism either way.
    """
    sub = make_field(spec.p, s)
    qp = sub.q
    to_sub = np.full(spec.q, -1, dtype=np.int64)
    from_sub = np.zeros(qp, dtype=np.int64)
    to_sub[0] = 0
    if qp == 2:
        to_sub[1] = 1
        from_sub[1] = 1
        return sub, to_sub, from_sub
    g_in = spec.pow(spec._gidx, (spec.q - 1) // (qp - 1))
    # minimal polynomial of g_in over GF(p): prod over conjugates (X - g_in^{p^t})
    conj, x = [], g_in
    while True:
        conj.append(x)
        x = spec.pow(x, spec.p)
        if x == g_in:
            break
    poly = [1]  # coefficients in spec, ascending
    for c in conj:
        nxt = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i + 1] = spec.add(nxt[i + 1], a)
            nxt[i] = spec.sub(nxt[i], spec.mul(a, c))
        poly = nxt
    assert all(v < spec.p for v in poly), "minimal polynomial must have prime-field coefficients"
    root = None
    for cand in range(1, qp):
        acc, powc = 0, 1
        for coef in poly:
            acc = sub.add(acc, sub.mul(coef, powc))
            powc = sub.mul(powc, cand)
        if acc == 0:
            root = cand
            break
    assert root is not None
    a_in, a_out = 1, 1
    for _ in range(qp - 1):
        to_sub[a_in] = a_out
        from_sub[a_out] = a_in
        a_in = spec.mul(a_in, g_in)
        a_out = sub.mul(a_out, root)
    return sub, to_sub, from_sub


def subfield_subcode(C: LinearCode, s: int) -> LinearCode:
    """S(C) = C ∩ GF(p^s)^n, returned over the canonical GF(p^s).

    Computed at the matrix level: C is flattened to a GF(p)-space, the
    coordinatewise q'-power Frobenius is imposed as a linear constraint, and
    the fixed vectors are relabeled into GF(p^s).  This route is deliberately
    independent of any monomial/coset structure, so it can serve as an oracle.
    """
    spec = C.spec
    if spec.r % s != 0:
        raise FieldError(f"{s} does not divide the extension degree {spec.r}")
    if s == spec.r:
        return C
    qp = spec.p**s
    sub, to_sub, _ = _subfield_relabel_maps(spec, s)
    if C.k == 0:
        return LinearCode.zero(sub, C.n)
    # GF(p)-basis of C: x^t * row for the polynomial basis elements x^t
    basis = []
    for t in range(spec.r):
        xt = spec.p**t
        basis.append(spec.scale_arr(xt, C.gen) if xt != 1 else C.gen.copy())
    B = np.concatenate(basis, axis=0)  # (r*k) x n over GF(q)
    F = spec.frobenius_arr(B, qp)
    D = spec.sub_arr(F, B)  # rows must be killed by the combination
    # expand each GF(q) entry into r GF(p) digits -> (r*k) x (r*n)
    prime = make_field(spec.p, 1)
    digs = np.empty((D.shape[0], D.shape[1] * spec.r), dtype=np.int64)
    tmp = D.copy()
    for i in range(spec.r):
        digs[:, i :: spec.r] = tmp % spec.p
        tmp //= spec.p
    lam = _gfmat.nullspace(digs.T, prime)  # combos over GF(p)
    if lam.shape[0] == 0:
        return LinearCode.zero(sub, C.n)
    fixed = _gfmat.matmul(lam, B, spec) if spec.p != 2 else _xor_combine(lam, B)
    assert np.all(to_sub[fixed] >= 0), "fixed vectors must have subfield entries"
    return LinearCode(sub, to_sub[fixed])


def _xor_combine(lam: np.ndarray, B: np.ndarray) -> np.ndarray:
    """lam @ B over GF(2) scalars acting on GF(2^r) index vectors (XOR add)."""
    out = np.zeros((lam.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(lam.shape[1]):
        rows = lam[:, t] != 0
        if np.any(rows):
            out[rows] ^= B[t]
    return out


# ---------------------------------------------------------------------------
# distance machinery


def _message_chunk(lo: int, hi: int, k: int, p: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    weights = p ** np.arange(k, dtype=np.int64)
    return (idx[:, None] // weights[None, :]) % p


def exhaustive_min_weight(C: LinearCode, cap: int = _ENUMERATION_CAP) -> DistanceResult:
    """Exact minimum weight by enumerating all q^k codewords (prime fields)."""
    spec = C.spec
    if spec.r != 1:
        return _exhaustive_min_weight_ext(C, cap)
    total = spec.q**C.k
    if total > cap:
        raise ValueError(f"enumeration size {total} exceeds cap {cap}")
    G = C.gen.astype(np.float32)
    best, best_msg = C.n + 1, None
    chunk = max(1, min(total, (1 << 24) // max(1, C.n)))
    for lo in range(1, total, chunk):
        hi = min(lo + chunk, total)
        msgs = _message_chunk(lo, hi, C.k, spec.p)
        words = (msgs.astype(np.float32) @ G) % spec.p
        wts = np.count_nonzero(words, axis=1)
        i = int(np.argmin(wts))
        if wts[i] < best:
            best = int(wts[i])
            best_msg = msgs[i].copy()
    witness = _gfmat.matmul(best_msg[None, :], C.gen, spec)[0]
    assert np.count_nonzero(witness) == best
    return DistanceResult(best, best, witness=witness)


def _exhaustive_min_weight_ext(C: LinearCode, cap: int) -> DistanceResult:
    spec = C.spec
    total = spec.q**C.k
    if total > cap or total * C.n > 1 << 28:
        raise ValueError(f"enumeration size {total} exceeds cap {cap}")
    words = np.zeros((1, C.n), dtype=np.int64)
    for row in C.gen:
        scaled = [spec.scale_arr(lam, row) for lam in range(spec.q)]
        words = np.concatenate([spec.add_arr(words, s[None, :]) for s in scaled], axis=0)
    wts = np.count_nonzero(words, axis=1)
    wts[0] = C.n + 1  # zero word
    i = int(np.argmin(wts))
    return DistanceResult(int(wts[i]), int(wts[i]), witness=words[i])


def _normalize_columns(cols: np.ndarray, spec: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    """Scale each row (a column of H) so its first nonzero entry is 1.

    Returns (normalized, leading) where leading[i] is the original first
    nonzero value (0 for zero columns).
    """
    m = cols.shape[1]
    lead = np.zeros(cols.shape[0], dtype=np.int64)
    nz = cols != 0
    has = nz.any(axis=1)
    first = np.where(has, np.argmax(nz, axis=1), 0)
    lead[has] = cols[np.arange(cols.shape[0]), first][has]
    out = cols.copy()
    if np.any(has):
        inv = spec.inv_arr(lead[has])
        out[has] = spec.mul_arr(inv[:, None], cols[has])
    return out, lead


def _verify_word(C: LinearCode, word: np.ndarray, w: int) -> np.ndarray:
    assert np.count_nonzero(word) == w, "witness bookkeeping error"
    assert word in C, "witness not in code"
    return word


def _word_from_cols(C: LinearCode, idxs: Sequence[int], coeffs: Sequence[int], w: int) -> np.ndarray:
    word = np.zeros(C.n, dtype=np.int64)
    for i, c in zip(idxs, coeffs):
        word[i] = C.spec.add(int(word[i]), int(c))
    return _verify_word(C, word, w)


def low_weight_search(
    C: LinearCode, w_max: int, budget: SearchBudget | None = None
) -> tuple[int, np.ndarray | None]:
    """Exhaustive support search for codewords of weight <= w_max.

    Returns (excluded, word): every weight <= excluded is certified absent;
    word is a verified codeword of weight excluded+1 if one was found at the
    first non-excludable level.  Levels above the per-field exhaustive cap
    (5 in general, 6 for binary) are not attempted.
    """
    spec = C.spec
    budget = budget or SearchBudget()
    w_cap = min(w_max, _SUPPORT_LEVEL_CAP[spec.q == 2])
    H = dual(C).gen  # parity check; columns indexed by code coordinates
    cols = H.T.copy()  # n x m
    m = cols.shape[1]
    if m == 0:
        # C is the full space; weight-1 words exist
        word = np.zeros(C.n, dtype=np.int64)
        word[0] = 1
        return 0, _verify_word(C, word, 1)
    norm, lead = _normalize_columns(cols, spec)
    keys = [row.tobytes() for row in norm]
    # weight 1: zero columns
    for i in range(C.n):
        if lead[i] == 0:
            if w_max >= 1:
                return 0, _word_from_cols(C, [i], [1], 1)
    if w_cap < 2:
        return 1, None
    # weight 2: duplicate normalized columns
    seen: dict[bytes, int] = {}
    for i, key in enumerate(keys):
        if key in seen:
            j = seen[key]
            # lead[j]*norm + x*lead[i]*norm = 0 -> x = -lead[j]/lead[i] applied to i
            cj, ci = 1, spec.neg(spec.div(int(lead[j]), int(lead[i])))
            return 1, _word_from_cols(C, [j, i], [spec.div(cj, int(lead[j])), spec.div(ci, int(lead[i]))], 2)
        seen[key] = i
    if w_cap < 3:
        return 2, None
    found = _search_weight_3(C, norm, lead, seen)
    if found is not None:
        return 2, found
    if w_cap < 4:
        return 3, None
    pair_map = _pair_map(C, norm, spec, budget)
    found = _search_weight_4(C, norm, lead, pair_map)
    if found is not None:
        return 3, found
    if w_cap < 5:
        return 4, None
    found = _search_weight_5(C, norm, lead, pair_map, budget)
    if found is not None:
        return 4, found
    if w_cap < 6 or spec.q != 2:
        return 5, None
    found = _search_weight_6_binary(C, norm, budget)
    if found is not None:
        return 5, found
    return 6, None


def _units(spec: FieldSpec) -> list[int]:
    return list(range(1, spec.q))


def _search_weight_3(C, norm, lead, seen):
    spec = C.spec
    n = norm.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            for lam in _units(spec):
                v = spec.add_arr(norm[i], spec.scale_arr(lam, norm[j]))
                vn, vl = _normalize_columns(v[None, :], spec)
                if vl[0] == 0:
                    continue
                k = seen.get(vn[0].tobytes())
                if k is not None and k not in (i, j):
                    # norm_i + lam*norm_j - vl*norm_k = 0
                    coeffs = [1, lam, spec.neg(int(vl[0]))]
                    coeffs = [spec.div(c, int(lead[t])) for c, t in zip(coeffs, (i, j, k))]
                    return _word_from_cols(C, [i, j, k], coeffs, 3)
    return None


def _pair_map(C, norm, spec, budget):
    """normalized(norm_i + lam*norm_j) -> (i, j, lam, scale) for all pairs."""
    n = norm.shape[0]
    out: dict[bytes, list[tuple[int, int, int, int]]] = {}
    steps = 0
    for i in range(n):
        for j in range(i + 1, n):
            for lam in _units(spec):
                steps += 1
                if steps > budget.steps:
                    raise RuntimeError("support-search budget exhausted")
                v = spec.add_arr(norm[i], spec.scale_arr(lam, norm[j]))
                vn, vl = _normalize_columns(v[None, :], spec)
                if vl[0] == 0:
                    continue  # would be a weight-2 dependency; handled earlier
                out.setdefault(vn[0].tobytes(), []).append((i, j, lam, int(vl[0])))
    return out


def _search_weight_4(C, norm, lead, pair_map):
    spec = C.spec
    for entries in pair_map.values():
        for a in range(len(entries)):
            i, j, lam, s1 = entries[a]
            for b in range(a + 1, len(entries)):
                k, l, mu, s2 = entries[b]
                if len({i, j, k, l}) < 4:
                    continue
                # s1^-1 (n_i + lam n_j) = s2^-1 (n_k + mu n_l)
                c = [spec.inv(s1), spec.mul(spec.inv(s1), lam),
                     spec.neg(spec.inv(s2)), spec.neg(spec.mul(spec.inv(s2), mu))]
                c = [spec.div(cc, int(lead[t])) for cc, t in zip(c, (i, j, k, l))]
                return _word_from_cols(C, [i, j, k, l], c, 4)
    return None


def _search_weight_5(C, norm, lead, pair_map, budget):
    spec = C.spec
    n = norm.shape[0]
    units = _units(spec)
    steps = 0
    for i, j, k in itertools.combinations(range(n), 3):
        base = norm[[i, j, k]]
        for lam in units:
            for mu in units:
                steps += 1
                if steps > budget.steps:
                    raise RuntimeError("support-search budget exhausted")
                v = spec.add_arr(
                    base[0], spec.add_arr(spec.scale_arr(lam, base[1]), spec.scale_arr(mu, base[2]))
                )
                vn, vl = _normalize_columns(v[None, :], spec)
                if vl[0] == 0:
                    continue  # weight-3 dependency; handled earlier
                for (a, b, rho, s2) in pair_map.get(vn[0].tobytes(), ()):
                    if len({i, j, k, a, b}) < 5:
                        continue
                    s1 = int(vl[0])
                    c = [spec.inv(s1), spec.div(lam, s1), spec.div(mu, s1),
                         spec.neg(spec.inv(s2)), spec.neg(spec.div(rho, s2))]
                    c = [spec.div(cc, int(lead[t])) for cc, t in zip(c, (i, j, k, a, b))]
                    return _word_from_cols(C, [i, j, k, a, b], c, 5)
    return None


def _search_weight_6_binary(C, norm, budget):
    bits = _gfmat.pack_rows(norm)
    n = len(bits)
    triples: dict[int, tuple[int, int, int]] = {}
    steps = 0
    for i, j, k in itertools.combinations(range(n), 3):
        steps += 1
        if steps > budget.steps:
            raise RuntimeError("support-search budget exhausted")
        v = bits[i] ^ bits[j] ^ bits[k]
        if v == 0:
            continue
        prev = triples.get(v)
        if prev is not None and len(set(prev) | {i, j, k}) == 6:
            idxs = list(prev) + [i, j, k]
            return _word_from_cols(C, idxs, [1] * 6, 6)
        if prev is None:
            triples[v] = (i, j, k)
    return None


def find_weight_witness(
    C: LinearCode,
    w: int,
    budget: SearchBudget | None = None,
    *,
    seed: int = 7,
    max_iters: int = 400,
) -> np.ndarray | None:
    """A verified codeword of weight exactly w, or None.

    Small weights go through the exhaustive support search; larger ones use a
    seeded information-set search (random column permutations, codewords from
    at most two reduced generator rows).  Deterministic for a fixed seed.
    """
    budget = budget or SearchBudget()
    if w <= _SUPPORT_LEVEL_CAP[C.spec.q == 2]:
        excluded, word = low_weight_search(C, w, budget)
        if word is not None and int(np.count_nonzero(word)) == w:
            return word
        if word is None and excluded >= w:
            return None
    return _isd_witness(C, w, seed=seed, max_iters=max_iters, budget=budget)


def _isd_witness(C, w, *, seed, max_iters, budget):
    spec, k, n = C.spec, C.k, C.n
    if k == 0:
        return None
    rng = np.random.default_rng(seed)
    units = _units(spec)
    steps = 0
    for _ in range(max_iters):
        perm = rng.permutation(n)
        R, piv = _gfmat.rref(C.gen[:, perm], spec)
        if len(piv) < k:
            continue
        wts = np.count_nonzero(R, axis=1)
        for i in np.nonzero(wts == w)[0]:
            word = np.zeros(n, dtype=np.int64)
            word[perm] = R[i]
            return _verify_word(C, word, w)
        if spec.q == 2:
            bits = _gfmat.pack_rows(R)
            for i in range(k):
                for j in range(i + 1, k):
                    steps += 1
                    if steps > budget.steps:
                        return None
                    v = bits[i] ^ bits[j]
                    if v.bit_count() == w:
                        row = _gfmat.unpack_rows([v], n)[0]
                        word = np.zeros(n, dtype=np.int64)
                        word[perm] = row
                        return _verify_word(C, word, w)
        else:
            for i in range(k):
                for j in range(i + 1, k):
                    for lam in units:
                        steps += 1
                        if steps > budget.steps:
                            return None
                        v = spec.add_arr(R[i], spec.scale_arr(lam, R[j]))
                        if int(np.count_nonzero(v)) == w:
                            word = np.zeros(n, dtype=np.int64)
                            word[perm] = v
                            return _verify_word(C, word, w)
    return None


def is_cyclic(C: LinearCode) -> bool:
    """True iff the code is invariant under the cyclic coordinate shift."""
    shifted = np.roll(C.gen, 1, axis=1)
    return all(row in C for row in shifted)


def cyclic_min_weight_upto(C: LinearCode, w_cap: int) -> DistanceResult:
    """Minimum weight of a cyclic code, certified up to w_cap.

    Every weight-w codeword of a cyclic [n,k] code has a cyclic shift with at
    most floor(w*k/n) nonzero entries inside a fixed window of k consecutive
    information positions, so enumerating all such sparse messages certifies:
    if the minimum found is <= w_cap it is the exact distance, otherwise the
    distance exceeds w_cap.  Prime fields only.
    """
    spec = C.spec
    if spec.r != 1:
        raise FieldError("window enumeration implemented for prime fields")
    if not is_cyclic(C):
        raise ValueError("code is not cyclic; window bound does not apply")
    n, k = C.n, C.k
    G = None
    for off in range(n):
        colorder = [(off + t) % n for t in range(n)]
        R, piv = _gfmat.rref(C.gen[:, colorder], spec)
        if len(piv) == k and piv[-1] == k - 1:
            G = np.empty_like(R)
            G[:, colorder] = R
            window = colorder[:k]
            break
    if G is None:
        raise ValueError("no consecutive information window found")
    omega = (w_cap * k) // n
    out_cols = [c for c in range(n) if c not in set(window)]
    Gout = G[:, out_cols].astype(np.float32)
    best, best_word = n + 1, None
    units = np.arange(1, spec.p, dtype=np.float32)
    for t in range(1, omega + 1):
        if t > k:
            break
        grids = np.stack(np.meshgrid(*([units] * t), indexing="ij"), axis=-1).reshape(-1, t)
        for support in itertools.combinations(range(k), t):
            words_out = (grids @ Gout[list(support)]) % spec.p
            wts = np.count_nonzero(words_out, axis=1) + t
            i = int(np.argmin(wts))
            if wts[i] < best:
                best = int(wts[i])
                msg = np.zeros(k, dtype=np.int64)
                msg[list(support)] = grids[i].astype(np.int64)
                word = _gfmat.matmul(msg[None, :], G, spec)[0]
                best_word = word
    if best <= w_cap:
        return DistanceResult(best, best, witness=_verify_word(C, best_word, best))
    return DistanceResult(w_cap + 1, C.n)


def _split_side_tables(cols, supports, grids, pow_vec, p, negate):
    """Packed syndrome keys for one side of a split-support search."""
    keys = np.empty(len(supports) * len(grids), dtype=np.int64)
    chunk = max(1, 3_000_000 // max(1, len(grids)))
    for lo in range(0, len(supports), chunk):
        sup = supports[lo : lo + chunk]
        syn = np.matmul(grids, cols[sup]) % p  # (chunk, g, m)
        if negate:
            syn = (-syn) % p
        keys[lo * len(grids) : (lo + len(sup)) * len(grids)] = (syn @ pow_vec).reshape(-1)
    return keys


def syndrome_split_search(
    C: LinearCode, w_max: int, budget: SearchBudget | None = None
) -> tuple[int, np.ndarray | None]:
    """Exact search for codewords of weight <= w_max via syndrome collisions.

    Each weight-w support splits uniquely into its ceil(w/2) lowest and
    floor(w/2) highest positions.  Both halves are enumerated with packed
    base-p syndrome keys (the low half normalized to leading coefficient 1,
    the high half negated), and a sorted join finds every cancelling pair, so
    each completed level is an exhaustive certificate.  Same return convention
    as low_weight_search: (excluded, word).  Levels whose table sizes exceed
    the step budget are not attempted.  Prime fields only.
    """
    spec = C.spec
    if spec.r != 1:
        raise FieldError("syndrome split search implemented for prime fields")
    budget = budget or SearchBudget()
    p, n = spec.p, C.n
    H = dual(C).gen
    m = H.shape[0]
    if m == 0:
        word = np.zeros(n, dtype=np.int64)
        word[0] = 1
        return 0, _verify_word(C, word, 1)
    if p**m >= 1 << 62:
        raise ValueError("syndrome keys do not fit a packed 64-bit integer")
    cols = H.T.astype(np.int64)
    pow_vec = (p ** np.arange(m)).astype(np.int64)
    units = np.arange(1, p, dtype=np.int64)
    for w in range(1, w_max + 1):
        a, b = (w + 1) // 2, w // 2
        if b == 0:
            zero = np.nonzero(~cols.any(axis=1))[0]
            if zero.size:
                return 0, _word_from_cols(C, [int(zero[0])], [1], 1)
            continue
        a_count = math.comb(n, a) * (p - 1) ** (a - 1)
        b_count = math.comb(n, b) * (p - 1) ** b
        if a_count + b_count > budget.steps:
            return w - 1, None
        bsup = np.array(list(itertools.combinations(range(n), b)), dtype=np.int64)
        bgrids = np.array(list(itertools.product(*[units] * b)), dtype=np.int64)
        bkeys = _split_side_tables(cols, bsup, bgrids, pow_vec, p, negate=True)
        order = np.argsort(bkeys, kind="stable")
        bkeys_sorted = bkeys[order]
        agrids = np.array(list(itertools.product([1], *[units] * (a - 1))), dtype=np.int64)
        chunk = max(1, 3_000_000 // len(agrids))
        pending: list[tuple[int, ...]] = []

        def scan(sup_chunk):
            sup = np.array(sup_chunk, dtype=np.int64)
            keys = ((np.matmul(agrids, cols[sup]) % p) @ pow_vec).reshape(-1)
            lo = np.searchsorted(bkeys_sorted, keys, side="left")
            hi = np.searchsorted(bkeys_sorted, keys, side="right")
            for ci in np.nonzero(hi > lo)[0]:
                si, gi = divmod(int(ci), len(agrids))
                a_max = sup[si][-1]
                for pos in range(int(lo[ci]), int(hi[ci])):
                    bi, bgi = divmod(int(order[pos]), len(bgrids))
                    if bsup[bi][0] <= a_max:
                        continue
                    word = np.zeros(n, dtype=np.int64)
                    word[sup[si]] = agrids[gi]
                    word[bsup[bi]] = bgrids[bgi]
                    if int(np.count_nonzero(word)) == w and not (H @ word % p).any():
                        return _verify_word(C, word, w)
            return None

        for support in itertools.combinations(range(n), a):
            pending.append(support)
            if len(pending) == chunk:
                hit = scan(pending)
                if hit is not None:
                    return w - 1, hit
                pending = []
        if pending:
            hit = scan(pending)
            if hit is not None:
                return w - 1, hit
    return w_max, None


def min_distance(
    C: LinearCode,
    budget: SearchBudget | None = None,
    *,
    lower_hint: int = 1,
) -> DistanceResult:
    """Bounded minimum-distance computation.

    Exact when the code is exhaustively enumerable within budget, or when the
    support search finds a word at the first non-excluded level.  Otherwise a
    bracket combining the exclusion level with any caller-provided lower bound
    (e.g. a footprint or defining-set bound).
    """
    if C.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    budget = budget or SearchBudget()
    if C.spec.q**C.k <= budget.enumeration_cap:
        try:
            return exhaustive_min_weight(C, budget.enumeration_cap)
        except ValueError:
            pass  # extension-field enumeration too large in memory; fall through
    excluded, word = low_weight_search(C, budget.w_max, budget)
    if word is not None:
        w = int(np.count_nonzero(word))
        return DistanceResult(max(lower_hint, w), w, witness=word)
    return DistanceResult(max(lower_hint, excluded + 1), C.n)
