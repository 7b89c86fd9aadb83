"""End-to-end acceptance gate.

Each test covers one release criterion and prints a single pass/fail line, so
``pytest -s tests/test_acceptance.py`` doubles as a checklist.  Every check is
exact — the quantities are integers or exact rationals — and the timed
criteria assert their wall-clock budgets.
"""

import functools
import math
import random
import time
from fractions import Fraction

import numpy as np

from evalcode import csst, pir
from evalcode._report import check_report
from evalcode.cartesian import (
    DefiningSet,
    JAffineFamily,
    delta_dual,
    delta_hyperbolic,
    delta_rm,
    delta_wrm,
    dual_is_exact,
    evaluate,
    field_from_order,
    footprint_bound,
    footprint_witness,
    full_affine_family,
    is_decreasing,
    minkowski_schur,
)
from evalcode.cyclotomic import (
    closure,
    consecutive_union,
    is_coset_closed,
    subfield_code,
)
from evalcode.linear_code import (
    LinearCode,
    dual,
    exhaustive_min_weight,
    schur,
    subfield_subcode,
)
from evalcode.pir import (
    PROVED,
    VERIFIED,
    te_pir_subfield,
    transitivity_premises,
    verify_transitive,
)


def fam(q, N, J=()):
    return JAffineFamily(field_from_order(q), N, J)


def criterion(num, summary):
    """Print ``criterion N: pass/FAIL`` around the wrapped test body."""

    def deco(fn):
        @functools.wraps(fn)
        def run():
            try:
                detail = fn()
            except BaseException as exc:
                print(f"criterion {num:2d}: FAIL — {summary} ({exc!r})")
                raise
            print(f"criterion {num:2d}: pass — {detail or summary}")

        return run

    return deco


# Families used by the randomized oracles: every ground-field order the package
# targets, one to three variables, unit-only and zero-keeping coordinates,
# lengths up to 343.
_ORACLE_POOL = [
    (4, (4,), ()),
    (4, (4, 4), ()),
    (4, (4, 4, 4), ()),
    (4, (4, 4), (2,)),
    (8, (8, 8), ()),
    (8, (8, 8), (1, 2)),
    (8, (8, 2, 8), ()),
    (16, (16,), (1,)),
    (16, (6, 4), ()),
    (16, (16, 4, 2), ()),
    (16, (16, 16), ()),
    (49, (7, 7), ()),
    (49, (5, 4), (1,)),
    (49, (49, 7), ()),
    (49, (7, 7, 7), ()),
    (64, (10,), ()),
    (64, (10, 22), ()),
    (64, (64, 4), ()),
]


def _random_subset(rng, f, max_size=6, inside_e_prime=False):
    box = f.e_prime_box() if inside_e_prime else f.box()
    k = rng.randint(1, min(max_size, len(box)))
    return DefiningSet(f, rng.sample(box, k))


@criterion(1, "product exponent set vs. componentwise code product")
def test_criterion_01_schur_product_oracle():
    rng = random.Random(2024)
    fams = [fam(*t) for t in _ORACLE_POOL]
    assert all(f.n_points <= 343 for f in fams)
    assert {f.spec.q for f in fams} == {4, 8, 16, 49, 64}
    t0 = time.perf_counter()
    for i in range(200):
        f = fams[i % len(fams)]
        d1 = _random_subset(rng, f)
        d2 = _random_subset(rng, f)
        lhs = evaluate(f, minkowski_schur(f, d1, d2))
        rhs = schur(evaluate(f, d1), evaluate(f, d2))
        assert lhs == rhs, (f.spec.q, f.N, f.J, d1.elems, d2.elems)
    dt = time.perf_counter() - t0
    assert dt < 60.0
    return f"200 random instances agree exactly ({dt:.1f} s, budget 60 s)"


@criterion(2, "combinatorial dual set vs. matrix dual")
def test_criterion_02_dual_set_oracle():
    rng = random.Random(4048)
    fams = [fam(*t) for t in _ORACLE_POOL]
    # Exactness needs every zero-keeping coordinate to have p | N_j so that the
    # pairing strikes a single partner exponent per member.
    exact_fams = [
        f
        for f in fams
        if all(f.N[j] % f.spec.p == 0 for j in range(f.m) if (j + 1) not in f.J)
    ]
    t0 = time.perf_counter()
    for i in range(200):
        f = exact_fams[i % len(exact_fams)]
        d = _random_subset(rng, f, inside_e_prime=True)
        dd = delta_dual(f, d)
        assert dual_is_exact(f, d, dd)
        assert dual(evaluate(f, d)) == evaluate(f, dd), (f.spec.q, f.N, f.J, d.elems)
    # Outside the sub-box only containment is promised; force a boundary
    # exponent into each draw so the instance genuinely leaves it.
    outside = 0
    for i in range(60):
        f = fams[i % len(fams)]
        boundary = sorted(set(f.box()) - set(f.e_prime_box()))
        if not boundary:
            continue
        d = _random_subset(rng, f).union(DefiningSet(f, [rng.choice(boundary)]))
        D = dual(evaluate(f, d))
        for row in evaluate(f, delta_dual(f, d)).gen:
            assert row in D
        outside += 1
    assert outside >= 30
    dt = time.perf_counter() - t0
    assert dt < 60.0
    return (
        f"200 in-box instances exact, {outside} boundary instances contained "
        f"({dt:.1f} s, budget 60 s)"
    )


# (q, N, J, subfield order) — lengths up to 255, subfield degree a proper
# divisor of the extension degree.
_SUBFIELD_POOL = [
    (4, (4, 4, 4), (), 2),
    (8, (8, 8), (1, 2), 2),
    (16, (16,), (1,), 2),
    (16, (16,), (1,), 4),
    (16, (16, 4), (), 2),
    (16, (6, 4), (), 4),
    (49, (7, 7), (), 7),
    (49, (49,), (1,), 7),
    (64, (8, 8), (), 2),
    (64, (8, 8), (), 8),
    (64, (64,), (1,), 2),
    (64, (64,), (1,), 4),
    (64, (64,), (1,), 8),
    (256, (256,), (1,), 2),
    (256, (256,), (1,), 16),
]


@criterion(3, "subfield construction vs. matrix subfield subcode")
def test_criterion_03_subfield_subcode_oracle():
    rng = random.Random(355)
    cases = [(fam(q, N, J), qp) for q, N, J, qp in _SUBFIELD_POOL]
    assert all(f.n_points <= 255 for f, _ in cases)
    for i in range(100):
        f, qp = cases[i % len(cases)]
        seeds = rng.sample(f.box(), rng.randint(1, 2))
        delta = closure(f, qp, DefiningSet(f, seeds))
        assert is_coset_closed(f, qp, delta)
        C = subfield_code(f, qp, delta)
        assert C.k == len(delta)
        s = 1
        while f.spec.p**s != qp:
            s += 1
        assert C == subfield_subcode(evaluate(f, delta), s), (f.spec.q, f.N, qp, seeds)
    return "100 coset-closed instances match the matrix oracle; dimension = |Δ|"


@criterion(4, "duality does not commute with subfield restriction of a product")
def test_criterion_04_subfield_product_dual_gap():
    f = fam(16, (16,), (1,))
    d1 = closure(f, 2, DefiningSet(f, [(1,)]))
    assert [e[0] for e in d1] == [1, 2, 4, 8]
    d2 = DefiningSet(f, [(0,)])
    assert sorted(e[0] for e in delta_dual(f, d1)) == [0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12]
    assert sorted(e[0] for e in delta_dual(f, d2)) == list(range(1, 15))
    C1, C2 = evaluate(f, d1), evaluate(f, d2)
    product_side = dual(subfield_subcode(schur(C1, C2), 1))
    factor_side = schur(dual(subfield_subcode(C1, 1)), dual(subfield_subcode(C2, 1)))
    assert product_side != factor_side
    assert (product_side.n, product_side.k) == (15, 11)
    assert (factor_side.n, factor_side.k) == (15, 15)
    return "length-15 fixture: [15,11] vs [15,15], both dual sets reproduced"


@criterion(5, 'table("VII") reproduction with certified distances')
def test_criterion_05_weighted_table_reproduction():
    t0 = time.perf_counter()
    rows = csst.table("VII")
    dt = time.perf_counter() - t0
    assert [r.label for r in rows] == ["m=7", "m=8", "m=9", "m=10"]
    ok, lines = check_report(rows)
    assert ok, lines
    assert len(lines) == 4 and all("corrected" in ln for ln in lines), lines
    css = [(r.scheme.n, r.scheme.k, r.scheme.d_lower) for r in rows]
    assert css == [(128, 36, 4), (256, 21, 8), (512, 176, 4), (1024, 204, 8)]
    assert dt < 600.0
    return f"4 rows match; 4 stored misprints annotated ({dt:.1f} s, budget 600 s)"


@criterion(6, 'table("jcss-t") dimensions exact, distances certified')
def test_criterion_06_grid_csst_table():
    rows = csst.table("jcss-t")
    by_label = {r.label: r for r in rows}
    printed = {
        lab: tuple(r.cells[c].printed for c in ("n", "k", "d"))
        for lab, r in by_label.items()
    }
    assert printed == {
        "128": (128, 32, 4),
        "192": (192, 57, 4),
        "256": (256, 28, 8),
        "448": (448, 141, 4),
        "512": (512, 166, 4),
        "576": (576, 183, 4),
        "1024a": (1024, 231, 6),
        "1024b": (1024, 222, 8),
    }
    gaps = []
    for r in rows:
        assert r.cells["n"].match and r.cells["k"].match, r.label
        d = r.cells["d"]
        if isinstance(d.computed, int):
            assert d.computed == d.expected, r.label
        else:  # certified lower bound without a matching word: report, not fail
            text = str(d.computed)
            assert text.startswith(">="), r.label
            gaps.append(f"{r.label}: certified {text}, stored {d.printed}")
    for lab in ("128", "192"):
        assert by_label[lab].cells["d"].computed == 4
    if gaps:
        return "8 rows, dimensions exact; certification gaps: " + "; ".join(gaps)
    return "8 rows, dimensions exact, every distance certified exactly"


def _rows_by_privacy(rows):
    grouped = {}
    for r in rows:
        grouped.setdefault(r.cells["privacy"].computed, {})[r.style] = r
    return grouped


@criterion(7, "retrieval tables I, II, cyclic48, IV, berman49")
def test_criterion_07_retrieval_tables():
    t0 = time.perf_counter()
    tables = {k: pir.table(k) for k in ("I", "II", "cyclic48", "IV", "berman49")}
    dt = time.perf_counter() - t0

    rows = tables["I"]
    assert len(rows) == 10
    ok, lines = check_report(rows)
    assert ok and not lines
    assert {r.scheme.transitivity for r in rows} == {PROVED}

    rows = tables["II"]
    assert len(rows) == 22
    ok, lines = check_report(rows)
    assert ok, lines
    assert len(lines) == 2 and all("corrected" in ln for ln in lines), lines

    for kind in ("I", "II"):
        for styles in _rows_by_privacy(tables[kind]).values():
            if {"shaded", "bold"} <= set(styles):
                assert styles["bold"].scheme.rate >= styles["shaded"].scheme.rate

    rows = tables["cyclic48"]
    assert len(rows) == 27
    ok, _ = check_report(rows)
    assert ok
    exception_seen = False
    for privacy, styles in _rows_by_privacy(rows).items():
        if not {"shaded", "bold"} <= set(styles):
            continue
        bold, shaded = styles["bold"].scheme.rate, styles["shaded"].scheme.rate
        if privacy == 23:
            assert bold < shaded  # the single stored exception row
            exception_seen = True
        else:
            assert bold >= shaded, privacy
    assert exception_seen

    rows = tables["IV"]
    assert len(rows) == 8
    ok, lines = check_report(rows)
    assert ok and not lines
    privacies = [r.cells["privacy"].computed for r in rows]
    assert privacies == sorted(privacies)
    assert privacies[0] == 3 and privacies[-1] == 19
    assert all(r.scheme.privacy_lower == p for r, p in zip(rows, privacies))

    rows = tables["berman49"]
    rates = {r.label: r.scheme.rate for r in rows}
    assert rates == {
        "B1": Fraction(42, 49),
        "B2": Fraction(39, 49),
        "reference": Fraction(36, 49),
    }
    assert dt < 900.0
    return f"all five tables reproduced ({dt:.1f} s, budget 900 s)"


@criterion(8, "length-343 subfield scheme: rate floor and privacy")
def test_criterion_08_subfield_scheme_floor():
    scheme = te_pir_subfield(fam(49, (49, 7)), 7)
    assert scheme.n == 343
    # structural floor (n - (6r + 5))/n with r = 2; the instance attains it
    assert scheme.rate == Fraction(326, 343) == Fraction(343 - 17, 343)
    assert scheme.rate_string == "326/343"
    assert scheme.privacy_lower == 3
    assert scheme.transitivity == VERIFIED
    return "rate 326/343 attains the (343-17)/343 floor; privacy exactly 3"


@criterion(9, "grid vs. Reed-Muller comparison and the binomial gap")
def test_criterion_09_rm_comparison():
    rows = pir.table("rm_comparison")
    ok, lines = check_report(rows)
    assert ok, lines
    by_key = {(r.label, r.style): r for r in rows}
    stored = {
        key: (r.scheme.n, r.cells["k_D"].printed, r.cells["k_Dperp"].printed)
        for key, r in by_key.items()
    }
    assert stored == {
        ("r=7", "bold"): (256, 30, 228),
        ("r=7", "shaded"): (256, 37, 219),
        ("r=8", "bold"): (512, 34, 478),
        ("r=8", "shaded"): (512, 46, 466),
    }
    computed = {
        key: (r.cells["k_D"].computed, r.cells["k_Dperp"].computed)
        for key, r in by_key.items()
    }
    assert computed == {
        ("r=7", "bold"): (30, 226),  # stored 228 is annotated as a misprint
        ("r=7", "shaded"): (37, 219),
        ("r=8", "bold"): (34, 478),
        ("r=8", "shaded"): (46, 466),
    }
    for r in (7, 8):
        assert by_key[(f"r={r}", "bold")].scheme.rate > by_key[(f"r={r}", "shaded")].scheme.rate
    for r in range(6, 13):
        assert math.comb(r + 1, 0) + math.comb(r + 1, 1) + math.comb(r + 1, 2) > 4 * r + 2
    return "both lengths match the stored rows; dimension gap holds for 6 <= r <= 12"


@criterion(10, "bound/witness properties and the transitivity verifier")
def test_criterion_10_property_suites():
    # --- footprint bound vs. exhaustive distance -------------------------
    f42 = full_affine_family(4, 2)
    f43 = full_affine_family(4, 3)
    f82 = full_affine_family(8, 2)
    f16u = fam(16, (16,), (1,))
    f77 = fam(49, (7, 7))
    f88u = fam(8, (8, 8), (1, 2))
    f64a = fam(16, (6, 4))
    fixtures = [
        (f42, delta_rm(4, 2, 1)),
        (f42, delta_rm(4, 2, 2)),
        (f42, delta_rm(4, 2, 3)),
        (f42, delta_hyperbolic(4, 2, 4)),
        (f43, delta_rm(4, 3, 2)),
        (f82, delta_rm(8, 2, 2)),
        (f82, delta_wrm(8, 2, 3, (1, 2))),
        (f16u, closure(f16u, 2, DefiningSet(f16u, [(1,)]))),
        (f16u, DefiningSet(f16u, [(0,), (1,), (2,)])),
        (f77, DefiningSet(f77, [(0, 0), (1, 0), (0, 1)])),
        (f88u, DefiningSet(f88u, [(0, 0), (1, 0), (0, 1), (1, 1)])),
        (f64a, DefiningSet(f64a, [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)])),
    ]
    decreasing = 0
    for f, d in fixtures:
        C = evaluate(f, d)
        assert f.spec.q**C.k <= 1 << 26  # exhaustively checkable
        exact = exhaustive_min_weight(C)
        assert footprint_bound(f, d) <= exact.lower, (f.spec.q, f.N, d.elems)
        if is_decreasing(d):
            _, weight = footprint_witness(f, d)
            assert weight == footprint_bound(f, d), (f.spec.q, f.N, d.elems)
            decreasing += 1
    assert decreasing >= 8

    # --- verifier confirms the stored-table codes ------------------------
    for kind, family in (("I", full_affine_family(7, 2)), ("II", full_affine_family(7, 3))):
        rows = pir.table(kind)
        assert verify_transitive(rows[0].scheme.storage, family=family) == VERIFIED
        for r in rows:
            assert verify_transitive(r.scheme.retrieval, family=family) == VERIFIED, (
                kind,
                r.label,
                r.style,
            )

    # --- verifier confirms consecutive-class cyclic fixtures -------------
    for q, qp, count in ((16, 2, 3), (16, 4, 3), (64, 2, 3), (256, 2, 2), (256, 4, 2)):
        f = fam(q, (q,), (1,))
        for i in range(count):
            dlt = consecutive_union(f, qp, i)
            assert transitivity_premises(f, dlt, qp) == PROVED
            C = subfield_code(f, qp, dlt)
            shift = np.roll(np.arange(C.n), 1)
            assert verify_transitive(C, [shift]) == VERIFIED, (q, qp, i)

    # --- verifier never passes a corrupted generator matrix --------------
    f = fam(16, (16,), (1,))
    base = evaluate(f, DefiningSet(f, [(0,), (1,), (2,), (4,)]))
    assert verify_transitive(base, family=f) == VERIFIED
    shift = np.roll(np.arange(base.n), 1)
    rng = random.Random(1007)
    rejected = 0
    while rejected < 10:
        gen = base.gen.copy()
        i = rng.randrange(gen.shape[0])
        j = rng.randrange(gen.shape[1])
        gen[i, j] = base.spec.add(int(gen[i, j]), rng.randrange(1, 16))
        C = LinearCode(base.spec, gen)
        if C == base:
            continue
        assert verify_transitive(C, family=f) != VERIFIED
        assert verify_transitive(C, [shift]) != VERIFIED
        rejected += 1
    return (
        f"{len(fixtures)} bound fixtures exhaustively confirmed "
        f"({decreasing} with matching witnesses); verifier confirmed 32 stored "
        "codes and 13 cyclic fixtures, rejected 10 corrupted ones"
    )
