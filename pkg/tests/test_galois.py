import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evalcode.galois import (
    FieldError,
    arith,
    make_field,
    primitive_element,
    subgroup_roots,
    trace_to_prime,
)

FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (7, 1), (7, 2), (2, 6), (2, 8), (2, 9)]


def test_make_field_rejects_bad_input():
    with pytest.raises(FieldError):
        make_field(4, 1)
    with pytest.raises(FieldError):
        make_field(2, 0)


def test_gf4_structure():
    F4 = make_field(2, 2)
    assert F4.modulus == (1, 1, 1)  # x^2 + x + 1
    a = primitive_element(F4)
    assert a.idx == 2  # the class of x
    assert a * a == a + 1
    assert a * a * a == 1
    assert arith(a, a * a, "mul") == F4(1)


def test_gf2_and_gf7_scalars():
    F2 = make_field(2, 1)
    assert primitive_element(F2) == F2(1)
    F7 = make_field(7, 1)
    assert arith(F7(3), F7(5), "mul") == F7(1)
    assert (F7(3) / F7(5)) * F7(5) == F7(3)


def test_gf8_primitive_order():
    F8 = make_field(2, 3)
    g = primitive_element(F8)
    assert g.order() == 7
    powers = {g**k for k in range(7)}
    assert len(powers) == 7


@pytest.mark.parametrize("p,r", FIELDS)
def test_field_axioms_random(p, r):
    spec = make_field(p, r)
    rng = np.random.default_rng(p * 100 + r)
    idxs = rng.integers(0, spec.q, size=30)
    for a, b in zip(idxs[:15], idxs[15:]):
        a, b = int(a), int(b)
        assert spec.add(a, b) == spec.add(b, a)
        assert spec.mul(a, b) == spec.mul(b, a)
        c = int(rng.integers(0, spec.q))
        # distributivity
        assert spec.mul(a, spec.add(b, c)) == spec.add(spec.mul(a, b), spec.mul(a, c))
        if b != 0:
            assert spec.mul(spec.div(a, b), b) == a
        assert spec.sub(spec.add(a, b), b) == a


def test_trace_values():
    F16 = make_field(2, 4)
    assert trace_to_prime(F16(1)).idx == 0  # 1+1+1+1 in char 2
    F4 = make_field(2, 2)
    a = primitive_element(F4)
    assert trace_to_prime(a) == F4(1)  # a + a^2 = a + a + 1 = 1
    assert trace_to_prime(F4(0)) == F4(0)


@pytest.mark.parametrize("p,r", [(2, 4), (7, 2), (2, 6)])
def test_trace_additivity_and_prime_restriction(p, r):
    spec = make_field(p, r)
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, b = (spec(int(x)) for x in rng.integers(0, spec.q, size=2))
        assert trace_to_prime(a + b) == trace_to_prime(a) + trace_to_prime(b)
    # trace of a prime-field element t is r*t mod p
    for t in range(p):
        assert trace_to_prime(spec(t)).idx == (r * t) % p
    # surjectivity onto the prime field
    images = {trace_to_prime(spec(i)).idx for i in range(spec.q)}
    assert images == set(range(p))


@pytest.mark.parametrize("p,r", FIELDS)
def test_primitive_element_exhaustive_order(p, r):
    spec = make_field(p, r)
    g = primitive_element(spec)
    if spec.q == 2:
        assert g.idx == 1
        return
    acc = g
    for k in range(1, spec.q - 1):
        assert acc.idx != 1 or k == spec.q - 1
        acc = acc * g
    assert acc == spec(1)


def test_subgroup_roots_gf49():
    F49 = make_field(7, 2)
    roots = subgroup_roots(F49, 48)
    assert len(roots) == 48
    assert len({x.idx for x in roots}) == 48
    assert all(x**48 == F49(1) for x in roots[:5])


def test_subgroup_roots_closure_and_errors():
    F64 = make_field(2, 6)
    mu = subgroup_roots(F64, 63)
    assert len(mu) == 63 and mu[0] == F64(1)
    mu9 = subgroup_roots(F64, 9)
    vals = {x.idx for x in mu9}
    for x in mu9:
        for y in mu9:
            assert (x * y).idx in vals
    assert subgroup_roots(F64, 1) == [F64(1)]
    with pytest.raises(FieldError):
        subgroup_roots(F64, 5)


def test_vectorized_ops_match_scalar():
    for p, r in [(2, 4), (7, 2), (2, 8)]:
        spec = make_field(p, r)
        rng = np.random.default_rng(11)
        a = rng.integers(0, spec.q, size=200)
        b = rng.integers(0, spec.q, size=200)
        add = spec.add_arr(a, b)
        mul = spec.mul_arr(a, b)
        for i in range(0, 200, 17):
            assert add[i] == spec.add(int(a[i]), int(b[i]))
            assert mul[i] == spec.mul(int(a[i]), int(b[i]))
        nzb = np.where(b == 0, 1, b)
        dv = spec.mul_arr(a, spec.inv_arr(nzb))
        assert np.array_equal(spec.mul_arr(dv, nzb), a)
        e = 5
        pw = spec.pow_arr(a, e)
        for i in range(0, 200, 29):
            assert pw[i] == spec.pow(int(a[i]), e)


def test_subfield_indices():
    F16 = make_field(2, 4)
    sub = F16.subfield_indices(2)
    assert len(sub) == 4
    sub1 = F16.subfield_indices(1)
    assert set(sub1.tolist()) == {0, 1}
    with pytest.raises(FieldError):
        F16.subfield_indices(3)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 48), st.integers(0, 48))
def test_gf49_hypothesis_ring_laws(ai, bi):
    F = make_field(7, 2)
    a, b = F(ai), F(bi)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + F(1)) == a * b + a
    if bi:
        assert (a / b) * b == a
