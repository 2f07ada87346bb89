import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ctcsidh.fp import Fp, OpCounter, ct_cswap, ct_isequal, ct_select, pow_fixed_schedule
from ctcsidh.montgomery import PointXZ

P512 = 4 * sympy.prod(list(sympy.primerange(3, 374))[:73]) * 587 - 1
elements = st.integers(min_value=0, max_value=P512 - 1)


def test_counts_per_operation():
    ctx = Fp(419)
    ctx.add(1, 2), ctx.sub(1, 2), ctx.neg(5)
    ctx.mul(3, 4)
    ctx.sqr(7), ctx.sqr(8)
    assert ctx.ops.totals() == (1, 2, 3)
    before = ctx.ops.totals()
    ctx.mul(1, 1)
    assert ctx.ops.since(before) == (1, 0, 0)


def test_contexts_do_not_share_counters():
    a, b = Fp(419), Fp(419)
    a.mul(2, 3)
    assert b.ops.totals() == (0, 0, 0)
    shared = OpCounter()
    Fp(419, shared).mul(2, 3)
    Fp(419, shared).sqr(2)
    assert shared.totals() == (1, 1, 0)


def test_arithmetic_values():
    ctx = Fp(419)
    assert ctx.add(418, 5) == 4
    assert ctx.sub(3, 5) == 417
    assert ctx.neg(0) == 0
    assert ctx.mul(100, 100) == 10000 % 419


def test_legendre_matches_sympy(backend):
    ctx = Fp(419)
    for a in range(1, 419):
        assert ctx.legendre(a) == sympy.legendre_symbol(a, 419)
    assert ctx.legendre(0) == 0


def test_legendre_cost_is_fixed(backend):
    counts = set()
    for a in (0, 1, 2, 418, 123):
        ctx = Fp(419)
        ctx.legendre(a)
        counts.add(ctx.ops.totals())
    assert len(counts) == 1


def test_inverse(backend):
    ctx = Fp(419)
    for a in range(1, 419):
        assert a * ctx.inv(a) % 419 == 1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_field_laws_512(a, b):
    ctx = Fp(P512)
    assert ctx.sub(ctx.add(a, b), b) == a
    assert ctx.mul(a, b) == a * b % P512
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
    assert ctx.legendre(ctx.sqr(a)) == (1 if a else 0)


@settings(max_examples=40, deadline=None)
@given(elements, st.integers(min_value=0, max_value=2**600))
def test_pow_matches_builtin(a, e):
    ctx = Fp(P512)
    assert pow_fixed_schedule(ctx, a, e) == pow(a, e, P512)
    assert ctx.pow(a, e) == pow(a, e, P512)


def test_pow_schedule_cost():
    ctx = Fp(419)
    pow_fixed_schedule(ctx, 5, 0b101101)
    assert ctx.ops.totals() == (3, 5, 0)


@given(st.integers(-(2**600), 2**600), st.integers(-(2**600), 2**600))
def test_isequal(x, y):
    assert ct_isequal(x, y) == int(x == y)


@given(st.integers(0, 2**520), st.integers(0, 2**520), st.integers(0, 1))
def test_cswap_ints(x, y, b):
    assert ct_cswap(x, y, b) == ((y, x) if b else (x, y))
    assert ct_select(x, y, b) == (y if b else x)


def test_cswap_named_tuples():
    P, Q = PointXZ(1, 2), PointXZ(3, 4)
    assert ct_cswap(P, Q, 1) == (Q, P)
    assert type(ct_cswap(P, Q, 0)[0]) is PointXZ
    assert ct_cswap((1, 2), (3, 4), 1) == ((3, 4), (1, 2))


def test_encode_decode(csidh512):
    ctx = Fp(csidh512.p)
    x = csidh512.p - 1
    data = ctx.encode(x)
    assert len(data) == 64
    assert ctx.decode(data) == x
    with pytest.raises(ValueError):
        ctx.decode(data[:-1])
    with pytest.raises(ValueError):
        ctx.decode(csidh512.p.to_bytes(64, "little"))
