import random

import pytest

from ctcsidh import oracle
from ctcsidh.edwards import (IDENTITY, PointYT, edwards_isog_codomain, edwards_isog_eval,
                             edwards_to_mont, kernel_multiples, mont_to_edwards, ydbl, ydiffadd)
from ctcsidh.fp import Fp
from ctcsidh.isogeny import montgomery_kernel_multiples, velu_eval_montgomery
from ctcsidh.params import load_parameter_set
from ctcsidh.montgomery import (INFINITY, PointXZ, curve_from_affine, normalize, proj_equal,
                                xadd, xdbl)

P = 419


def test_model_map_trivial_points():
    ctx = Fp(P)
    assert mont_to_edwards(INFINITY, ctx) == IDENTITY
    assert mont_to_edwards(PointXZ(0, 1), ctx) == PointYT(P - 1, 1)
    assert proj_equal(edwards_to_mont(mont_to_edwards(PointXZ(5, 7), ctx), ctx), PointXZ(5, 7), P)


def test_ydbl_trivial_points():
    ctx = Fp(P)
    E = curve_from_affine(158, ctx)
    Y, T = ydbl(IDENTITY, E, ctx)
    assert Y == T
    Y, T = ydbl(PointYT(P - 1, 1), E, ctx)
    assert Y == T and Y != 0


def test_ydiffadd_identity():
    ctx = Fp(P)
    Q = PointYT(12, 34)
    assert proj_equal(ydiffadd(Q, IDENTITY, Q, ctx), Q, P)


def test_cost_exactness():
    ctx = Fp(P)
    E = curve_from_affine(0, ctx)
    rnd = random.Random(3)
    for k in (1, 2, 3, 10, 293):
        for _ in range(5):
            pts = [PointYT(rnd.randrange(P), rnd.randrange(P)) for _ in range(k + 3)]
            b = ctx.ops.totals()
            ydbl(pts[0], E, ctx)
            assert ctx.ops.since(b) == (4, 2, 4)
            b = ctx.ops.totals()
            ydiffadd(pts[0], pts[1], pts[2], ctx)
            assert ctx.ops.since(b) == (4, 2, 6)
            b = ctx.ops.totals()
            edwards_isog_eval(pts[3:], pts[0], ctx)
            assert ctx.ops.since(b) == (4 * k, 2, 2 * k + 4)


def _random_points(ps, rnd, count):
    return [PointXZ(rnd.randrange(1, ps.p), rnd.randrange(1, ps.p)) for _ in range(count)]


@pytest.mark.parametrize("name", ["toy-419", "csidh-512"])
def test_cross_model_doubling_and_addition(name):
    ps = load_parameter_set(name)
    ctx = Fp(ps.p)
    rnd = random.Random(name)
    for _ in range(300):
        E = curve_from_affine(rnd.randrange(3, ps.p - 2), ctx)
        Pm, Qm, Dm = _random_points(ps, rnd, 3)
        psi = lambda pt: mont_to_edwards(pt, ctx)
        assert proj_equal(psi(xdbl(Pm, E, ctx)), ydbl(psi(Pm), E, ctx), ps.p)
        assert proj_equal(psi(xadd(Pm, Qm, Dm, ctx)), ydiffadd(psi(Pm), psi(Qm), psi(Dm), ctx), ps.p)


def test_cross_model_isogeny_eval_toy(toy_curve):
    A, E = toy_curve
    ctx = Fp(P)
    for ell in (3, 5, 7):
        for positive in (True, False):
            R = oracle.find_kernel_point(A, ell, positive, P)
            k = (ell - 1) // 2
            mm = montgomery_kernel_multiples(PointXZ(R[0], 1), E, k, ctx)
            em = kernel_multiples(PointXZ(R[0], 1), E, k, ctx)
            assert all(proj_equal(mont_to_edwards(a, ctx), b, P) for a, b in zip(mm, em))
            for x in range(1, 80):
                Q = PointXZ(x, 1)
                want = velu_eval_montgomery(mm, Q, ctx)
                got = edwards_isog_eval(em, mont_to_edwards(Q, ctx), ctx)
                if want.Z == 0:
                    assert got.Y == got.T
                else:
                    assert proj_equal(mont_to_edwards(want, ctx), got, P)


def test_eval_of_identity_is_identity():
    ctx = Fp(P)
    E = curve_from_affine(0, ctx)
    R = oracle.find_kernel_point(0, 7, True, P)
    em = kernel_multiples(PointXZ(R[0], 1), E, 3, ctx)
    Y, T = edwards_isog_eval(em, IDENTITY, ctx)
    assert Y == T


def test_kernel_maps_to_identity():
    ctx = Fp(P)
    E = curve_from_affine(0, ctx)
    R = oracle.find_kernel_point(0, 7, True, P)
    em = kernel_multiples(PointXZ(R[0], 1), E, 3, ctx)
    for K in em:
        Y, T = edwards_isog_eval(em, K, ctx)
        assert (Y - T) % P == 0


def test_codomain_matches_affine_velu(toy_curve):
    A, E = toy_curve
    ctx = Fp(P)
    for ell in (3, 5, 7):
        for positive in (True, False):
            R = oracle.find_kernel_point(A, ell, positive, P)
            em = kernel_multiples(PointXZ(R[0], 1), E, (ell - 1) // 2, ctx)
            E2 = edwards_isog_codomain(em, E, ell, ctx)
            assert E2.c24 == (E2.a24p - E2.a24m) % P
            assert normalize(E2, ctx) == oracle.isogeny_step(A, ell, positive)


def test_eval_independent_of_generator():
    ctx = Fp(P)
    A = 199
    E = curve_from_affine(A, ctx)
    R = oracle.find_kernel_point(A, 7, False, P)
    outs = []
    for j in (1, 2, 3):
        G = oracle.point_mul(j, R, A, P, -1)
        em = kernel_multiples(PointXZ(G[0], 1), E, 3, ctx)
        outs.append([edwards_isog_eval(em, PointYT(y, 1), ctx) for y in range(2, 40)])
    for a, b in zip(outs[0], outs[1]):
        assert proj_equal(a, b, P)
    for a, b in zip(outs[0], outs[2]):
        assert proj_equal(a, b, P)
