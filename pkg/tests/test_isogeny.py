import random

import pytest

from ctcsidh import oracle
from ctcsidh.fp import Fp
from ctcsidh.isogeny import (IdentityKernelError, montgomery_kernel_multiples, quotient_isogeny,
                             velu_eval_montgomery)
from ctcsidh.montgomery import (PointXZ, curve_from_affine, elligator, ladder, normalize,
                                xdbl, xmul)

P = 419


@pytest.mark.parametrize("model", ["edwards", "montgomery"])
def test_codomain_and_images_match_affine_velu(toy_curve, model, backend):
    A, E = toy_curve
    ctx = Fp(P)
    for ell in (3, 5, 7):
        for positive in (True, False):
            R = oracle.find_kernel_point(A, ell, positive, P)
            xs = oracle.kernel_xs(A, R, ell, P, 1 if positive else -1)
            push = [PointXZ(x, 1) for x in range(1, 100) if x not in xs]
            E2, images = quotient_isogeny(E, PointXZ(R[0], 1), ell, push, ctx, model=model)
            assert normalize(E2, ctx) == oracle.isogeny_step(A, ell, positive)
            for Q, img in zip(push, images):
                assert img.Z != 0
                assert img.X * pow(img.Z, -1, P) % P == oracle.velu_image(A, xs, Q.X, P)


def test_pushing_the_kernel_point_gives_infinity(backend):
    ctx = Fp(P)
    E = curve_from_affine(0, ctx)
    for ell in (3, 5, 7):
        R = PointXZ(oracle.find_kernel_point(0, ell, True, P)[0], 1)
        _, (img,) = quotient_isogeny(E, R, ell, [R], ctx)
        assert img.Z == 0


def test_image_order_is_preserved(toy_curve):
    # A point of order m coprime to ell keeps order m on the codomain.
    A, E = toy_curve
    ctx = Fp(P)
    R = PointXZ(oracle.find_kernel_point(A, 3, True, P)[0], 1)
    for pt in oracle.enumerate_curve_points(A)[1:40]:
        m = oracle.point_order(pt, A, P)
        if m % 3 == 0:
            continue
        E2, (img,) = quotient_isogeny(E, R, 3, [PointXZ(pt[0], 1)], ctx)
        assert ladder(m, img, E2, ctx).Z == 0
        for q in (2, 5, 7):
            if m % q == 0 and m > q:
                assert ladder(m // q, img, E2, ctx).Z != 0


def test_identity_kernel_is_signalled():
    ctx = Fp(P)
    E = curve_from_affine(0, ctx)
    with pytest.raises(IdentityKernelError):
        quotient_isogeny(E, PointXZ(5, 0), 3, [], ctx)
    with pytest.raises(ValueError):
        quotient_isogeny(E, PointXZ(5, 1), 4, [], ctx)
    with pytest.raises(ValueError):
        quotient_isogeny(E, PointXZ(5, 1), 3, [], ctx, model="weierstrass")


def test_montgomery_eval_cost():
    ctx = Fp(P)
    rnd = random.Random(5)
    for k in (1, 2, 5, 293):
        mults = [PointXZ(rnd.randrange(P), rnd.randrange(P)) for _ in range(k)]
        b = ctx.ops.totals()
        velu_eval_montgomery(mults, PointXZ(3, 4), ctx)
        assert ctx.ops.since(b) == (4 * k, 2, 6 * k)


def test_cost_depends_only_on_degree(csidh512, backend):
    ps = csidh512
    rnd = random.Random(9)
    costs = {}
    for ell in (3, 587):
        seen = set()
        for _ in range(4):
            ctx = Fp(ps.p)
            E = curve_from_affine(rnd.randrange(ps.p), ctx)
            b = ctx.ops.totals()
            quotient_isogeny(E, PointXZ(rnd.randrange(ps.p), 1), ell,
                             [PointXZ(rnd.randrange(ps.p), 1)], ctx)
            seen.add(ctx.ops.since(b))
        assert len(seen) == 1
        costs[ell] = seen.pop()
    assert costs[3] != costs[587]


def _order_ell_point(ps, E, ell, positive, ctx, rnd):
    idx = ps.primes.index(ell)
    others = [i for i in range(ps.n) if i != idx]
    while True:
        tp, tm = elligator(E, rnd.randrange(2, (ps.p - 1) // 2), ctx)
        T = tp if positive else tm
        T = xmul(xdbl(xdbl(T, E, ctx), E, ctx), E, ps.chains_for(others), ctx)
        if T.Z != 0:
            return T


@pytest.mark.parametrize("ell", [3, 101, 587])
def test_round_trip_csidh512(csidh512, ell):
    # l then l^-1 returns to the starting curve
    ps = csidh512
    ctx = Fp(ps.p)
    rnd = random.Random(ell)
    E = curve_from_affine(0, ctx)
    R = _order_ell_point(ps, E, ell, True, ctx, rnd)
    assert ladder(ell, R, E, ctx).Z == 0
    E1, _ = quotient_isogeny(E, R, ell, [], ctx)
    assert normalize(E1, ctx) != 0
    R1 = _order_ell_point(ps, E1, ell, False, ctx, rnd)
    E2, _ = quotient_isogeny(E1, R1, ell, [], ctx)
    assert normalize(E2, ctx) == 0


def test_kernel_multiples_montgomery():
    ctx = Fp(P)
    E = curve_from_affine(0, ctx)
    R = oracle.find_kernel_point(0, 7, True, P)
    mults = montgomery_kernel_multiples(PointXZ(R[0], 1), E, 3, ctx)
    for i, K in enumerate(mults, start=1):
        assert K.X * pow(K.Z, -1, P) % P == oracle.point_mul(i, R, 0, P)[0]
