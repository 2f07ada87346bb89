"""Twisted Edwards arithmetic on the projective y-line (Y:T).

The map psi: (X:Z) -> (X - Z : X + Z) sends x(P) on the Montgomery curve
with constants (A24p, A24m, C24) to y(P) on the twisted Edwards curve with
a = A24p and d = A24m.  Doubling, differential addition and odd-degree
isogenies all work on this line.
"""

from __future__ import annotations

from typing import Sequence

from ._types import IDENTITY, CurveCoeffs, PointXZ, PointYT
from .fp import Fp

__all__ = [
    "PointYT",
    "IDENTITY",
    "mont_to_edwards",
    "edwards_to_mont",
    "ydbl",
    "ydiffadd",
    "kernel_multiples",
    "edwards_isog_eval",
    "edwards_isog_codomain",
]


def mont_to_edwards(P: PointXZ, ctx: Fp) -> PointYT:
    """(X:Z) -> (X - Z : X + Z); 2A."""
    return PointYT(ctx.sub(P.X, P.Z), ctx.add(P.X, P.Z))


def edwards_to_mont(P: PointYT, ctx: Fp) -> PointXZ:
    """(Y:T) -> (T + Y : T - Y); 2A."""
    return PointXZ(ctx.add(P.T, P.Y), ctx.sub(P.T, P.Y))


def ydbl(P: PointYT, E: CurveCoeffs, ctx: Fp) -> PointYT:
    """y([2]P); 4M + 2S + 4A."""
    t0 = ctx.sqr(P.Y)
    t1 = ctx.sqr(P.T)
    t2 = ctx.mul(E.c24, t0)
    t3 = ctx.mul(t2, t1)
    t1 = ctx.sub(t1, t0)
    t0 = ctx.mul(E.a24p, t1)
    t0 = ctx.add(t0, t2)
    t0 = ctx.mul(t0, t1)
    return PointYT(ctx.sub(t3, t0), ctx.add(t3, t0))


def ydiffadd(P: PointYT, Q: PointYT, PmQ: PointYT, ctx: Fp) -> PointYT:
    """y(P+Q) from y(P), y(Q), y(P-Q); requires P != Q.  4M + 2S + 6A."""
    t0 = ctx.mul(P.Y, Q.T)
    t1 = ctx.mul(Q.Y, P.T)
    t2 = ctx.sqr(ctx.add(t0, t1))
    t3 = ctx.sqr(ctx.sub(t0, t1))
    t0 = ctx.mul(ctx.sub(PmQ.T, PmQ.Y), t2)
    t1 = ctx.mul(ctx.add(PmQ.T, PmQ.Y), t3)
    return PointYT(ctx.sub(t0, t1), ctx.add(t0, t1))


def kernel_multiples(R: PointXZ, E: CurveCoeffs, k: int, ctx: Fp) -> list[PointYT]:
    """y([i]R) for i = 1..k: one map, one ydbl and k - 2 ydiffadds."""
    first = mont_to_edwards(R, ctx)
    out = [first]
    if k >= 2:
        out.append(ydbl(first, E, ctx))
    for _ in range(2, k):
        out.append(ydiffadd(out[-1], first, out[-2], ctx))
    return out


def edwards_isog_eval(kernel_mults: Sequence[PointYT], Q: PointYT, ctx: Fp) -> PointYT:
    """Image of Q under the isogeny with kernel <[1]R>; 4kM + 2S + (2k+4)A."""
    tpy = ctx.add(Q.T, Q.Y)
    tmy = ctx.sub(Q.T, Q.Y)
    plus = minus = 0
    for i, K in enumerate(kernel_mults):
        t1 = ctx.mul(Q.T, K.Y)
        t2 = ctx.mul(Q.Y, K.T)
        s = ctx.add(t1, t2)
        d = ctx.sub(t1, t2)
        if i == 0:
            plus, minus = s, d
        else:
            plus = ctx.mul(plus, s)
            minus = ctx.mul(minus, d)
    u = ctx.mul(tpy, ctx.sqr(plus))
    v = ctx.mul(tmy, ctx.sqr(minus))
    return PointYT(ctx.sub(u, v), ctx.add(u, v))


def edwards_isog_codomain(kernel_mults: Sequence[PointYT], E: CurveCoeffs, ell: int,
                          ctx: Fp) -> CurveCoeffs:
    """Codomain constants: a' = a^ell (prod T_i)^8, d' = d^ell (prod Y_i)^8."""
    py = kernel_mults[0].Y
    pt = kernel_mults[0].T
    for K in kernel_mults[1:]:
        py = ctx.mul(py, K.Y)
        pt = ctx.mul(pt, K.T)
    a = ctx.pow(E.a24p, ell)
    d = ctx.pow(E.a24m, ell)
    for _ in range(3):
        pt = ctx.sqr(pt)
        py = ctx.sqr(py)
    a = ctx.mul(a, pt)
    d = ctx.mul(d, py)
    return CurveCoeffs(a, d, ctx.sub(a, d))
