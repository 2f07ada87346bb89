"""Pure-Python kernel backend, built from the reference formulas."""

from __future__ import annotations

from . import edwards, fp, montgomery
from ._types import INFINITY

NAME = "python"


def xmul(ctx, P, E, chains):
    for chain in chains:
        vals = [P]
        for st in chain.steps:
            if st.op == "dbl":
                vals.append(montgomery.xdbl(vals[st.a], E, ctx))
            else:
                vals.append(montgomery.xadd(vals[st.a], vals[st.b], vals[st.diff], ctx))
        P = vals[-1]
    return P


def ladder(ctx, k, P, E, nbits):
    R0, R1 = INFINITY, P
    for i in reversed(range(nbits)):
        b = (k >> i) & 1
        R0, R1 = fp.ct_cswap(R0, R1, b)
        R1 = montgomery.xadd(R0, R1, P, ctx)
        R0 = montgomery.xdbl(R0, E, ctx)
        R0, R1 = fp.ct_cswap(R0, R1, b)
    return R0


def isogeny(ctx, E, R, ell, points):
    k = (ell - 1) // 2
    mults = edwards.kernel_multiples(R, E, k, ctx)
    codomain = edwards.edwards_isog_codomain(mults, E, ell, ctx)
    images = []
    for Q in points:
        img = edwards.edwards_isog_eval(mults, edwards.mont_to_edwards(Q, ctx), ctx)
        images.append(edwards.edwards_to_mont(img, ctx))
    return codomain, images


def power(ctx, a, e):
    return fp.pow_fixed_schedule(ctx, a, e)
