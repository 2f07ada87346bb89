"""Odd-degree quotient isogenies: codomain plus images of a list of points.

The production path works in twisted Edwards y-coordinates and runs in the
selected kernel backend.  The x-only Montgomery path is kept as a reference
for cross-checks.
"""

from __future__ import annotations

from typing import Sequence

from . import _backend
from ._types import CurveCoeffs, PointXZ
from .edwards import edwards_isog_codomain, mont_to_edwards
from .fp import Fp
from .montgomery import xadd, xdbl

__all__ = [
    "IdentityKernelError",
    "quotient_isogeny",
    "velu_eval_montgomery",
    "montgomery_kernel_multiples",
]


class IdentityKernelError(ValueError):
    """The kernel generator is the point at infinity; the caller retries."""


def montgomery_kernel_multiples(R: PointXZ, E: CurveCoeffs, k: int, ctx: Fp) -> list[PointXZ]:
    out = [R]
    if k >= 2:
        out.append(xdbl(R, E, ctx))
    for _ in range(2, k):
        out.append(xadd(out[-1], R, out[-2], ctx))
    return out


def velu_eval_montgomery(kernel_mults: Sequence[PointXZ], Q: PointXZ, ctx: Fp) -> PointXZ:
    """x-only image of Q; 4kM + 2S + 6kA."""
    plus = minus = 0
    for i, K in enumerate(kernel_mults):
        t0 = ctx.mul(ctx.sub(Q.X, Q.Z), ctx.add(K.X, K.Z))
        t1 = ctx.mul(ctx.add(Q.X, Q.Z), ctx.sub(K.X, K.Z))
        s = ctx.add(t0, t1)
        d = ctx.sub(t0, t1)
        if i == 0:
            plus, minus = s, d
        else:
            plus = ctx.mul(plus, s)
            minus = ctx.mul(minus, d)
    return PointXZ(ctx.mul(Q.X, ctx.sqr(plus)), ctx.mul(Q.Z, ctx.sqr(minus)))


def quotient_isogeny(E: CurveCoeffs, R: PointXZ, ell: int, push: Sequence[PointXZ], ctx: Fp,
                     model: str = "edwards") -> tuple[CurveCoeffs, list[PointXZ]]:
    """Return E/<R> and the images of ``push``.

    R must have exact order ``ell`` (an odd prime); only R = infinity is
    detected, and raises :class:`IdentityKernelError`.
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError("ell must be an odd prime")
    if R.Z % ctx.p == 0:
        raise IdentityKernelError("kernel generator is the point at infinity")
    if model == "edwards":
        return _backend.kernel().isogeny(ctx, E, R, ell, list(push))
    if model != "montgomery":
        raise ValueError(f"unknown model {model!r}")
    k = (ell - 1) // 2
    mults = montgomery_kernel_multiples(R, E, k, ctx)
    codomain = edwards_isog_codomain([mont_to_edwards(K, ctx) for K in mults], E, ell, ctx)
    return codomain, [velu_eval_montgomery(mults, Q, ctx) for Q in push]
