"""x-only Montgomery arithmetic and the constant-time projective Elligator.

Curves are ``C'y^2 = C'x^3 + A'x^2 + C'x`` carried as :class:`CurveCoeffs`
(A24p, A24m, C24).  Points are x-line classes (X:Z).
"""

from __future__ import annotations

from typing import Sequence

from . import _backend
from ._types import INFINITY, CurveCoeffs, PointXZ
from .fp import Fp, ct_cswap, ct_isequal, ct_select
from .params import AdditionChain

__all__ = [
    "PointXZ",
    "CurveCoeffs",
    "INFINITY",
    "curve_from_montgomery",
    "curve_from_affine",
    "montgomery_coeffs",
    "normalize",
    "proj_equal",
    "xdbl",
    "xadd",
    "ladder",
    "mul_by_chain",
    "xmul",
    "elligator",
    "elligator_checked",
]


def curve_from_montgomery(A: int, C: int, ctx: Fp) -> CurveCoeffs:
    """(A':C') -> (A'+2C', A'-2C', 4C')."""
    c2 = ctx.add(C, C)
    return CurveCoeffs(ctx.add(A, c2), ctx.sub(A, c2), ctx.add(c2, c2))


def curve_from_affine(A: int, ctx: Fp) -> CurveCoeffs:
    return curve_from_montgomery(A % ctx.p, 1, ctx)


def montgomery_coeffs(E: CurveCoeffs, ctx: Fp) -> tuple[int, int]:
    """A projective (A':C') for E, namely (2(A24p + A24m) : C24)."""
    s = ctx.add(E.a24p, E.a24m)
    return ctx.add(s, s), E.c24


def normalize(E: CurveCoeffs, ctx: Fp) -> int:
    """The affine Montgomery coefficient A = A'/C' (one inversion)."""
    A, C = montgomery_coeffs(E, ctx)
    return ctx.mul(A, ctx.inv(C))


def proj_equal(P: tuple[int, int], Q: tuple[int, int], p: int) -> bool:
    """Equality of projective classes; (0:0) is never equal to anything."""
    if P[0] % p == 0 and P[1] % p == 0 or Q[0] % p == 0 and Q[1] % p == 0:
        return False
    return (P[0] * Q[1] - P[1] * Q[0]) % p == 0


def xdbl(P: PointXZ, E: CurveCoeffs, ctx: Fp) -> PointXZ:
    """x([2]P); 4M + 2S + 4A."""
    t0 = ctx.add(P.X, P.Z)
    t1 = ctx.sub(P.X, P.Z)
    t0 = ctx.sqr(t0)
    t1 = ctx.sqr(t1)
    t2 = ctx.mul(E.c24, t1)
    X = ctx.mul(t2, t0)
    t0 = ctx.sub(t0, t1)
    t1 = ctx.mul(E.a24p, t0)
    t1 = ctx.add(t1, t2)
    Z = ctx.mul(t1, t0)
    return PointXZ(X, Z)


def xadd(P: PointXZ, Q: PointXZ, PmQ: PointXZ, ctx: Fp) -> PointXZ:
    """x(P+Q) from x(P), x(Q), x(P-Q); requires P != Q.  4M + 2S + 6A."""
    t0 = ctx.sub(P.X, P.Z)
    t1 = ctx.add(Q.X, Q.Z)
    t0 = ctx.mul(t0, t1)
    t2 = ctx.add(P.X, P.Z)
    t3 = ctx.sub(Q.X, Q.Z)
    t2 = ctx.mul(t2, t3)
    t1 = ctx.add(t0, t2)
    t3 = ctx.sub(t0, t2)
    t1 = ctx.sqr(t1)
    t3 = ctx.sqr(t3)
    return PointXZ(ctx.mul(PmQ.Z, t1), ctx.mul(PmQ.X, t3))


def ladder(k: int, P: PointXZ, E: CurveCoeffs, ctx: Fp, nbits: int | None = None) -> PointXZ:
    """x([k]P) with one xadd and one xdbl for each of ``nbits`` bits."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if nbits is None:
        nbits = k.bit_length()
    if k >> nbits:
        raise ValueError("k does not fit in nbits")
    return _backend.kernel().ladder(ctx, k, P, E, nbits)


def mul_by_chain(chain: AdditionChain, P: PointXZ, E: CurveCoeffs, ctx: Fp) -> PointXZ:
    return _backend.kernel().xmul(ctx, P, E, (chain,))


def xmul(P: PointXZ, E: CurveCoeffs, chains: Sequence[AdditionChain], ctx: Fp) -> PointXZ:
    """Multiply by the product of the chains' targets, applying them in order."""
    if not chains:
        return P
    return _backend.kernel().xmul(ctx, P, E, tuple(chains))


def elligator_checked(E: CurveCoeffs, u: int, ctx: Fp) -> tuple[PointXZ, PointXZ, int]:
    """Elligator plus a flag that is 0 in the degenerate case t' = 0.

    Every input runs the same operation sequence; the caller resamples u
    when the flag is 0 (probability about 2/p).
    """
    A, C = montgomery_coeffs(E, ctx)
    u2 = ctx.sqr(u)
    u2m1 = ctx.sub(u2, 1)
    A2 = ctx.sqr(A)
    t = ctx.mul(u2m1, u2)
    t = ctx.mul(t, A2)
    t = ctx.mul(t, C)
    w = ctx.mul(u2m1, C)  # C'(u^2 - 1)
    w3 = ctx.mul(ctx.sqr(w), w)
    t = ctx.add(t, w3)
    t = ctx.mul(A, t)
    a = ct_isequal(t, 0)
    alpha, _ = ct_cswap(0, u, a)
    tp = ctx.add(t, ctx.mul(alpha, ctx.add(u2, 1)))
    aw = ctx.mul(alpha, w)
    t_plus = PointXZ(ctx.add(A, aw), w)
    t_minus = PointXZ(ctx.neg(ctx.add(ctx.mul(A, u2), aw)), w)
    b = ctx.legendre(tp)
    c = ct_isequal(b, -1)
    t_plus, t_minus = ct_cswap(t_plus, t_minus, c)
    ok = 1 - ct_isequal(tp, 0)
    return t_plus, t_minus, ok


def elligator(E: CurveCoeffs, u: int, ctx: Fp) -> tuple[PointXZ, PointXZ]:
    """(T+, T-) with T+ in E[pi - 1] and T- in E[pi + 1], for u in {2..(p-1)/2}."""
    t_plus, t_minus, _ = elligator_checked(E, u, ctx)
    return t_plus, t_minus


def select_point(P: PointXZ, Q: PointXZ, b: int) -> PointXZ:
    return ct_select(P, Q, b)
