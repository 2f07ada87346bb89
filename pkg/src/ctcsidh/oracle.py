"""Brute-force affine reference arithmetic for small primes.

Everything here is variable-time and written against the affine curve
equation ``B y^2 = x^3 + A x^2 + x`` (B = 1 for the curve, B = -1 for its
quadratic twist), independently of the projective formulas it is used to
check.  Intended for p = 419 but valid for any prime p = 3 mod 4.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .params import load_parameter_set

__all__ = [
    "AffinePoint",
    "rhs",
    "is_square",
    "sqrt_mod",
    "enumerate_curve_points",
    "point_add",
    "point_mul",
    "point_order",
    "velu_codomain",
    "velu_x_map",
    "velu_image",
    "kernel_xs",
    "find_kernel_point",
    "isogeny_step",
    "brute_force_action",
]

AffinePoint = Optional[tuple[int, int]]  # None is the point at infinity

TOY_P = 419


def rhs(x: int, A: int, p: int) -> int:
    return (x * x * x + A * x * x + x) % p


def is_square(a: int, p: int) -> bool:
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def sqrt_mod(a: int, p: int) -> int:
    if p % 4 != 3:
        raise ValueError("only p = 3 mod 4 is supported")
    r = pow(a % p, (p + 1) // 4, p)
    if r * r % p != a % p:
        raise ValueError(f"{a} is not a square mod {p}")
    return r


def _check_nonsingular(A: int, p: int) -> None:
    if (A * A - 4) % p == 0:
        raise ValueError("A^2 = 4: singular curve")


def enumerate_curve_points(A: int, p: int = TOY_P, twist: bool = False) -> list[AffinePoint]:
    """All points of B y^2 = x^3 + A x^2 + x over F_p, infinity (None) first."""
    _check_nonsingular(A, p)
    B = -1 if twist else 1
    pts: list[AffinePoint] = [None]
    for x in range(p):
        f = B * rhs(x, A, p) % p
        if f == 0:
            pts.append((x, 0))
        elif is_square(f, p):
            y = sqrt_mod(f, p)
            pts.extend([(x, y), (x, p - y)])
    return pts


def point_add(P: AffinePoint, Q: AffinePoint, A: int, p: int, B: int = 1) -> AffinePoint:
    """Chord-and-tangent addition on B y^2 = x^3 + A x^2 + x."""
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        lam = (3 * x1 * x1 + 2 * A * x1 + 1) * pow(2 * B * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (B * lam * lam - A - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return (x3, y3)


def point_mul(k: int, P: AffinePoint, A: int, p: int, B: int = 1) -> AffinePoint:
    R: AffinePoint = None
    if k < 0:
        k = -k
        P = None if P is None else (P[0], -P[1] % p)
    while k:
        if k & 1:
            R = point_add(R, P, A, p, B)
        P = point_add(P, P, A, p, B)
        k >>= 1
    return R


def point_order(P: AffinePoint, A: int, p: int, B: int = 1) -> int:
    n, R = 1, P
    while R is not None:
        R = point_add(R, P, A, p, B)
        n += 1
    return n


def _velu_terms(A: int, xs: Sequence[int], p: int) -> list[tuple[int, int, int]]:
    # For y^2 = x^3 + a2 x^2 + a4 x with a2 = A, a4 = 1 and one x per +-pair:
    # t_Q = 2(3x^2 + 2 a2 x + a4), u_Q = 4 y_Q^2.
    return [(x, 2 * (3 * x * x + 2 * A * x + 1) % p, 4 * rhs(x, A, p) % p) for x in xs]


def velu_x_map(A: int, xs: Sequence[int], x: int, p: int) -> int:
    """x(phi(P)) for the isogeny whose kernel has nonzero x-coordinates ``xs``."""
    out = x
    for xq, tq, uq in _velu_terms(A, xs, p):
        inv = pow(x - xq, -1, p)
        out += tq * inv + uq * inv * inv
    return out % p


def _velu_montgomery(A: int, xs: Sequence[int], p: int) -> tuple[int, int, int]:
    terms = _velu_terms(A, xs, p)
    t = sum(tq for _, tq, _ in terms)
    w = sum(uq + xq * tq for xq, tq, uq in terms)
    a4 = (1 - 5 * t) % p
    a6 = (-4 * A * t - 7 * w) % p
    r = velu_x_map(A, xs, 0, p)
    if (r * r * r + A * r * r + a4 * r + a6) % p:
        raise AssertionError("image of (0,0) is not a 2-torsion point")
    b = (3 * r + A) % p
    c = (3 * r * r + 2 * A * r + a4) % p
    lam = sqrt_mod(c, p)
    if not is_square(lam, p):
        lam = p - lam
    return b * pow(lam, -1, p) % p, r, lam


def velu_codomain(A: int, xs: Sequence[int], p: int) -> int:
    """Montgomery coefficient of E/K where K \\ {0} has x-coordinates ``xs`` (one per +-pair).

    The codomain comes out in the form y^2 = x^3 + A x^2 + a4 x + a6; translating
    the image of (0, 0) to the origin and rescaling by a square root of the
    linear coefficient that is itself a square gives the Montgomery form.
    """
    return _velu_montgomery(A, xs, p)[0]


def velu_image(A: int, xs: Sequence[int], x: int, p: int) -> int:
    """x(phi(P)) on the Montgomery model returned by :func:`velu_codomain`."""
    _, r, lam = _velu_montgomery(A, xs, p)
    return (velu_x_map(A, xs, x, p) - r) * pow(lam, -1, p) % p


def kernel_xs(A: int, R: AffinePoint, ell: int, p: int, B: int = 1) -> list[int]:
    xs = []
    Q = R
    for _ in range((ell - 1) // 2):
        xs.append(Q[0])
        Q = point_add(Q, R, A, p, B)
    return xs


def find_kernel_point(A: int, ell: int, positive: bool, p: int) -> AffinePoint:
    """The first (by x) point of exact order ell in E[pi - 1] (positive) or E[pi + 1]."""
    B = 1 if positive else -1
    cof = (p + 1) // ell
    for x in range(1, p):
        f = B * rhs(x, A, p) % p
        if f == 0 or not is_square(f, p):
            continue
        R = point_mul(cof, (x, sqrt_mod(f, p)), A, p, B)
        if R is not None:
            return R
    raise ValueError(f"no point of order {ell}")


def isogeny_step(A: int, ell: int, positive: bool, p: int = TOY_P) -> int:
    """Apply l or l^-1 (l = (ell, pi - 1)) to the curve with coefficient A."""
    _check_nonsingular(A, p)
    B = 1 if positive else -1
    R = find_kernel_point(A, ell, positive, p)
    return velu_codomain(A, kernel_xs(A, R, ell, p, B), p)


def brute_force_action(A: int, key: Sequence[int], params: str = "toy-419") -> int:
    """The class-group action of prod l_i^e_i on A, one prime step at a time."""
    ps = load_parameter_set(params)
    if len(key) != ps.n:
        raise ValueError(f"key has {len(key)} entries, expected {ps.n}")
    A %= ps.p
    for ell, e in zip(ps.primes, key):
        for _ in range(abs(e)):
            A = isogeny_step(A, ell, e > 0, ps.p)
    return A
