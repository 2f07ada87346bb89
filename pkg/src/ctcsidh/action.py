"""Class-group action evaluators, SIMBA batching and secret keys.

Four evaluators share the same curve arithmetic:

* :func:`action_unprotected` - the original variable-time algorithm;
* :func:`action_mcr` - nonnegative exponents, one torsion point per round,
  dummy isogenies, SIMBA-5-11;
* :func:`action_oayt` - exponents in [-m, m], two torsion points from the
  projective Elligator, dummy isogenies, SIMBA-3-8;
* :func:`action_dummy_free` - exponents in Set(m), every isogeny is real,
  SIMBA-5-11.

In the protected evaluators the secret exponents only reach the data flow
through :func:`ct_isequal` and :func:`ct_cswap`.  Whether a kernel point
turned out to be infinity is public (it depends on the random Elligator
input only), so that test is an ordinary branch.
"""

from __future__ import annotations

import enum
import math
import random
import secrets
from dataclasses import dataclass
from typing import Callable, Sequence

from ._types import CurveCoeffs, PointXZ
from .fp import Fp, ct_cswap, ct_isequal, ct_select
from .isogeny import quotient_isogeny
from .montgomery import curve_from_affine, elligator_checked, ladder, montgomery_coeffs, xdbl, xmul
from .params import PARAMETER_SETS, ParameterSet

__all__ = [
    "KeyMode",
    "SecretKey",
    "RandomTape",
    "sample_key",
    "simba_partition",
    "action_unprotected",
    "action_mcr",
    "action_oayt",
    "action_dummy_free",
    "ACTIONS",
    "KEY_MODE_FOR",
    "run_action",
    "validate_public_key",
    "params_for_prime",
    "oayt_step",
    "mcr_step",
    "dummy_free_step",
]


class KeyMode(str, enum.Enum):
    INTERVAL = "interval"  # e in [-m, m]
    PARITY = "parity-set"  # |e| <= m, e = m mod 2
    NONNEGATIVE = "nonnegative"  # e in [0, 2m]


@dataclass(frozen=True)
class SecretKey:
    exponents: tuple[int, ...]
    mode: KeyMode = KeyMode.INTERVAL

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        object.__setattr__(self, "mode", KeyMode(self.mode))

    def __len__(self) -> int:
        return len(self.exponents)

    def check(self, bounds: Sequence[int]) -> None:
        """Raise ValueError unless every exponent is legal for the mode."""
        if len(bounds) != len(self.exponents):
            raise ValueError(f"key has {len(self.exponents)} exponents, expected {len(bounds)}")
        for i, (e, m) in enumerate(zip(self.exponents, bounds)):
            if self.mode is KeyMode.INTERVAL:
                ok = -m <= e <= m
            elif self.mode is KeyMode.PARITY:
                ok = abs(e) <= m and (e - m) % 2 == 0
            else:
                ok = 0 <= e <= 2 * m
            if not ok:
                raise ValueError(f"exponent {i} = {e} out of range for {self.mode.value} mode, m = {m}")


class RandomTape:
    """Randomness for the evaluators.

    A seed gives a reproducible stream (tests, benchmarks); without one the
    operating system's generator is used.
    """

    def __init__(self, seed: int | None = None):
        self.seed = seed
        self._rng = random.Random(seed) if seed is not None else secrets.SystemRandom()

    def randint(self, a: int, b: int) -> int:
        return self._rng.randint(a, b)

    def field_element(self, p: int) -> int:
        """u uniform in {2, ..., (p-1)/2}."""
        return self._rng.randint(2, (p - 1) // 2)


def sample_key(params: ParameterSet, mode: KeyMode | str, rng: RandomTape,
               bounds: Sequence[int] | None = None) -> SecretKey:
    mode = KeyMode(mode)
    if bounds is None:
        bounds = params.parity_bounds if mode is KeyMode.PARITY else params.bounds
    if mode is KeyMode.INTERVAL:
        exps = [rng.randint(-m, m) for m in bounds]
    elif mode is KeyMode.PARITY:
        exps = [m - 2 * rng.randint(0, m) for m in bounds]
    else:
        exps = [rng.randint(0, 2 * m) for m in bounds]
    return SecretKey(tuple(exps), mode)


def simba_partition(items: Sequence, m: int) -> list[list]:
    """Split ``items`` round-robin into m batches (item j goes to batch j mod m)."""
    if m < 1:
        raise ValueError("need at least one batch")
    return [list(items[j::m]) for j in range(m)]


def params_for_prime(p: int) -> ParameterSet:
    for ps in PARAMETER_SETS.values():
        if ps.p == p:
            return ps
    raise ValueError("no parameter set for this prime")


# -- shared pieces -----------------------------------------------------------


def _mul_indices(P: PointXZ, E: CurveCoeffs, indices: Sequence[int], params: ParameterSet,
                 ctx: Fp) -> PointXZ:
    return xmul(P, E, params.chains_for(indices), ctx)


def _clear_cofactor(P: PointXZ, E: CurveCoeffs, active: Sequence[int], params: ParameterSet,
                    ctx: Fp) -> PointXZ:
    """[(p+1)/k]P with k the product of the active primes: [4], then the others."""
    P = xdbl(xdbl(P, E, ctx), E, ctx)
    keep = set(active)
    return _mul_indices(P, E, [i for i in range(params.n) if i not in keep], params, ctx)


def _elligator_points(E: CurveCoeffs, rng: RandomTape, ctx: Fp) -> tuple[PointXZ, PointXZ]:
    while True:
        t_plus, t_minus, ok = elligator_checked(E, rng.field_element(ctx.p), ctx)
        if ok:
            return t_plus, t_minus


def _batch_schedule(params: ParameterSet, remaining: list[int], batches: int, rounds: int,
                    body: Callable[[list[int]], None]) -> None:
    """SIMBA: ``rounds`` passes over each batch, then all leftovers together.

    ``body`` receives the active indices of one round in decreasing prime order.
    """

    def active(indices):
        return sorted((i for i in indices if remaining[i] > 0), key=lambda i: -params.primes[i])

    for _ in range(rounds):
        for batch in simba_partition(list(range(params.n)), batches):
            act = active(batch)
            if act:
                body(act)
    while True:
        act = active(range(params.n))
        if not act:
            return
        body(act)


def _resolve(params, ctx, key, mode, bounds, simba, alg):
    if params is None:
        params = params_for_prime(ctx.p)
    if key.mode is not mode:
        raise ValueError(f"{alg} expects a {mode.value} key, got {key.mode.value}")
    if bounds is None:
        bounds = params.parity_bounds if mode is KeyMode.PARITY else params.bounds
    key.check(bounds)
    batches, rounds = simba if simba is not None else params.simba[alg]
    return params, list(bounds), batches, rounds


# -- OAYT-style ---------------------------------------------------------------


def oayt_step(E: CurveCoeffs, P0: PointXZ, P1: PointXZ, i: int, e: int, rest: Sequence[int],
              params: ParameterSet, ctx: Fp):
    """One prime of an OAYT round.

    P0 lies in E[pi - 1] (used for e > 0) and P1 in E[pi + 1].  Returns
    (E, P0, P1, e, done); ``done`` is False when the kernel candidate was
    infinity, in which case nothing secret-dependent was computed.
    """
    ell = params.primes[i]
    neg = (e >> 64) & 1  # sign bit of a small integer
    s = 1 - 2 * neg
    Pk, Pm = ct_cswap(P0, P1, neg)
    Q = _mul_indices(Pk, E, rest, params, ctx)
    Pm = _mul_indices(Pm, E, [i], params, ctx)
    if Q.Z == 0:
        P0, P1 = ct_cswap(Pk, Pm, neg)
        return E, P0, P1, e, False
    Pk_l = _mul_indices(Pk, E, [i], params, ctx)
    E2, (Pk2, Pm2) = quotient_isogeny(E, Q, ell, [Pk_l, Pm], ctx)
    real = 1 - ct_isequal(e, 0)
    E = ct_select(E, E2, real)
    Pk = ct_select(Pk_l, Pk2, real)
    Pm = ct_select(Pm, Pm2, real)
    e -= s * real
    P0, P1 = ct_cswap(Pk, Pm, neg)
    ctx.ops.isog_count[i] += 1
    return E, P0, P1, e, True


def action_oayt(E: CurveCoeffs, key: SecretKey, rng: RandomTape, ctx: Fp,
                params: ParameterSet | None = None, bounds: Sequence[int] | None = None,
                simba: tuple[int, int] | None = None) -> CurveCoeffs:
    """Exactly m_i isogenies per prime, real or dummy, for keys in [-m_i, m_i]."""
    params, remaining, batches, rounds = _resolve(params, ctx, key, KeyMode.INTERVAL, bounds,
                                                  simba, "oayt")
    exps = list(key.exponents)
    state = [E]

    def body(active):
        E = state[0]
        P0, P1 = _elligator_points(E, rng, ctx)
        P0 = _clear_cofactor(P0, E, active, params, ctx)
        P1 = _clear_cofactor(P1, E, active, params, ctx)
        for j, i in enumerate(active):
            E, P0, P1, exps[i], done = oayt_step(E, P0, P1, i, exps[i], active[j + 1:], params,
                                                  ctx)
            remaining[i] -= done
        state[0] = E

    _batch_schedule(params, remaining, batches, rounds, body)
    return state[0]


# -- MCR-style ----------------------------------------------------------------


def mcr_step(E: CurveCoeffs, P: PointXZ, i: int, e: int, rest: Sequence[int],
             params: ParameterSet, ctx: Fp):
    """One prime of an MCR round on a point P in E[pi - 1]; returns (E, P, e, done)."""
    ell = params.primes[i]
    Q = _mul_indices(P, E, rest, params, ctx)
    if Q.Z == 0:
        return E, P, e, False
    P_l = _mul_indices(P, E, [i], params, ctx)
    E2, (P2,) = quotient_isogeny(E, Q, ell, [P_l], ctx)
    real = 1 - ct_isequal(e, 0)
    E = ct_select(E, E2, real)
    P = ct_select(P_l, P2, real)
    e -= real
    ctx.ops.isog_count[i] += 1
    return E, P, e, True


def action_mcr(E: CurveCoeffs, key: SecretKey, rng: RandomTape, ctx: Fp,
               params: ParameterSet | None = None, bounds: Sequence[int] | None = None,
               simba: tuple[int, int] | None = None) -> CurveCoeffs:
    """Exactly 2 m_i isogenies per prime for nonnegative keys in [0, 2 m_i]."""
    params, bounds, batches, rounds = _resolve(params, ctx, key, KeyMode.NONNEGATIVE, bounds,
                                               simba, "mcr")
    remaining = [2 * m for m in bounds]
    exps = list(key.exponents)
    state = [E]

    def body(active):
        E = state[0]
        P, _ = _elligator_points(E, rng, ctx)
        P = _clear_cofactor(P, E, active, params, ctx)
        for j, i in enumerate(active):
            E, P, exps[i], done = mcr_step(E, P, i, exps[i], active[j + 1:], params, ctx)
            remaining[i] -= done
        state[0] = E

    _batch_schedule(params, remaining, batches, rounds, body)
    return state[0]


# -- dummy-free ---------------------------------------------------------------


def dummy_free_step(E: CurveCoeffs, T0: PointXZ, T1: PointXZ, i: int, e: int, t: int,
                    rest: Sequence[int], params: ParameterSet, ctx: Fp):
    """One prime of a dummy-free round.

    T1 lies in E[pi - 1] and T0 in E[pi + 1]; t = 1 selects T1 as the kernel
    side.  Returns (E, T0, T1, e, t, done).
    """
    ell = params.primes[i]
    T0, T1 = ct_cswap(T0, T1, t)
    G0 = _mul_indices(T0, E, rest, params, ctx)
    t_old = t
    done = G0.Z != 0
    if done:
        E, (T0, T1) = quotient_isogeny(E, G0, ell, [T0, T1], ctx)
        b = ct_isequal(e, 0)
        e += 1 - 2 * t
        t ^= b
        ctx.ops.isog_count[i] += 1
    T1 = _mul_indices(T1, E, [i], params, ctx)
    T0, T1 = ct_cswap(T0, T1, t_old)
    return E, T0, T1, e, t, done


def action_dummy_free(E: CurveCoeffs, key: SecretKey, rng: RandomTape, ctx: Fp,
                      params: ParameterSet | None = None, bounds: Sequence[int] | None = None,
                      simba: tuple[int, int] | None = None) -> CurveCoeffs:
    """Exactly m_i real isogenies per prime for keys in Set(m_i)."""
    params, remaining, batches, rounds = _resolve(params, ctx, key, KeyMode.PARITY, bounds,
                                                  simba, "dummy-free")
    exps = list(key.exponents)
    # t_i = (sign(e_i) + 1) / 2 with sign(0) = +1
    ts = [1 - ((e >> 64) & 1) for e in exps]
    state = [E]

    def body(active):
        E = state[0]
        T1, T0 = _elligator_points(E, rng, ctx)
        T0 = _clear_cofactor(T0, E, active, params, ctx)
        T1 = _clear_cofactor(T1, E, active, params, ctx)
        for j, i in enumerate(active):
            E, T0, T1, exps[i], ts[i], done = dummy_free_step(E, T0, T1, i, exps[i], ts[i],
                                                               active[j + 1:], params, ctx)
            remaining[i] -= done
        state[0] = E

    _batch_schedule(params, remaining, batches, rounds, body)
    return state[0]


# -- unprotected --------------------------------------------------------------


def action_unprotected(E: CurveCoeffs, key: SecretKey, rng: RandomTape, ctx: Fp,
                       params: ParameterSet | None = None, **_ignored) -> CurveCoeffs:
    """Variable-time evaluation driven directly by the exponent values."""
    if params is None:
        params = params_for_prime(ctx.p)
    if len(key) != params.n:
        raise ValueError(f"key has {len(key)} exponents, expected {params.n}")
    exps = list(key.exponents)
    p = params.p
    while any(exps):
        A, C = montgomery_coeffs(E, ctx)
        x = rng.randint(1, p - 1)
        f = ctx.mul(C, ctx.add(ctx.mul(ctx.add(ctx.mul(C, x), A), ctx.sqr(x)), ctx.mul(C, x)))
        s = ctx.legendre(f)
        if s == 0:
            continue
        S = sorted((i for i in range(params.n) if exps[i] * s > 0),
                   key=lambda i: -params.primes[i])
        if not S:
            continue
        Q = _clear_cofactor(PointXZ(x, 1), E, S, params, ctx)
        for j, i in enumerate(S):
            R = _mul_indices(Q, E, S[j + 1:], params, ctx)
            if R.Z != 0:
                E, (Q,) = quotient_isogeny(E, R, params.primes[i], [Q], ctx)
                exps[i] -= s
                ctx.ops.isog_count[i] += 1
    return E


ACTIONS = {
    "unprotected": action_unprotected,
    "mcr": action_mcr,
    "oayt": action_oayt,
    "dummy-free": action_dummy_free,
}

KEY_MODE_FOR = {
    "unprotected": KeyMode.INTERVAL,
    "mcr": KeyMode.NONNEGATIVE,
    "oayt": KeyMode.INTERVAL,
    "dummy-free": KeyMode.PARITY,
}


def run_action(alg: str, A: int, key: SecretKey, rng: RandomTape, ctx: Fp,
               params: ParameterSet | None = None) -> int:
    """Act on the curve with affine coefficient A and return the normalized result."""
    try:
        fn = ACTIONS[alg]
    except KeyError:
        raise ValueError(f"unknown algorithm {alg!r}; choose from {sorted(ACTIONS)}") from None
    E = fn(curve_from_affine(A, ctx), key, rng, ctx, params=params)
    A_out, C_out = montgomery_coeffs(E, ctx)
    return ctx.mul(A_out, ctx.inv(C_out))


# -- validation ---------------------------------------------------------------


def validate_public_key(params: ParameterSet, A: int, rng: RandomTape | None = None) -> int:
    """1 if y^2 = x^3 + A x^2 + x is supersingular over F_p, else 0.

    Variable time: the input is public.  Random points on the curve and on
    its twist are used to accumulate prime factors of their orders; both
    groups have order p + 1 when supersingular, and an accumulated factor
    above 4 sqrt(p) proves it.
    """
    p = params.p
    if not 0 <= A < p or (A * A - 4) % p == 0:
        return 0
    rng = rng if rng is not None else RandomTape()
    ctx = Fp(p)
    E = curve_from_affine(A, ctx)
    bound = 4 * math.isqrt(p) + 4
    total = math.prod(params.primes) * 4
    acc = {1: 1, -1: 1}
    for _ in range(64):
        x = rng.randint(1, p - 1)
        f = (x * x * x + A * x * x + x) % p
        if f == 0:
            continue
        side = 1 if pow(f, (p - 1) // 2, p) == 1 else -1
        P = PointXZ(x, 1)
        P = xdbl(xdbl(P, E, ctx), E, ctx)
        order = 1
        for ell in params.primes:
            Q = ladder(total // 4 // ell, P, E, ctx)
            if ladder(ell, Q, E, ctx).Z != 0:
                return 0
            if Q.Z != 0:
                order *= ell
        acc[side] = math.lcm(acc[side], order)
        if acc[side] > bound:
            return 1
    return 0

