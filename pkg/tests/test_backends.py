import os
import random
import subprocess
import sys

import pytest

from ctcsidh import _backend
from ctcsidh._types import CurveCoeffs, PointXZ
from ctcsidh.action import RandomTape, run_action, sample_key
from ctcsidh.fp import Fp
from ctcsidh.montgomery import curve_from_affine

needs_c = pytest.mark.skipif("c" not in _backend.available(), reason="compiled kernel not built")


def both(p, fn):
    """Run fn(kernel, ctx) on each backend; return results and tallies."""
    out = []
    for name in ("python", "c"):
        with _backend.using(name) as k:
            ctx = Fp(p)
            out.append((fn(k, ctx), ctx.ops.totals()))
    return out


def rand_curve(r, p):
    ctx = Fp(p)
    return curve_from_affine(r.randrange(p), ctx)


def rand_point(r, p):
    return PointXZ(r.randrange(p), r.randrange(1, p))


@needs_c
def test_xmul_identical(csidh512):
    r = random.Random(1)
    for _ in range(5):
        E, P = rand_curve(r, csidh512.p), rand_point(r, csidh512.p)
        chains = csidh512.chains_for(r.sample(range(74), 20))
        (a, ca), (b, cb) = both(csidh512.p, lambda k, ctx: k.xmul(ctx, P, E, chains))
        assert a == b and ca == cb


@needs_c
def test_ladder_identical(csidh512):
    r = random.Random(2)
    for _ in range(5):
        E, P = rand_curve(r, csidh512.p), rand_point(r, csidh512.p)
        k_ = r.getrandbits(200)
        (a, ca), (b, cb) = both(csidh512.p, lambda k, ctx: k.ladder(ctx, k_, P, E, 201))
        assert a == b and ca == cb


@needs_c
@pytest.mark.parametrize("ell", [3, 5, 97, 587])
def test_isogeny_identical(csidh512, ell):
    r = random.Random(ell)
    E, R = rand_curve(r, csidh512.p), rand_point(r, csidh512.p)
    pts = [rand_point(r, csidh512.p) for _ in range(3)]
    (a, ca), (b, cb) = both(csidh512.p, lambda k, ctx: k.isogeny(ctx, E, R, ell, pts))
    assert a == b and ca == cb


@needs_c
def test_power_identical(csidh512):
    r = random.Random(3)
    for e in (1, 2, 3, 587, csidh512.p - 2, (csidh512.p - 1) // 2):
        a_ = r.randrange(csidh512.p)
        (a, ca), (b, cb) = both(csidh512.p, lambda k, ctx: k.power(ctx, a_, e))
        assert a == b == pow(a_, e, csidh512.p) and ca == cb


@needs_c
def test_power_zero_exponent():
    for name in ("python", "c"):
        with _backend.using(name) as k:
            assert k.power(Fp(419), 5, 0) == 1


@needs_c
def test_small_field_identical():
    r = random.Random(4)
    E = CurveCoeffs(8, 4, 4)
    for _ in range(20):
        P = rand_point(r, 419)
        outs = []
        for name in ("python", "c"):
            with _backend.using(name) as k:
                ctx = Fp(419)
                outs.append((k.ladder(ctx, 105, P, E, 7), k.isogeny(ctx, E, P, 7, [P]),
                             ctx.ops.totals()))
        assert outs[0] == outs[1]


@needs_c
@pytest.mark.parametrize("alg", ["oayt", "dummy-free"])
def test_full_action_identical(csidh512, alg):
    res = []
    for name in ("python", "c"):
        with _backend.using(name):
            rng = RandomTape(9)
            key = sample_key(csidh512, "interval" if alg == "oayt" else "parity-set", rng)
            ctx = Fp(csidh512.p)
            res.append((run_action(alg, 0, key, rng, ctx, csidh512), ctx.ops.totals()))
    assert res[0] == res[1]


@needs_c
def test_oversized_modulus_rejected():
    with _backend.using("c") as k:
        with pytest.raises(ValueError):
            k.power(Fp((1 << 600) + 1), 3, 5)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.load("fortran")


@pytest.mark.parametrize("name", _backend.available())
def test_env_selects_backend(name):
    env = dict(os.environ, CTCSIDH_BACKEND=name)
    res = subprocess.run([sys.executable, "-c", "import ctcsidh; print(ctcsidh.backend())"],
                         capture_output=True, text=True, env=env)
    assert res.stdout.strip() == name


def test_using_restores_previous():
    before = _backend.name()
    with _backend.using("python"):
        assert _backend.name() == "python"
    assert _backend.name() == before
