"""Compare the compiled and pure-Python kernels on csidh-512.

    python benchmarks/bench_backends.py [--repeat N] [--actions N]

Both backends must report identical outputs and operation counts; the script
checks that before printing timings.
"""

import argparse
import random
import time

from ctcsidh import _backend
from ctcsidh.action import KEY_MODE_FOR, RandomTape, run_action, sample_key
from ctcsidh.fp import Fp
from ctcsidh.montgomery import CurveCoeffs, PointXZ, ladder, xmul
from ctcsidh.isogeny import quotient_isogeny
from ctcsidh.params import load_parameter_set


def workloads(ps, n_actions):
    rnd = random.Random(7)
    p = ps.p
    E = CurveCoeffs(*(rnd.randrange(p) for _ in range(3)))
    P = PointXZ(rnd.randrange(p), 1)
    Q = PointXZ(rnd.randrange(p), 1)
    return {
        "xmul (all 74 chains)": lambda ctx: xmul(P, E, ps.chains, ctx),
        "ladder (k = p+1)": lambda ctx: ladder(p + 1, P, E, ctx),
        "587-isogeny, 2 points": lambda ctx: quotient_isogeny(E, P, 587, [Q, P], ctx),
        "inversion": lambda ctx: ctx.inv(P.X),
        f"oayt action x{n_actions}": lambda ctx: [
            run_action("oayt", 0, sample_key(ps, KEY_MODE_FOR["oayt"], RandomTape(s)),
                       RandomTape(s), ctx, ps)
            for s in range(n_actions)
        ],
    }


def timed(fn, ctx, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(ctx)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--actions", type=int, default=2)
    args = ap.parse_args()
    ps = load_parameter_set("csidh-512")
    backends = _backend.available()
    if "c" not in backends:
        print("compiled kernel not available; only the Python kernel can be timed")
    rows = []
    for name, fn in workloads(ps, args.actions).items():
        results = {}
        for b in backends:
            ctx = Fp(ps.p)
            with _backend.using(b):
                t, out = timed(fn, ctx, args.repeat)
            results[b] = (t, out, ctx.ops.totals())
        outs = {(repr(r[1]), r[2]) for r in results.values()}
        if len(outs) != 1:
            raise SystemExit(f"backends disagree on {name}")
        rows.append((name, results))
    print(f"{'workload':<26} " + " ".join(f"{b + ' (ms)':>12}" for b in backends) + f" {'speedup':>9}")
    for name, results in rows:
        times = [results[b][0] * 1e3 for b in backends]
        speed = (results["python"][0] / results["c"][0]) if "c" in results else 1.0
        print(f"{name:<26} " + " ".join(f"{t:12.2f}" for t in times) + f" {speed:9.1f}x")
    print("outputs and operation counts identical across backends")


if __name__ == "__main__":
    main()
