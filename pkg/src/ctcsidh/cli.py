"""Command-line front end: keygen, derive, validate, bench.

Exit status: 0 success, 1 usage or I/O error, 2 key validation failure.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path
from typing import Sequence

from .action import (ACTIONS, KEY_MODE_FOR, KeyMode, RandomTape, SecretKey, run_action,
                     sample_key, validate_public_key)
from .fp import Fp
from .params import PARAMETER_SETS, ParameterSet, load_parameter_set, parameter_set_by_id

PRIVATE_MAGIC = 0x73
PUBLIC_MAGIC = 0x70

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2

BENCH_ORDER = ("oayt", "mcr", "dummy-free", "unprotected")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


# -- key files ------------------------------------------------------------------


def encode_private(params: ParameterSet, key: SecretKey) -> bytes:
    return bytes((PRIVATE_MAGIC, params.ident)) + bytes(e & 0xFF for e in key.exponents)


def decode_private(data: bytes) -> tuple[ParameterSet, tuple[int, ...]]:
    if len(data) < 2 or data[0] != PRIVATE_MAGIC:
        raise CliError("not a private key file")
    params = _params_from_id(data[1])
    body = data[2:]
    if len(body) != params.n:
        raise CliError(f"private key for {params.name} must have {params.n} exponents")
    return params, tuple(b - 256 if b > 127 else b for b in body)


def encode_public(params: ParameterSet, A: int) -> bytes:
    return bytes((PUBLIC_MAGIC, params.ident)) + A.to_bytes(params.nbytes, "little")


def decode_public(data: bytes) -> tuple[ParameterSet, int]:
    if len(data) < 2 or data[0] != PUBLIC_MAGIC:
        raise CliError("not a public key file")
    params = _params_from_id(data[1])
    if len(data) != 2 + params.nbytes:
        raise CliError(f"public key for {params.name} must have {params.nbytes} bytes")
    return params, int.from_bytes(data[2:], "little")


def _params_from_id(ident: int) -> ParameterSet:
    try:
        return parameter_set_by_id(ident)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.write(data.hex() + "\n")
        return
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from None


def _check_params(args, params: ParameterSet) -> None:
    if args.params is not None and args.params != params.name:
        raise CliError(f"key file is for {params.name}, not {args.params}")


# -- commands -------------------------------------------------------------------


def cmd_keygen(args) -> int:
    params = load_parameter_set(args.params or "csidh-512")
    mode = KeyMode(args.mode) if args.mode else KEY_MODE_FOR[args.alg]
    key = sample_key(params, mode, RandomTape(args.seed))
    _write(args.out, encode_private(params, key))
    return EXIT_OK


def cmd_derive(args) -> int:
    params, exps = decode_private(_read(args.key))
    _check_params(args, params)
    key = SecretKey(exps, KEY_MODE_FOR[args.alg])
    if args.alg != "unprotected":
        bounds = params.parity_bounds if key.mode is KeyMode.PARITY else params.bounds
        try:
            key.check(bounds)
        except ValueError as exc:
            raise CliError(f"private key does not suit {args.alg}: {exc}") from None
    rng = RandomTape(args.seed)
    A = 0
    if args.peer is not None:
        peer_params, A = decode_public(_read(args.peer))
        if peer_params is not params:
            raise CliError("peer key uses a different parameter set")
        if not validate_public_key(params, A, rng):
            raise CliError("peer public key is not a valid supersingular curve", EXIT_INVALID)
    out = run_action(args.alg, A, key, rng, Fp(params.p), params)
    _write(args.out, encode_public(params, out))
    return EXIT_OK


def cmd_validate(args) -> int:
    params, A = decode_public(_read(args.key))
    _check_params(args, params)
    ok = validate_public_key(params, A, RandomTape(args.seed))
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_INVALID


def bench_records(params: ParameterSet, algs: Sequence[str], trials: int, seed: int):
    """One record per (algorithm, trial): counts and wall-clock time of a public-key derivation."""
    records = []
    for alg in algs:
        for trial in range(trials):
            rng = RandomTape(seed * 1_000_003 + trial)
            key = sample_key(params, KEY_MODE_FOR[alg], rng)
            ctx = Fp(params.p)
            t0 = time.perf_counter_ns()
            run_action(alg, 0, key, rng, ctx, params)
            wall = time.perf_counter_ns() - t0
            m, s, a = ctx.ops.totals()
            records.append({"alg": alg, "trial": trial, "M": m, "S": s, "A": a, "wall_ns": wall})
    return records


def bench_table(records) -> str:
    algs = list(dict.fromkeys(r["alg"] for r in records))
    rows = {}
    for alg in algs:
        rs = [r for r in records if r["alg"] == alg]
        rows[alg] = {k: statistics.fmean(r[k] for r in rs) for k in ("M", "S", "A", "wall_ns")}
    base = "oayt" if "oayt" in rows else algs[0]
    head = f"{'algorithm':<12} {'M':>8} {'S':>8} {'A':>8} {'M+S':>8} {'(M+S)/' + base:>12} {'ms':>9} {'time/' + base:>10}"
    lines = [head, "-" * len(head)]
    b = rows[base]
    for alg in algs:
        r = rows[alg]
        ms = (r["M"] + r["S"]) / (b["M"] + b["S"])
        lines.append(
            f"{alg:<12} {r['M'] / 1e6:8.3f} {r['S'] / 1e6:8.3f} {r['A'] / 1e6:8.3f} "
            f"{(r['M'] + r['S']) / 1e6:8.3f} {ms:12.2f} {r['wall_ns'] / 1e6:9.1f} "
            f"{r['wall_ns'] / b['wall_ns']:10.2f}"
        )
    lines.append("(field operation counts in millions, mean per action)")
    return "\n".join(lines)


def cmd_bench(args) -> int:
    params = load_parameter_set(args.params or "csidh-512")
    if args.trials < 1:
        raise CliError("--trials must be at least 1")
    algs = BENCH_ORDER if args.alg == "all" else (args.alg,)
    records = bench_records(params, algs, args.trials, args.seed if args.seed is not None else 0)
    print(bench_table(records))
    lines = "".join(json.dumps(r) + "\n" for r in records)
    if args.out:
        try:
            Path(args.out).write_text(lines)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        sys.stdout.write(lines)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ctcsidh", description="Constant-time CSIDH key exchange tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    param_names = sorted(PARAMETER_SETS)
    alg_names = sorted(ACTIONS)

    def common(p, alg_default="oayt", with_alg=True, alg_choices=alg_names):
        p.add_argument("--params", choices=param_names, default=None,
                       help="parameter set (default csidh-512, or the one in the key file)")
        if with_alg:
            p.add_argument("--alg", choices=alg_choices, default=alg_default)
        p.add_argument("--seed", type=int, default=None,
                       help="deterministic randomness for testing; omit for OS entropy")

    p = sub.add_parser("keygen", help="sample a private key")
    common(p)
    p.add_argument("--mode", choices=[m.value for m in KeyMode], default=None,
                   help="exponent set (default: the one --alg expects)")
    p.add_argument("--out", help="output file (default: hex to stdout)")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("derive", help="compute a public key or, with --peer, a shared secret")
    common(p)
    p.add_argument("--key", required=True, help="private key file")
    p.add_argument("--peer", help="peer public key file")
    p.add_argument("--out", help="output file (default: hex to stdout)")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("validate", help="check that a public key is a supersingular curve")
    common(p, with_alg=False)
    p.add_argument("--key", required=True, help="public key file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", help="count field operations per action")
    common(p, alg_default="all", alg_choices=alg_names + ["all"])
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--out", help="write one JSON record per trial to this file")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ctcsidh: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
