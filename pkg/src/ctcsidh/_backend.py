"""Selects the kernel implementation for the hot loops.

The compiled kernel (``_ckernel``) is used when it was built; otherwise the
pure-Python kernel (``_pykernel``).  ``CTCSIDH_BACKEND=python`` forces the
fallback.  Both expose the same four functions:

    xmul(ctx, P, E, chains)            scalar multiplication by composed chains
    ladder(ctx, k, P, E, nbits)        uniform Montgomery ladder
    isogeny(ctx, E, R, ell, points)    codomain and images (Edwards model)
    power(ctx, a, e)                   fixed-schedule exponentiation
"""

from __future__ import annotations

import importlib
import os
from contextlib import contextmanager
from types import ModuleType

_selected: ModuleType | None = None


def available() -> list[str]:
    names = ["python"]
    try:
        importlib.import_module("ctcsidh._ckernel")
    except ImportError:
        pass
    else:
        names.insert(0, "c")
    return names


def load(name: str) -> ModuleType:
    if name == "c":
        return importlib.import_module("ctcsidh._ckernel")
    if name == "python":
        return importlib.import_module("ctcsidh._pykernel")
    raise ValueError(f"unknown backend {name!r}")


def kernel() -> ModuleType:
    global _selected
    if _selected is None:
        want = os.environ.get("CTCSIDH_BACKEND", "").strip().lower()
        if want:
            _selected = load(want)
        else:
            _selected = load(available()[0])
    return _selected


def name() -> str:
    return "c" if kernel().__name__.endswith("_ckernel") else "python"


@contextmanager
def using(backend: str):
    """Temporarily switch backend (tests and benchmarks)."""
    global _selected
    previous = kernel()
    _selected = load(backend)
    try:
        yield _selected
    finally:
        _selected = previous
