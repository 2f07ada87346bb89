"""Arithmetic in F_p with per-context operation tallies.

Field elements are plain ``int`` residues in ``[0, p)``.  Every operation goes
through an :class:`Fp` context, which owns an :class:`OpCounter`; there is no
global tally.  Costs are counted in semantic units (M, S, A), not machine
instructions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import _backend

__all__ = [
    "OpCounter",
    "Fp",
    "ct_isequal",
    "ct_cswap",
    "ct_select",
    "pow_fixed_schedule",
]

# Magnitude bound for the branch-free helpers; far above any residue in use.
_CT_SHIFT = 1100


@dataclass
class OpCounter:
    mul_count: int = 0
    sqr_count: int = 0
    add_count: int = 0
    isog_count: Counter = field(default_factory=Counter)

    def totals(self) -> tuple[int, int, int]:
        return (self.mul_count, self.sqr_count, self.add_count)

    def since(self, before: tuple[int, int, int]) -> tuple[int, int, int]:
        """(M, S, A) performed since the ``totals()`` snapshot ``before``."""
        m, s, a = before
        return (self.mul_count - m, self.sqr_count - s, self.add_count - a)

    def isog_vector(self, n: int) -> list[int]:
        return [self.isog_count[i] for i in range(n)]


def ct_isequal(x: int, y: int) -> int:
    """1 if x == y else 0, computed without a data-dependent branch."""
    d = x ^ y
    return 1 + ((d | -d) >> _CT_SHIFT)


def _swap_ints(x: int, y: int, mask: int) -> tuple[int, int]:
    t = (x ^ y) & mask
    return x ^ t, y ^ t


def ct_cswap(x, y, b: int):
    """Return (y, x) if b == 1 and (x, y) if b == 0, by masking.

    Works on ints and, element-wise, on tuples of ints (including NamedTuples).
    """
    mask = -b
    if isinstance(x, tuple):
        pairs = [_swap_ints(xi, yi, mask) for xi, yi in zip(x, y)]
        xs = [u for u, _ in pairs]
        ys = [v for _, v in pairs]
        if hasattr(x, "_fields"):
            return type(x)(*xs), type(y)(*ys)
        return tuple(xs), tuple(ys)
    return _swap_ints(x, y, mask)


def ct_select(x, y, b: int):
    """y if b == 1 else x."""
    return ct_cswap(x, y, b)[0]


def pow_fixed_schedule(ctx: "Fp", a: int, e: int) -> int:
    """Left-to-right square-and-multiply driven only by the (public) bits of e."""
    if e == 0:
        return 1
    r = a
    for bit in bin(e)[3:]:
        r = ctx.sqr(r)
        if bit == "1":
            r = ctx.mul(r, a)
    return r


class Fp:
    """Arithmetic modulo ``p`` tallying into ``ops``."""

    __slots__ = ("p", "nbytes", "ops", "_half")

    def __init__(self, p: int, ops: OpCounter | None = None):
        self.p = p
        self.nbytes = (p.bit_length() + 7) // 8
        self.ops = OpCounter() if ops is None else ops
        self._half = (p - 1) // 2

    def __repr__(self) -> str:
        return f"Fp(p={self.p if self.p < 2**64 else hex(self.p)[:12] + '...'})"

    def add(self, a: int, b: int) -> int:
        self.ops.add_count += 1
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        self.ops.add_count += 1
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        self.ops.add_count += 1
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        self.ops.mul_count += 1
        return a * b % self.p

    def sqr(self, a: int) -> int:
        self.ops.sqr_count += 1
        return a * a % self.p

    def pow(self, a: int, e: int) -> int:
        return _backend.kernel().power(self, a, e)

    def legendre(self, a: int) -> int:
        """+1, -1 or 0, via a^((p-1)/2) on a schedule fixed by p."""
        r = self.pow(a, self._half)
        return r - self.p * ct_isequal(r, self.p - 1)

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return self.pow(a, self.p - 2)

    def encode(self, a: int) -> bytes:
        return (a % self.p).to_bytes(self.nbytes, "little")

    def decode(self, data: bytes) -> int:
        if len(data) != self.nbytes:
            raise ValueError(f"expected {self.nbytes} bytes, got {len(data)}")
        a = int.from_bytes(data, "little")
        if a >= self.p:
            raise ValueError("encoded value is not reduced modulo p")
        return a
