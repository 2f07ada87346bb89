"""Parameter sets: the prime list, the field prime, exponent bounds, batching
configuration and the precomputed differential addition chains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from ._chain_table import CHAIN_OPS

__all__ = [
    "ChainStep",
    "AdditionChain",
    "ParameterSet",
    "chain_from_ops",
    "find_shortest_chain",
    "load_parameter_set",
    "PARAMETER_SETS",
]

DBL = "dbl"
ADD = "add"


class ChainStep(NamedTuple):
    """One chain element.

    ``dbl`` appends 2*values[a]; ``add`` appends values[a] + values[b] and
    requires values[a] - values[b] == values[diff].
    """

    op: str
    a: int
    b: int = 0
    diff: int = 0


@dataclass(frozen=True)
class AdditionChain:
    """A differential addition chain starting from 1 and ending at ``target``."""

    target: int
    steps: tuple[ChainStep, ...]
    moves: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.steps)

    def values(self) -> list[int]:
        vals = [1]
        for st in self.steps:
            if st.op == DBL:
                vals.append(2 * vals[st.a])
            else:
                vals.append(vals[st.a] + vals[st.b])
        return vals

    def validate(self) -> None:
        """Raise ValueError unless every sum has its difference already present."""
        vals = [1]
        for n, st in enumerate(self.steps):
            idx = (st.a, st.b, st.diff) if st.op == ADD else (st.a,)
            if any(not 0 <= i < len(vals) for i in idx):
                raise ValueError(f"step {n} refers to a later element")
            if st.op == DBL:
                vals.append(2 * vals[st.a])
            elif st.op == ADD:
                if vals[st.a] - vals[st.b] != vals[st.diff]:
                    raise ValueError(f"step {n}: difference not in chain")
                vals.append(vals[st.a] + vals[st.b])
            else:
                raise ValueError(f"step {n}: unknown op {st.op!r}")
        if vals[-1] != self.target:
            raise ValueError(f"chain ends at {vals[-1]}, not {self.target}")

    @cached_property
    def code(self) -> bytes:
        """Packed form for the compiled kernel: 4 bytes (op, a, b, diff) per step."""
        out = bytearray()
        for st in self.steps:
            out += bytes((0 if st.op == DBL else 1, st.a, st.b, st.diff))
        return bytes(out)


# Chains are searched over two-register states (x, y) whose difference x - y
# is always held in a third register.  Moves, in tie-break order:
#   "A": (x, y) -> (x + y, x)   difference y
#   "B": (x, y) -> (x + y, y)   difference x
#   "D": (x, y) -> (2x, x)      doubling


def _successors(x: int, y: int) -> Iterator[tuple[str, tuple[int, int]]]:
    yield "A", (x + y, x)
    yield "B", (x + y, y)
    yield "D", (2 * x, x)


def chain_from_ops(target: int, ops: str) -> AdditionChain:
    """Expand a move string (first move always ``D``) into index-based steps."""
    if not ops or ops[0] != "D":
        raise ValueError("a chain starts by doubling the base point")
    steps = [ChainStep(DBL, 0)]
    x, y, d = 1, 0, 0  # register indices: larger, smaller, difference
    for mv in ops[1:]:
        new = len(steps) + 1
        if mv == "A":
            steps.append(ChainStep(ADD, x, y, d))
            x, y, d = new, x, y
        elif mv == "B":
            steps.append(ChainStep(ADD, x, y, d))
            x, y, d = new, y, x
        elif mv == "D":
            steps.append(ChainStep(DBL, x))
            x, y, d = new, x, x
        else:
            raise ValueError(f"unknown move {mv!r}")
    chain = AdditionChain(target, tuple(steps), ops)
    chain.validate()
    return chain


def find_shortest_chain(ell: int) -> AdditionChain:
    """Breadth-first search for a shortest chain reaching ``ell``.

    The frontier is kept in lexicographic order of move strings, so the first
    chain found is the lexicographically smallest among the shortest ones.
    """
    if ell < 3:
        raise ValueError("ell must be at least 3")
    frontier: list[tuple[tuple[int, int], str]] = [((2, 1), "D")]
    seen = {(2, 1)}
    while frontier:
        nxt = []
        for (x, y), ops in frontier:
            for mv, st in _successors(x, y):
                if st[0] == ell:
                    return chain_from_ops(ell, ops + mv)
                if st[0] > ell or st in seen:
                    continue
                seen.add(st)
                nxt.append((st, ops + mv))
        frontier = nxt
    raise AssertionError("unreachable: every ell >= 3 has a chain")


def odd_primes(count: int) -> list[int]:
    out: list[int] = []
    n = 3
    while len(out) < count:
        if all(n % q for q in out if q * q <= n):
            out.append(n)
        n += 2
    return out


@dataclass(frozen=True)
class ParameterSet:
    name: str
    ident: int
    primes: tuple[int, ...]
    bounds: tuple[int, ...]
    parity_bounds: tuple[int, ...]
    simba: dict[str, tuple[int, int]] = field(hash=False, compare=False)
    chains: tuple[AdditionChain, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.primes)

    @cached_property
    def p(self) -> int:
        return 4 * math.prod(self.primes) - 1

    @property
    def nbytes(self) -> int:
        return (self.p.bit_length() + 7) // 8

    def chain(self, i: int) -> AdditionChain:
        return self.chains[i]

    def chains_for(self, indices: Sequence[int]) -> tuple[AdditionChain, ...]:
        """Chains for the given prime indices, ordered by increasing prime."""
        return tuple(self.chains[i] for i in sorted(indices))

    def keyspace_bits(self) -> float:
        return sum(math.log2(2 * m + 1) for m in self.bounds)


def _build(name: str, ident: int, primes: Sequence[int], bound: int, parity_bound: int,
           simba: dict[str, tuple[int, int]]) -> ParameterSet:
    chains = tuple(chain_from_ops(ell, CHAIN_OPS[ell]) for ell in primes)
    return ParameterSet(
        name=name,
        ident=ident,
        primes=tuple(primes),
        bounds=(bound,) * len(primes),
        parity_bounds=(parity_bound,) * len(primes),
        simba=dict(simba),
        chains=chains,
    )


_SIMBA = {"mcr": (5, 11), "oayt": (3, 8), "dummy-free": (5, 11)}

PARAMETER_SETS = {
    "toy-419": _build("toy-419", 1, (3, 5, 7), 2, 2, _SIMBA),
    "csidh-512": _build("csidh-512", 2, tuple(odd_primes(73)) + (587,), 5, 10, _SIMBA),
}


def load_parameter_set(name: str) -> ParameterSet:
    try:
        return PARAMETER_SETS[name]
    except KeyError:
        raise ValueError(
            f"unknown parameter set {name!r}; choose from {sorted(PARAMETER_SETS)}"
        ) from None


def parameter_set_by_id(ident: int) -> ParameterSet:
    for ps in PARAMETER_SETS.values():
        if ps.ident == ident:
            return ps
    raise ValueError(f"unknown parameter set id {ident}")
