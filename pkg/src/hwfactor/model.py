"""Shared value types: parameters, vertices, edges, matchings, 2-factors.

Vertices are flat integers ``0..n-1``.  When the block structure applies,
vertex ``i*2k + l`` is slot ``l`` of block ``V_i``; this is a view over the
flat ids, never a storage format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

HAMILTON = "hamilton"
C4K = "c4k"
KINDS = (HAMILTON, C4K)


@dataclass(frozen=True)
class Params:
    """Parameters of an HW(n; r, s; n, 4k) instance with ``n = 4kt``."""

    k: int
    t: int
    r: int

    def __post_init__(self):
        if self.k < 1 or self.t < 1:
            raise ValueError(f"k and t must be positive, got k={self.k}, t={self.t}")
        if not 0 <= self.r <= (self.n - 2) // 2:
            raise ValueError(f"r={self.r} outside [0, {(self.n - 2) // 2}] for n={self.n}")

    @property
    def n(self) -> int:
        return 4 * self.k * self.t

    @property
    def s(self) -> int:
        return (self.n - 2) // 2 - self.r


def encode(i: int, l: int, k: int, t: int | None = None) -> int:
    """Flat id of slot ``l`` in block ``i``."""
    if not 0 <= l < 2 * k:
        raise ValueError(f"slot {l} outside Z_{2 * k}")
    if i < 0 or (t is not None and i >= 2 * t):
        raise ValueError(f"block {i} out of range")
    return i * 2 * k + l


def decode(v: int, k: int) -> tuple[int, int]:
    if v < 0:
        raise ValueError(f"negative vertex id {v}")
    return divmod(v, 2 * k)


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Matching:
    """The perfect matching ``(i, j)_d = {(i_l, j_{l+d}) : l in Z_2k}``.

    Orientation matters for the offset: ``(i, j)_d`` and ``(j, i)_{-d}``
    are the same edge set.
    """

    i: int
    j: int
    d: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError(f"matching needs two distinct blocks, got i=j={self.i}")

    def reversed(self, k: int) -> "Matching":
        return Matching(self.j, self.i, (-self.d) % (2 * k))


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cycle to start at its minimum, heading to the smaller neighbour."""
    seq = tuple(seq)
    if len(seq) < 3:
        return seq
    p = seq.index(min(seq))
    rot = seq[p:] + seq[:p]
    if rot[-1] < rot[1]:
        rot = (rot[0],) + rot[:0:-1]
    return rot


def cycle_edges(seq: Sequence[int]) -> list[Edge]:
    m = len(seq)
    return [Edge.of(seq[x], seq[(x + 1) % m]) for x in range(m)]


@dataclass(frozen=True)
class TwoFactor:
    """A 2-factor tagged ``hamilton`` or ``c4k``.

    Cycles are stored canonically and sorted by their first vertex.  The
    constructor does not enforce spanning or length invariants; use
    :meth:`check` for that.  ``offset_sum`` records the chain offset sum for
    factors built from matching chains (metadata only).
    """

    kind: str
    cycles: tuple[tuple[int, ...], ...]
    offset_sum: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}")
        cycles = tuple(sorted(canonical_cycle(c) for c in self.cycles))
        object.__setattr__(self, "cycles", cycles)

    def edges(self) -> list[Edge]:
        return [e for c in self.cycles for e in cycle_edges(c)]

    def with_kind(self, kind: str) -> "TwoFactor":
        return TwoFactor(kind, self.cycles, self.offset_sum)

    def check(self, n: int, k: int | None = None) -> bool:
        """True iff every vertex of K_n has degree 2 and cycle lengths match the kind."""
        deg = [0] * n
        for a, b in self.edges():
            if not (0 <= a < n and 0 <= b < n):
                return False
            deg[a] += 1
            deg[b] += 1
        if any(d != 2 for d in deg) or len(set(self.edges())) != n:
            return False
        lengths = [len(c) for c in self.cycles]
        if sorted(v for c in self.cycles for v in c) != list(range(n)):
            return False
        if self.kind == HAMILTON:
            return lengths == [n]
        return k is not None and all(x == 4 * k for x in lengths)


@dataclass(frozen=True)
class Certificate:
    """A 2-factorization of K_n (minus ``one_factor`` when n is even).

    ``k`` and ``t`` are ``None`` for Hamilton-only certificates.
    """

    n: int
    k: int | None
    t: int | None
    r: int
    s: int
    factors: tuple[TwoFactor, ...]
    one_factor: tuple[Edge, ...] | None

    @classmethod
    def build(cls, n, k, t, factors: Iterable[TwoFactor], one_factor=None) -> "Certificate":
        """Order factors hamilton-first (stable) and derive ``r``/``s`` from the tags."""
        factors = list(factors)
        ham = [f for f in factors if f.kind == HAMILTON]
        c4k = [f for f in factors if f.kind == C4K]
        if one_factor is not None:
            one_factor = tuple(sorted(Edge.of(*e) for e in one_factor))
        return cls(n, k, t, len(ham), len(c4k), tuple(ham + c4k), one_factor)

    def all_edges(self) -> list[Edge]:
        out = [e for f in self.factors for e in f.edges()]
        if self.one_factor:
            out.extend(self.one_factor)
        return out


@dataclass(frozen=True)
class SuperPlan:
    """1-factorization of the super-graph K_2t on the blocks.

    ``factors[x-1]`` is the 1-factor numbered ``x`` (1-based).  For
    ``i = 1..t-1``, ``hc_pairs[i-1]`` is the block traversal of the
    Hamilton cycle formed by factors ``2i-1`` and ``2i``; its even-position
    edges belong to factor ``2i-1``.
    """

    t: int
    factors: tuple[frozenset[tuple[int, int]], ...]
    hc_pairs: tuple[tuple[int, ...], ...]

    def factor(self, x: int) -> frozenset[tuple[int, int]]:
        if not 1 <= x <= 2 * self.t - 1:
            raise ValueError(f"factor index {x} outside 1..{2 * self.t - 1}")
        return self.factors[x - 1]

    def traversal(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.t - 1:
            raise ValueError(f"pair index {i} outside 1..{self.t - 1}")
        return self.hc_pairs[i - 1]
