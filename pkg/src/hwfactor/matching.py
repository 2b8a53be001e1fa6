"""Offset matchings between blocks and the cycles they glue into."""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .model import Edge, Matching


def expand_matching(m: Matching, k: int, t: int | None = None) -> list[Edge]:
    """Edges of ``(i, j)_d``: slot ``l`` of ``V_i`` joined to slot ``l+d`` of ``V_j``."""
    q = 2 * k
    if t is not None and not (0 <= m.i < 2 * t and 0 <= m.j < 2 * t):
        raise ValueError(f"block index out of range for t={t}: {m}")
    d = m.d % q
    return [Edge.of(m.i * q + l, m.j * q + (l + d) % q) for l in range(q)]


def _chain(order: Sequence[int], offsets: Sequence[int], k: int) -> list[tuple[int, ...]]:
    q = 2 * k
    L = len(order)
    if L < 2 or len(offsets) != L:
        raise ValueError("order and offsets must have equal length >= 2")
    if len(set(order)) != L:
        raise ValueError(f"blocks repeat in order {tuple(order)}")
    total = sum(offsets) % q
    if L == 2 and total == 0:
        raise ValueError("offsets sum to 0 on a 2-block chain: the matchings coincide")
    g = gcd(total, q)
    cycles = []
    for start in range(g):
        seq = []
        slot = start
        for _ in range(q // g):
            for x in range(L):
                seq.append(order[x] * q + slot)
                slot = (slot + offsets[x]) % q
        cycles.append(tuple(seq))
    return cycles


def chain_two_factor(order: Sequence[int], offsets: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Traverse ``(pi0,pi1)_{d0} ∪ (pi1,pi2)_{d1} ∪ ... ∪ (pi_{L-1},pi0)_{d_{L-1}}`` into cycles.

    With ``g = gcd(sum(offsets) mod 2k, 2k)`` the union is ``g`` disjoint
    cycles of length ``L * 2k / g``; ``g == 1`` is a Hamilton cycle.

    Raises:
        ValueError: ``order`` is not a permutation of ``0..L-1`` or the union
            repeats an edge.
    """
    if sorted(order) != list(range(len(order))):
        raise ValueError(f"order {tuple(order)} is not a permutation of Z_{len(order)}")
    return _chain(order, offsets, k)


def offset_sum(offsets: Sequence[int], k: int) -> int:
    return sum(offsets) % (2 * k)


def bipartite_c4k(i: int, j: int, d1: int, d2: int, k: int) -> tuple[int, ...]:
    """The 4k-cycle ``(i,j)_{d1} ∪ (i,j)_{d2}`` on ``V_i ∪ V_j``.

    Traversed as ``i_0, j_{d1}, i_{d1-d2}, j_{2d1-d2}, ...``.
    """
    q = 2 * k
    diff = (d1 - d2) % q
    if gcd(diff, q) != 1:
        raise ValueError(f"d1-d2 = {diff} (mod {q}) is not coprime to 2k={q}")
    (cycle,) = _chain((i, j), (d1, -d2), k)
    return cycle
