"""Exhaustive search for small HW(n; r, s; n, L) factorizations.

Independent of every construction in the package: 2-factors are enumerated
directly as edge bitmasks and combined by depth-first search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .model import C4K, HAMILTON, Certificate, TwoFactor

DEFAULT_MAX_N = 8
DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class OracleResult:
    status: str  # "yes", "no" or "undecided"
    witness: Certificate | None = None
    nodes: int = 0

    @property
    def exists(self) -> bool | None:
        return {"yes": True, "no": False}.get(self.status)


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: x for x, e in enumerate(combinations(range(n), 2))}


def _cycles_on(vertices: tuple[int, ...]):
    first, rest = vertices[0], vertices[1:]
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def _partitions(vertices: tuple[int, ...], size: int):
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    for others in combinations(rest, size - 1):
        group = (first,) + others
        remaining = tuple(v for v in rest if v not in others)
        for tail in _partitions(remaining, size):
            yield (group,) + tail


@lru_cache(maxsize=None)
def two_factors(n: int, cycle_len: int) -> tuple[np.ndarray, tuple]:
    """All 2-factors of K_n whose cycles all have length ``cycle_len``.

    Returns ``(masks, cycle_lists)`` with one uint64 edge bitmask per factor.
    """
    if n % cycle_len or cycle_len < 3:
        return np.zeros(0, np.uint64), ()
    index = _edge_index(n)
    masks, lists = [], []

    def expand(groups, acc):
        if not groups:
            mask = 0
            for c in acc:
                for x in range(len(c)):
                    a, b = c[x], c[(x + 1) % len(c)]
                    mask |= 1 << index[(min(a, b), max(a, b))]
            masks.append(mask)
            lists.append(tuple(acc))
            return
        for c in _cycles_on(groups[0]):
            expand(groups[1:], acc + [c])

    for groups in _partitions(tuple(range(n)), cycle_len):
        expand(groups, [])
    return np.array(masks, np.uint64), tuple(lists)


def exhaustive_hw(
    n: int,
    r: int,
    s: int,
    cycle_len: int,
    *,
    max_n: int = DEFAULT_MAX_N,
    budget: int = DEFAULT_BUDGET,
) -> OracleResult:
    """Decide by search whether K_n (minus a 1-factor if n is even) has ``r``
    Hamilton factors and ``s`` factors of ``cycle_len``-cycles.

    The first factor is fixed to a canonical representative of its type,
    which is without loss of generality since every relabelling of the
    vertices preserves K_n.  Later factors of the same type are taken in
    increasing index order.  ``budget`` caps the number of search nodes;
    exceeding it yields ``"undecided"``.
    """
    if n > max_n:
        raise ValueError(f"n={n} exceeds the search guard max_n={max_n}")
    if n > 11:
        raise ValueError("edge bitmasks hold at most K_11")
    if n < 3 or r < 0 or s < 0 or r + s != (n - 1) // 2:
        raise ValueError(f"need n >= 3 and r + s = {(n - 1) // 2}")
    if s > 0 and n % cycle_len:
        return OracleResult("no")
    if s > 0 and cycle_len % 4:
        raise ValueError("non-Hamilton witness factors must have cycle length 4k")

    ham_masks, ham_lists = two_factors(n, n)
    if s:
        cyc_masks, cyc_lists = two_factors(n, cycle_len)
    else:
        cyc_masks, cyc_lists = np.zeros(0, np.uint64), ()

    # slots: r Hamilton picks then s cycle-factor picks
    slots = [(ham_masks, ham_lists, HAMILTON)] * r + [(cyc_masks, cyc_lists, C4K)] * s
    # slot 0 gets the canonical representative, which is index 0 of its list
    # by construction of the enumeration (identity ordering of vertices)
    nodes = 0
    chosen: list[int] = []

    def search(depth: int, used: int, lower: int) -> bool | None:
        nonlocal nodes
        if depth == len(slots):
            return True
        nodes += 1
        if nodes > budget:
            return None
        masks = slots[depth][0]
        if depth == 0:
            candidates = np.array([0])
        else:
            same_type = slots[depth][2] == slots[depth - 1][2]
            start = lower + 1 if same_type else 0
            sub = masks[start:]
            candidates = np.flatnonzero((sub & np.uint64(used)) == 0) + start
        for c in candidates:
            chosen.append(int(c))
            found = search(depth + 1, used | int(masks[c]), int(c))
            if found is None:
                return None
            if found:
                return True
            chosen.pop()
        return False

    outcome = search(0, 0, -1)
    if outcome is None:
        return OracleResult("undecided", nodes=nodes)
    if not outcome:
        return OracleResult("no", nodes=nodes)

    factors = []
    used = 0
    for (masks, lists, kind), c in zip(slots, chosen):
        factors.append(TwoFactor(kind, lists[c]))
        used |= int(masks[c])
    one_factor = None
    if n % 2 == 0:
        one_factor = [e for e, x in _edge_index(n).items() if not used >> x & 1]
    k = cycle_len // 4 if s else None
    t = n // cycle_len if s else None
    cert = Certificate.build(n, k, t, factors, one_factor)
    return OracleResult("yes", cert, nodes)
