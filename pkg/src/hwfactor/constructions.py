"""Decomposition lemmas over the blocked vertex set ``Z_2t x Z_2k``.

Each function consumes a fixed edge budget described by a :class:`SuperPlan`
and returns Hamilton factors, C_4k-factors and 1-factors that partition it.
``F_x`` below is the blow-up of super-factor ``x``: every edge between
``V_i`` and ``V_j`` for each super-edge ``V_iV_j`` of the factor.  ``X`` is
the union of the complete graphs inside the blocks.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple, Sequence

from .classical import (
    endpoint_aligned_order,
    ham_path_decomp,
    leftover_aligned_order,
    relabel,
    split_alternating,
    walecki_even,
)
from .matching import bipartite_c4k, chain_two_factor, expand_matching, offset_sum
from .model import C4K, HAMILTON, Edge, Matching, SuperPlan, TwoFactor


class ConstructionError(AssertionError):
    """An internal invariant of a construction failed; always a bug."""


def super_plan(t: int) -> SuperPlan:
    """1-factorization of K_2t with factor 1 = {01, 23, ...}, factor 2 = {12, ..., (2t-1)0}
    and factor 2t-1 = {0t} ∪ {i(2t-i)}."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if t == 1:
        return SuperPlan(1, (frozenset({(0, 1)}),), ())
    hcs, leftover = walecki_even(t)
    factors = []
    for cyc in hcs:
        for half in split_alternating(cyc):
            factors.append(frozenset(tuple(e) for e in half))
    factors.append(frozenset(tuple(e) for e in leftover))
    return SuperPlan(t, tuple(factors), tuple(hcs))


def _trace_cycles(edges: Sequence[Edge]) -> list[tuple[int, ...]]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(v) != 2 for v in adj.values()):
        raise ConstructionError("edge set is not 2-regular")
    seen: set[int] = set()
    cycles = []
    for s in sorted(adj):
        if s in seen:
            continue
        seq, prev, cur = [s], s, adj[s][0]
        seen.add(s)
        while cur != s:
            seq.append(cur)
            seen.add(cur)
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
        cycles.append(tuple(seq))
    return cycles


def _hamilton(order: Sequence[int], offsets: list[int], k: int) -> TwoFactor:
    cycles = chain_two_factor(order, offsets, k)
    total = offset_sum(offsets, k)
    if len(cycles) != 1 or gcd(total, 2 * k) != 1:
        raise ConstructionError(f"chain with offset sum {total} is not a Hamilton cycle")
    return TwoFactor(HAMILTON, cycles, offset_sum=total)


def _c4k(pairs: list[tuple[int, int, int, int]], k: int) -> TwoFactor:
    return TwoFactor(C4K, [bipartite_c4k(i, j, d1, d2, k) for i, j, d1, d2 in pairs])


def _h_pair(W: Sequence[int], l: int, as_hamilton: bool, k: int) -> list[TwoFactor]:
    """Split ``H_2l ∪ H_2l+1`` along traversal ``W`` into two HCs or two C_4k-factors."""
    q = 2 * k
    L = len(W)
    a, b = 2 * l, 2 * l + 1
    if as_hamilton:
        offs_a = [a if x % 2 == 0 else (-a) % q for x in range(L)]
        offs_b = [b if x % 2 == 0 else (-b) % q for x in range(L)]
        # swap the closing matchings: sums become -1 and +1
        offs_a[-1], offs_b[-1] = offs_b[-1], offs_a[-1]
        return [_hamilton(W, offs_a, k), _hamilton(W, offs_b, k)]
    even = [(W[x], W[(x + 1) % L], a, b) for x in range(0, L, 2)]
    odd = [(W[x], W[(x + 1) % L], (-a) % q, (-b) % q) for x in range(1, L, 2)]
    return [_c4k(even, k), _c4k(odd, k)]


def decompose_pair(plan: SuperPlan, i: int, r_i: int, k: int) -> list[TwoFactor]:
    """Split ``F_{2i-1} ∪ F_{2i}`` into ``r_i`` Hamilton cycles and ``2k - r_i`` C_4k-factors.

    Along the traversal ``W`` of the super-cycle, ``H_l`` puts offset ``l`` on
    even-position super-edges and ``-l`` on odd ones; the ``H_l`` partition
    the budget and are consumed two at a time.
    """
    if r_i % 2 or not 0 <= r_i <= 2 * k:
        raise ValueError(f"r_i must be even in [0, {2 * k}], got {r_i}")
    W = plan.traversal(i)
    out: list[TwoFactor] = []
    for l in range(k):
        out.extend(_h_pair(W, l, l < r_i // 2, k))
    return out


def decompose_blocks(plan: SuperPlan, x: int, designated_leftover: bool, k: int):
    """Split ``F_x ∪ X`` (t disjoint copies of K_4k) into 2k-1 C_4k-factors and a 1-factor.

    With ``designated_leftover`` the 1-factor is the union of ``(i, j)_0``
    over the super-edges of factor ``x``.
    """
    hcs, leftover = walecki_even(2 * k)
    per_index: list[list[tuple[int, ...]]] = [[] for _ in hcs]
    one_factor: list[Edge] = []
    for a, b in sorted(plan.factor(x)):
        order = leftover_aligned_order(a, b, k) if designated_leftover else endpoint_aligned_order(a, b, k)
        rel_hcs, rel_left = relabel((hcs, leftover), order)
        for c, cyc in enumerate(rel_hcs):
            per_index[c].append(cyc)
        one_factor.extend(rel_left)
    return [TwoFactor(C4K, cycles) for cycles in per_index], sorted(one_factor)


def odd_pair_leftover(t: int, k: int) -> list[Edge]:
    """``(1,2)_0 ∪ (3,4)_0 ∪ ... ∪ (2t-1,0)_0``."""
    return sorted(e for j in range(t) for e in expand_matching(Matching(2 * j + 1, (2 * j + 2) % (2 * t), 0), k))


def decompose_f1_with_matching(plan: SuperPlan, i_prime: Sequence[Edge], k: int):
    """Split ``F_1 ∪ I'`` into k-1 C_4k-factors, one Hamilton cycle and a 1-factor.

    ``I'`` must be :func:`odd_pair_leftover`.  Returns ``(c4k_factors,
    hamilton_factor, one_factor)``.
    """
    t = plan.t
    if t < 2:
        raise ValueError("needs t >= 2")
    if sorted(Edge.of(*e) for e in i_prime) != odd_pair_leftover(t, k):
        raise ValueError("i_prime must be (1,2)_0 ∪ (3,4)_0 ∪ ... ∪ (2t-1,0)_0")
    q = 2 * k
    c4k = [_c4k([(2 * j, 2 * j + 1, 2 * i - 1, 2 * i) for j in range(t)], k) for i in range(1, k)]
    hc = _hamilton(range(2 * t), [q - 1] + [0] * (2 * t - 1), k)
    i_n = expand_matching(Matching(0, 1, 0), k)
    for j in range(1, t):
        i_n += expand_matching(Matching(2 * j, 2 * j + 1, q - 1), k)
    return c4k, hc, sorted(i_n)


def blowup_to_c4k(plan: SuperPlan, x: int, k: int) -> list[TwoFactor]:
    """Split ``F_x`` into k C_4k-factors, pairing offsets ``2d`` and ``2d+1`` on every super-edge."""
    pairs = sorted(plan.factor(x))
    return [_c4k([(a, b, 2 * d, 2 * d + 1) for a, b in pairs], k) for d in range(k)]


class TripleResult(NamedTuple):
    hamilton: list[TwoFactor]
    c4k: list[TwoFactor]
    one_factor: list[Edge]


def decompose_triple(plan: SuperPlan, r_1: int, k: int) -> TripleResult:
    """Split ``F_1 ∪ F_2 ∪ F_{2t-1} ∪ X`` into ``r_1`` HCs, ``4k-1-r_1`` C_4k-factors and a 1-factor.

    The 2k Hamilton paths of each K_4k in ``F_{2t-1} ∪ X`` are glued with the
    slot-aligned edges of ``(0,1)_0 ∪ (2,3)_0 ∪ ...`` into 2k Hamilton
    cycles.  What is left of ``H_0`` together with ``H_1`` becomes either one
    more HC (odd ``r_1``) or one C_4k-factor, plus the 1-factor.  The rest of
    the ``H_l`` go in pairs as in :func:`decompose_pair`.
    """
    t = plan.t
    q = 2 * k
    n = 2 * t * q
    if t < 2:
        raise ValueError("decompose_triple needs t >= 2")
    if not q <= r_1 <= 2 * q - 1:
        raise ValueError(f"r_1 must lie in [{q}, {2 * q - 1}], got {r_1}")

    paths = ham_path_decomp(q)
    glued: list[list[Edge]] = [[] for _ in range(q)]
    for a, b in sorted(plan.factor(2 * t - 1)):
        for j, path in enumerate(relabel(paths, endpoint_aligned_order(a, b, k))):
            glued[j].extend(Edge.of(path[x], path[x + 1]) for x in range(len(path) - 1))
    hamilton = []
    for j in range(q):
        edges = glued[j] + [Edge.of(2 * x * q + j, (2 * x + 1) * q + j) for x in range(t)]
        cycles = _trace_cycles(edges)
        if len(cycles) != 1 or len(cycles[0]) != n:
            raise ConstructionError(f"glued path family {j} is not a Hamilton cycle")
        hamilton.append(TwoFactor(HAMILTON, cycles))

    W = tuple(range(2 * t))
    c4k: list[TwoFactor] = []
    if r_1 % 2:
        offs = [1 if x % 2 == 0 else q - 1 for x in range(2 * t)]
        offs[-1] = 0
        hamilton.append(_hamilton(W, offs, k))
        one = [Matching(2 * j + 1, 2 * j + 2, 0) for j in range(t - 1)] + [Matching(2 * t - 1, 0, q - 1)]
    else:
        c4k.append(_c4k([(2 * j + 1, (2 * j + 2) % (2 * t), 0, q - 1) for j in range(t)], k))
        one = [Matching(2 * j, 2 * j + 1, 1) for j in range(t)]
    one_factor = sorted(e for m in one for e in expand_matching(m, k))

    n_hc_pairs = (r_1 - q - r_1 % 2) // 2
    for l in range(1, k):
        for f in _h_pair(W, l, l <= n_hc_pairs, k):
            (hamilton if f.kind == HAMILTON else c4k).append(f)
    return TripleResult(hamilton, c4k, one_factor)
