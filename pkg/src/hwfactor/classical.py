"""Classical Hamilton cycle and Hamilton path decompositions of complete graphs."""

from __future__ import annotations

from typing import Any, Sequence

from .model import Edge


def _zigzag(x: int, m: int, modulus: int) -> list[int]:
    seq = [x % modulus]
    for i in range(1, m):
        seq += [(x + i) % modulus, (x - i) % modulus]
    seq.append((x + m) % modulus)
    return seq


def _gk_factor(x: int, N: int, inf: int) -> list[tuple[int, int]]:
    # 1-factor F_x of K_{N+1} on Z_N + {inf}, N odd
    return [(inf, x % N)] + [((x - i) % N, (x + i) % N) for i in range(1, (N + 1) // 2)]


def _trace_from(edges: list[tuple[int, int]], start: int, first: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seq, prev, cur = [start], start, first
    while cur != start:
        seq.append(cur)
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
    return seq


def walecki_even(m: int) -> tuple[list[tuple[int, ...]], list[Edge]]:
    """Decompose K_2m minus a 1-factor into ``m-1`` Hamilton cycles.

    The leftover 1-factor is ``{(0, m)} ∪ {(p, 2m-p) : 1 <= p < m}`` and the
    first cycle is ``(0, 1, ..., 2m-1)``.  Every cycle is returned in a
    traversal order whose even-position edges form one 1-factor and whose
    odd-position edges form another.

    Built from the rotational 1-factorization ``F_x`` of K_2m on
    ``Z_{2m-1} ∪ {inf}``: the cycles are ``F_1 ∪ F_{-1}`` and
    ``F_{2c} ∪ F_{2c+1}`` for ``c = 1..m-2``; ``F_0`` is left over.  The map
    ``x -> -x`` fixes ``F_0`` and swaps ``F_1``, ``F_{-1}``, so it acts on
    the first cycle as a reflection through ``inf`` and ``0``.  Labelling
    vertices by their position on that cycle gives the stated form.
    """
    if m < 2:
        raise ValueError(f"walecki_even needs m >= 2, got {m}")
    N = 2 * m - 1
    inf = N
    pairs = [(1, N - 1)] + [(2 * c, 2 * c + 1) for c in range(1, m - 1)]
    raw = []
    for a, b in pairs:
        fa = _gk_factor(a, N, inf)
        raw.append(_trace_from(fa + _gk_factor(b, N, inf), inf, fa[0][1]))
    label = {v: p for p, v in enumerate(raw[0])}
    hcs = [tuple(label[v] for v in cyc) for cyc in raw]
    leftover = sorted(Edge.of(label[a], label[b]) for a, b in _gk_factor(0, N, inf))
    return hcs, leftover


def walecki_odd(m: int) -> list[tuple[int, ...]]:
    """Walecki's decomposition of K_{2m+1} into ``m`` Hamilton cycles.

    Vertex ``2m`` plays the role of the point at infinity; cycle ``x`` is
    ``2m`` followed by the zigzag ``x, x+1, x-1, ..., x+m`` over ``Z_2m``.
    """
    if m < 1:
        raise ValueError(f"walecki_odd needs m >= 1, got {m}")
    return [tuple([2 * m] + _zigzag(x, m, 2 * m)) for x in range(m)]


def ham_path_decomp(m: int) -> list[tuple[int, ...]]:
    """Decompose K_2m into ``m`` Hamilton paths; path ``j`` runs from ``j`` to ``j+m``."""
    if m < 1:
        raise ValueError(f"ham_path_decomp needs m >= 1, got {m}")
    return [tuple(_zigzag(j, m, 2 * m)) for j in range(m)]


def split_alternating(cycle: Sequence[int]) -> tuple[list[Edge], list[Edge]]:
    """Split an even cycle into the 1-factors at even and odd positions."""
    L = len(cycle)
    if L % 2:
        raise ValueError("odd cycle has no 1-factor split")
    edges = [Edge.of(cycle[x], cycle[(x + 1) % L]) for x in range(L)]
    return edges[0::2], edges[1::2]


def relabel(decomposition: Any, target_order: Sequence[int]) -> Any:
    """Map every vertex ``p`` in a nested decomposition to ``target_order[p]``.

    Tuples and lists keep their type; ``Edge`` leaves are re-canonicalized.
    """
    order = list(target_order)
    if len(set(order)) != len(order):
        raise ValueError("target_order is not a bijection")

    def walk(obj):
        if isinstance(obj, Edge):
            return Edge.of(order[obj.u], order[obj.v])
        if isinstance(obj, (list, tuple)):
            out = [walk(x) for x in obj]
            return tuple(out) if isinstance(obj, tuple) else out
        try:
            return order[obj]
        except IndexError:
            raise ValueError(f"vertex {obj} outside the domain of target_order") from None

    return walk(decomposition)


def leftover_aligned_order(i: int, j: int, k: int) -> list[int]:
    """Ordering of ``V_i ∪ V_j`` sending walecki_even's leftover onto ``(i, j)_0``."""
    q = 2 * k
    return [i * q + s for s in range(q)] + [j * q] + [j * q + (q - s) for s in range(1, q)]


def endpoint_aligned_order(i: int, j: int, k: int) -> list[int]:
    """Ordering of ``V_i ∪ V_j`` giving ham_path_decomp path ``s`` endpoints ``i_s``, ``j_s``."""
    q = 2 * k
    return [i * q + s for s in range(q)] + [j * q + s for s in range(q)]
