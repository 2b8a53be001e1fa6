"""Hot loops of the verifier: cycle tracing and edge multiplicity.

Each kernel has a numba ``@njit`` version and a pure-numpy version.  The
numba path is used when numba imports and ``HWFACTOR_DISABLE_NUMBA`` is unset
(or ``0``); otherwise the numpy path.  Both return identical results.
"""

from __future__ import annotations

import os

import numpy as np

_flag = os.environ.get("HWFACTOR_DISABLE_NUMBA", "")
try:
    if _flag not in ("", "0"):
        raise ImportError("disabled by HWFACTOR_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _cycle_lengths_py(edges, nv):
    # returns (lengths, bad_vertex); bad_vertex = -1 when all degrees are 2
    deg = np.zeros(nv, np.int64)
    nbr = np.full((nv, 2), -1, np.int64)
    for e in range(edges.shape[0]):
        a = edges[e, 0]
        b = edges[e, 1]
        if deg[a] < 2:
            nbr[a, deg[a]] = b
        deg[a] += 1
        if deg[b] < 2:
            nbr[b, deg[b]] = a
        deg[b] += 1
    for v in range(nv):
        if deg[v] != 2:
            return np.zeros(0, np.int64), v
    seen = np.zeros(nv, np.bool_)
    lengths = np.zeros(nv, np.int64)
    nc = 0
    for s in range(nv):
        if seen[s]:
            continue
        seen[s] = True
        prev = s
        cur = nbr[s, 0]
        length = 1
        while cur != s:
            seen[cur] = True
            length += 1
            nxt = nbr[cur, 0] if nbr[cur, 0] != prev else nbr[cur, 1]
            prev = cur
            cur = nxt
        lengths[nc] = length
        nc += 1
    out = np.sort(lengths[:nc])
    return out, -1


def _edge_multiplicity_py(edges, n):
    counts = np.zeros((n, n), np.int64)
    for e in range(edges.shape[0]):
        counts[edges[e, 0], edges[e, 1]] += 1
    return counts


def cycle_lengths_numpy(edges: np.ndarray, nv: int) -> tuple[np.ndarray, int]:
    """Component cycle lengths by vectorized min-label propagation."""
    edges = np.asarray(edges, np.int64).reshape(-1, 2)
    flat = edges.ravel()
    deg = np.bincount(flat, minlength=nv)
    bad = np.flatnonzero(deg != 2)
    if bad.size:
        return np.zeros(0, np.int64), int(bad[0])
    # two incident edge slots per vertex, each naming the other endpoint
    order = np.argsort(flat, kind="stable")
    other = np.column_stack([edges[:, 1], edges[:, 0]]).ravel()[order].reshape(nv, 2)
    labels = np.arange(nv)
    while True:
        new = np.minimum(labels, np.minimum(labels[other[:, 0]], labels[other[:, 1]]))
        new = new[new]
        if np.array_equal(new, labels):
            break
        labels = new
    sizes = np.bincount(labels, minlength=nv)
    return np.sort(sizes[sizes > 0]).astype(np.int64), -1


def edge_multiplicity_numpy(edges: np.ndarray, n: int) -> np.ndarray:
    edges = np.asarray(edges, np.int64).reshape(-1, 2)
    keys = edges[:, 0] * n + edges[:, 1]
    return np.bincount(keys, minlength=n * n).reshape(n, n)


if HAVE_NUMBA:
    cycle_lengths_numba = njit(cache=False)(_cycle_lengths_py)
    edge_multiplicity_numba = njit(cache=False)(_edge_multiplicity_py)


def cycle_lengths(edges, nv: int) -> tuple[np.ndarray, int]:
    """Sorted cycle lengths of a graph on ``0..nv-1``, or the first vertex of degree != 2.

    ``edges`` is an ``(m, 2)`` integer array.  Returns ``(lengths, -1)`` on
    success and ``(empty, v)`` when vertex ``v`` has degree other than 2.
    """
    edges = np.ascontiguousarray(edges, np.int64).reshape(-1, 2)
    if HAVE_NUMBA:
        return cycle_lengths_numba(edges, nv)
    return cycle_lengths_numpy(edges, nv)


def edge_multiplicity(edges, n: int) -> np.ndarray:
    """``counts[u, v]`` = number of occurrences of edge ``(u, v)``, ``u < v`` expected."""
    edges = np.ascontiguousarray(edges, np.int64).reshape(-1, 2)
    if HAVE_NUMBA:
        return edge_multiplicity_numba(edges, n)
    return edge_multiplicity_numpy(edges, n)


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
