"""Independent certificate checker.

Trusts nothing from the constructors: edges are re-derived from the cycle
vertex sequences and the cycle structure is recomputed from those edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .model import C4K, HAMILTON, Certificate

CHECKS = (
    "header",
    "spanning",
    "hamilton",
    "c4k",
    "one_factor",
    "edge_partition",
    "counts",
)


class DegreeError(ValueError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 2")
        self.vertex = vertex
        self.degree = degree


def component_cycle_lengths(edges) -> list[int]:
    """Sorted cycle lengths of a 2-regular edge set.

    Only vertices touched by ``edges`` are considered.

    Raises:
        DegreeError: for the first (smallest) touched vertex whose degree is not 2.
    """
    arr = np.asarray(edges, np.int64).reshape(-1, 2)
    if arr.size == 0:
        return []
    verts, compact = np.unique(arr, return_inverse=True)
    compact = compact.reshape(-1, 2)
    lengths, bad = _kernels.cycle_lengths(compact, len(verts))
    if bad >= 0:
        deg = int(np.count_nonzero(compact == bad))
        raise DegreeError(int(verts[bad]), deg)
    return [int(x) for x in lengths]


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    messages: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.messages.append(msg)


@dataclass
class Report:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = []
        for x, c in enumerate(self.checks, 1):
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"({x}) {c.name:<15} {status}")
            lines.extend(f"      {m}" for m in c.messages[:10])
            if len(c.messages) > 10:
                lines.append(f"      ... {len(c.messages) - 10} more")
        lines.append("certificate " + ("VALID" if self.ok else "INVALID"))
        return "\n".join(lines)


def _cycle_pairs(cycle) -> list[tuple[int, int]]:
    m = len(cycle)
    return [(cycle[x], cycle[(x + 1) % m]) for x in range(m)]


def verify_certificate(cert: Certificate) -> Report:
    """Run all seven checks to completion and report every failure."""
    res = {name: CheckResult(name) for name in CHECKS}
    n = cert.n
    valid_n = isinstance(n, int) and n >= 1

    hdr = res["header"]
    if not valid_n:
        hdr.fail(f"n={n!r} is not a positive integer")
    else:
        if cert.k is not None or cert.t is not None:
            if cert.k is None or cert.t is None or cert.k < 1 or cert.t < 1:
                hdr.fail(f"k={cert.k}, t={cert.t}: both must be positive or both null")
            elif n != 4 * cert.k * cert.t:
                hdr.fail(f"n={n} != 4kt = {4 * cert.k * cert.t}")
        elif cert.s != 0:
            hdr.fail(f"s={cert.s} but the header has no k (Hamilton-only)")
        if cert.r < 0 or cert.s < 0 or cert.r + cert.s != (n - 1) // 2:
            hdr.fail(f"r + s = {cert.r + cert.s}, expected {(n - 1) // 2}")

    k = cert.k if isinstance(cert.k, int) and cert.k >= 1 else None
    all_edges: list[tuple[int, int]] = []
    n_ham = n_c4k = 0
    for idx, f in enumerate(cert.factors):
        label = f"factor {idx} ({f.kind})"
        if f.kind == HAMILTON:
            n_ham += 1
        elif f.kind == C4K:
            n_c4k += 1
        pairs = [p for c in f.cycles for p in _cycle_pairs(c)]
        verts = [v for c in f.cycles for v in c]
        ok_range = valid_n and all(0 <= v < n for v in verts)
        if not ok_range:
            res["spanning"].fail(f"{label}: vertex ids outside [0, {n})")
        elif sorted(verts) != list(range(n)) or any(len(c) < 3 for c in f.cycles):
            missing = sorted(set(range(n)) - set(verts))
            res["spanning"].fail(f"{label}: not a spanning set of disjoint cycles (missing {missing[:5]})")
        lengths = None
        if ok_range and pairs:
            try:
                lengths = component_cycle_lengths(pairs)
                if sum(lengths) != n:
                    res["spanning"].fail(f"{label}: covers {sum(lengths)} of {n} vertices")
            except DegreeError as exc:
                res["spanning"].fail(f"{label}: {exc}")
        if f.kind == HAMILTON and lengths != [n]:
            res["hamilton"].fail(f"{label}: component lengths {lengths}, expected [{n}]")
        if f.kind == C4K:
            if k is None:
                res["c4k"].fail(f"{label}: c4k factor but header has no k")
            elif lengths is None or any(x != 4 * k for x in lengths):
                res["c4k"].fail(f"{label}: component lengths {lengths}, expected all {4 * k}")
        all_edges.extend((min(a, b), max(a, b)) for a, b in pairs)

    of = res["one_factor"]
    if valid_n and n % 2 == 0:
        if cert.one_factor is None:
            of.fail("n is even but one_factor is missing")
        else:
            ends = [v for e in cert.one_factor for v in e]
            if len(cert.one_factor) != n // 2 or sorted(ends) != list(range(n)):
                of.fail(f"{len(cert.one_factor)} edges do not form a perfect matching of K_{n}")
            all_edges.extend((min(a, b), max(a, b)) for a, b in cert.one_factor)
    elif cert.one_factor:
        of.fail("n is odd but a one_factor is present")

    part = res["edge_partition"]
    if not valid_n:
        part.fail("cannot check without a valid n")
    else:
        bad = [e for e in all_edges if not (0 <= e[0] < e[1] < n)]
        for e in bad[:5]:
            part.fail(f"edge {e} is not an edge of K_{n}")
        good = np.array([e for e in all_edges if 0 <= e[0] < e[1] < n], np.int64).reshape(-1, 2)
        counts = _kernels.edge_multiplicity(good, n)
        upper = np.triu(np.ones((n, n), bool), 1)
        dup = np.argwhere((counts > 1) & upper)
        miss = np.argwhere((counts == 0) & upper)
        for u, v in dup[:10]:
            part.fail(f"edge ({u}, {v}) appears {counts[u, v]} times")
        for u, v in miss[:10]:
            part.fail(f"edge ({u}, {v}) is missing")
        if len(all_edges) != n * (n - 1) // 2 and part.passed:
            part.fail(f"{len(all_edges)} edges, expected {n * (n - 1) // 2}")

    cnt = res["counts"]
    if n_ham != cert.r:
        cnt.fail(f"{n_ham} hamilton factors, header says r={cert.r}")
    if n_c4k != cert.s:
        cnt.fail(f"{n_c4k} c4k factors, header says s={cert.s}")
    return Report([res[name] for name in CHECKS])
