"""Pick a construction route for HW(4kt; r, s; 4kt, 4k) and assemble the certificate."""

from __future__ import annotations

import enum

from .classical import walecki_even, walecki_odd
from .constructions import (
    blowup_to_c4k,
    decompose_blocks,
    decompose_f1_with_matching,
    decompose_pair,
    decompose_triple,
    super_plan,
)
from .model import C4K, HAMILTON, Certificate, TwoFactor


class Support(enum.Enum):
    YES = "yes"
    UNSUPPORTED_BY_PAPER = "unsupported_by_paper"
    INVALID = "invalid"


class InvalidParameters(ValueError):
    pass


class UnsupportedParameters(ValueError):
    """The parameters are realizable, but only by constructions not implemented here.

    For ``t = 2`` (n = 8k) and odd ``3 <= r <= 2k-1`` existence rests on
    HW(n; r, s; 4, 2t) constructions.
    """


def supported(k: int, t: int, r: int) -> Support:
    if k < 1 or t < 1:
        return Support.INVALID
    n = 4 * k * t
    if not 0 <= r <= (n - 2) // 2:
        return Support.INVALID
    if t == 2 and r % 2 == 1 and 3 <= r <= 2 * k - 1:
        return Support.UNSUPPORTED_BY_PAPER
    return Support.YES


def greedy_split(total: int, slots: int, cap: int) -> list[int]:
    """Fill ``slots`` buckets of capacity ``cap`` left to right with ``total``."""
    if not 0 <= total <= slots * cap:
        raise ValueError(f"cannot split {total} over {slots} slots of capacity {cap}")
    out = []
    for _ in range(slots):
        take = min(cap, total)
        out.append(take)
        total -= take
    return out


def choose_r1(k: int, t: int, r: int) -> int:
    """Hamilton count taken from the triple ``F_1 ∪ F_2 ∪ F_{2t-1} ∪ X`` when ``r >= 2k``.

    ``2k + (r mod 2)`` while ``r <= 2kt - 2k``, else ``4k - 2 + (r mod 2)``;
    the remainder ``r - r_1`` then fits in the ``t-2`` other pairs.  For
    ``t = 2`` the triple is all of K_n and takes ``r`` itself.
    """
    if t == 2:
        r_1 = r
    elif r <= 2 * k * t - 2 * k:
        r_1 = 2 * k + r % 2
    else:
        r_1 = 4 * k - 2 + r % 2
    if not (2 * k <= r_1 <= 4 * k - 1 and 0 <= r - r_1 <= 2 * k * (t - 2)):
        raise ValueError(f"no admissible r_1 for k={k}, t={t}, r={r}")
    return r_1


def construct_hw(k: int, t: int, r: int) -> Certificate:
    """Certificate for HW(4kt; r, s; 4kt, 4k) with ``s = 2kt - 1 - r``.

    Raises:
        InvalidParameters: ``k, t < 1`` or ``r`` outside ``[0, (n-2)/2]``.
        UnsupportedParameters: ``t = 2`` and ``r`` odd in ``[3, 2k-1]``.
    """
    status = supported(k, t, r)
    n = 4 * k * t
    if status is Support.INVALID:
        raise InvalidParameters(f"need k, t >= 1 and 0 <= r <= (n-2)/2; got k={k}, t={t}, r={r}")
    if status is Support.UNSUPPORTED_BY_PAPER:
        raise UnsupportedParameters(
            f"n = 8k = {n} with odd r = {r} in [3, {2 * k - 1}] is only reachable through the 4-cycle and 2t-cycle constructions"
        )
    q = 2 * k

    if t == 1:
        hcs, leftover = walecki_even(q)
        factors = [TwoFactor(HAMILTON if x < r else C4K, [c]) for x, c in enumerate(hcs)]
        return Certificate.build(n, k, t, factors, leftover)

    plan = super_plan(t)
    factors: list[TwoFactor] = []
    if r >= q:
        r_1 = choose_r1(k, t, r)
        tri = decompose_triple(plan, r_1, k)
        factors += tri.hamilton + tri.c4k
        one_factor = tri.one_factor
        for i, r_i in zip(range(2, t), greedy_split(r - r_1, t - 2, q)):
            factors += decompose_pair(plan, i, r_i, k)
    elif r % 2 == 0:
        blocks, one_factor = decompose_blocks(plan, 2 * t - 1, False, k)
        factors += blocks
        for i, r_i in zip(range(1, t), greedy_split(r, t - 1, q)):
            factors += decompose_pair(plan, i, r_i, k)
    else:
        blocks, i_prime = decompose_blocks(plan, 2, True, k)
        c4k, hc, one_factor = decompose_f1_with_matching(plan, i_prime, k)
        factors += blocks + c4k + [hc]
        for i, r_i in zip(range(2, t), greedy_split(r - 1, t - 2, q)):
            factors += decompose_pair(plan, i, r_i, k)
        factors += blowup_to_c4k(plan, 2 * t - 1, k)
    return Certificate.build(n, k, t, factors, one_factor)


def construct_hamilton_only(n: int) -> Certificate:
    """Hamilton decomposition of K_n (n odd) or K_n minus a 1-factor (n even)."""
    if n < 3:
        raise InvalidParameters(f"need n >= 3, got {n}")
    if n % 2:
        factors = [TwoFactor(HAMILTON, [c]) for c in walecki_odd((n - 1) // 2)]
        return Certificate.build(n, None, None, factors)
    hcs, leftover = walecki_even(n // 2)
    return Certificate.build(n, None, None, [TwoFactor(HAMILTON, [c]) for c in hcs], leftover)
