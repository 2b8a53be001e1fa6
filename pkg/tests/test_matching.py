from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from hwfactor.matching import bipartite_c4k, chain_two_factor, expand_matching
from hwfactor.model import Matching, cycle_edges

from conftest import matching_edges, norm, oracle_cycle_lengths


def test_expand_examples():
    assert norm(expand_matching(Matching(0, 1, 0), 1)) == [(0, 2), (1, 3)]
    assert norm(expand_matching(Matching(0, 1, 1), 1)) == [(0, 3), (1, 2)]
    assert norm(expand_matching(Matching(1, 0, 1), 1)) == norm(expand_matching(Matching(0, 1, 1), 1))


@given(k=st.integers(1, 6), t=st.integers(1, 5), data=st.data())
def test_reversal_law(k, t, data):
    i, j = data.draw(st.lists(st.integers(0, 2 * t - 1), min_size=2, max_size=2, unique=True))
    d = data.draw(st.integers(0, 2 * k - 1))
    m = Matching(i, j, d)
    assert norm(expand_matching(m, k, t)) == norm(expand_matching(m.reversed(k), k, t))
    assert norm(expand_matching(m, k)) == norm(matching_edges(i, j, d, k))


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_offsets_partition_bipartite_graph(k):
    q = 2 * k
    edges = [e for d in range(q) for e in expand_matching(Matching(1, 3, d), k)]
    expected = sorted((q + x, 3 * q + y) for x in range(q) for y in range(q))
    assert norm(edges) == expected
    for d in range(q):
        ends = sorted(v for e in expand_matching(Matching(1, 3, d), k) for v in e)
        assert ends == sorted(list(range(q, 2 * q)) + list(range(3 * q, 4 * q)))


def test_expand_rejects_out_of_range_block():
    with pytest.raises(ValueError):
        expand_matching(Matching(0, 4, 0), 1, t=2)


def test_chain_examples():
    assert chain_two_factor((0, 1), (0, 1), 1) == [(0, 2, 1, 3)]
    with pytest.raises(ValueError):
        chain_two_factor((0, 1), (0, 0), 1)
    (cycle,) = chain_two_factor((0, 1, 2, 3), (0, 0, 0, 1), 1)
    assert len(cycle) == 8
    assert oracle_cycle_lengths(cycle_edges(cycle)) == [8]


def test_chain_rejects_non_permutation():
    with pytest.raises(ValueError):
        chain_two_factor((0, 2), (1, 0), 1)
    with pytest.raises(ValueError):
        chain_two_factor((0, 0, 1, 2), (1, 0, 0, 0), 1)


@settings(max_examples=200, deadline=None)
@given(k=st.integers(1, 6), t=st.integers(1, 5), data=st.data())
def test_gcd_law(k, t, data):
    q = 2 * k
    order = data.draw(st.permutations(list(range(2 * t))))
    offsets = data.draw(st.lists(st.integers(0, q - 1), min_size=2 * t, max_size=2 * t))
    total = sum(offsets) % q
    if t == 1 and total == 0:
        with pytest.raises(ValueError):
            chain_two_factor(order, offsets, k)
        return
    g = gcd(total, q)
    cycles = chain_two_factor(order, offsets, k)
    edges = [e for c in cycles for e in cycle_edges(c)]
    assert oracle_cycle_lengths(edges) == [2 * t * q // g] * g
    expected = []
    for x in range(2 * t):
        expected += matching_edges(order[x], order[(x + 1) % (2 * t)], offsets[x], k)
    assert norm(edges) == norm(expected)


def test_bipartite_c4k_examples():
    assert bipartite_c4k(0, 1, 1, 0, 1) == (0, 3, 1, 2)
    cycle = bipartite_c4k(0, 1, 0, 1, 2)
    assert sorted(cycle) == list(range(8))
    assert oracle_cycle_lengths(cycle_edges(cycle)) == [8]
    with pytest.raises(ValueError, match="coprime"):
        bipartite_c4k(0, 1, 0, 2, 2)


@given(k=st.integers(1, 6), data=st.data())
def test_bipartite_c4k_symmetric_in_offsets(k, data):
    q = 2 * k
    d2 = data.draw(st.integers(0, q - 1))
    step = data.draw(st.sampled_from([s for s in range(1, q) if gcd(s, q) == 1]))
    d1 = (d2 + step) % q
    a = bipartite_c4k(2, 5, d1, d2, k)
    b = bipartite_c4k(2, 5, d2, d1, k)
    assert norm(cycle_edges(a)) == norm(cycle_edges(b))
    assert norm(cycle_edges(a)) == norm(matching_edges(2, 5, d1, k) + matching_edges(2, 5, d2, k))
