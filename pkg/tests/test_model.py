import pytest
from hypothesis import given, strategies as st

from hwfactor.model import (
    C4K,
    HAMILTON,
    Certificate,
    Edge,
    Matching,
    Params,
    TwoFactor,
    canonical_cycle,
    decode,
    encode,
)


@pytest.mark.parametrize("i, l, k, expected", [(0, 0, 1, 0), (3, 1, 1, 7), (2, 5, 3, 17)])
def test_encode_examples(i, l, k, expected):
    assert encode(i, l, k) == expected
    assert decode(expected, k) == (i, l)


@pytest.mark.parametrize("i, l, k, t", [(0, 2, 1, 1), (2, 0, 1, 1), (-1, 0, 2, 3), (0, -1, 2, 3)])
def test_encode_rejects_out_of_range(i, l, k, t):
    with pytest.raises(ValueError):
        encode(i, l, k, t)


@given(k=st.integers(1, 8), t=st.integers(1, 8), data=st.data())
def test_encode_decode_round_trip(k, t, data):
    i = data.draw(st.integers(0, 2 * t - 1))
    l = data.draw(st.integers(0, 2 * k - 1))
    assert decode(encode(i, l, k, t), k) == (i, l)


@given(st.integers(0, 100), st.integers(0, 100))
def test_edge_canonical(a, b):
    if a == b:
        with pytest.raises(ValueError):
            Edge.of(a, b)
    else:
        assert Edge.of(a, b) == Edge.of(b, a)
        assert Edge.of(a, b).u < Edge.of(a, b).v


def test_matching_rejects_same_block():
    with pytest.raises(ValueError):
        Matching(2, 2, 0)


def test_matching_reversed():
    assert Matching(0, 1, 1).reversed(3) == Matching(1, 0, 5)


def test_params_derived_fields():
    p = Params(k=2, t=3, r=7)
    assert (p.n, p.s) == (24, 4)
    with pytest.raises(ValueError):
        Params(k=1, t=3, r=6)


def test_canonical_cycle():
    assert canonical_cycle((3, 0, 2, 1)) == (0, 2, 1, 3)
    assert canonical_cycle((3, 0, 1, 2)) == (0, 1, 2, 3)
    assert canonical_cycle((5, 4, 0, 1, 2, 3)) == (0, 1, 2, 3, 5, 4)
    assert canonical_cycle((1, 0, 4, 3, 2)) == (0, 1, 2, 3, 4)
    assert canonical_cycle((2, 0, 1)) == (0, 1, 2)
    assert canonical_cycle((0, 2, 1)) == (0, 1, 2)


@given(st.permutations(list(range(12))), st.sampled_from([3, 4, 6, 12]))
def test_two_factor_check(perm, length):
    cycles = [perm[x : x + length] for x in range(0, 12, length)]
    kind = HAMILTON if length == 12 else C4K
    k = length // 4 if length % 4 == 0 else None
    f = TwoFactor(kind, cycles)
    assert f.check(12, k) == (length == 12 or length % 4 == 0)
    # dropping a vertex breaks spanning
    broken = TwoFactor(kind, [cycles[0][1:]] + cycles[1:])
    assert not broken.check(12, k)


def test_certificate_build_orders_hamilton_first():
    f1 = TwoFactor(C4K, [(0, 1, 2, 3)])
    f2 = TwoFactor(HAMILTON, [(0, 2, 1, 3)])
    cert = Certificate.build(4, 1, 1, [f1, f2], [(3, 1)])
    assert [f.kind for f in cert.factors] == [HAMILTON, C4K]
    assert (cert.r, cert.s) == (1, 1)
    assert cert.one_factor == (Edge(1, 3),)
