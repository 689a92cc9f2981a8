import itertools
import math

import pytest
from hypothesis import given, strategies as st

from qmull.weights import (INFINITY, Root, Weight, alpha, as_partition, componentwise_leq, conjugate,
                           dagger, enumerate_compositions, enumerate_dominant, is_restricted,
                           l_restricted_partitions, partitions, positive_roots, root_order_leq,
                           super_dagger, super_dot, unit)


def W(text):
    return Weight.parse(text)


def test_parse_and_format():
    w = W("2,1|0,3")
    assert w.split == (2, 2) and w.entries == (2, 1, 0, 3)
    assert w.even == (2, 1) and w.odd == (0, 3)
    assert w[4] == 3 and w.parity(2) == 0 and w.parity(3) == 1
    assert w.format() == "2,1|0,3"
    assert W("|").entries == () and W("|").format() == "|"
    assert W("|4").split == (0, 1)
    for bad in ("1,2", "1|2|3", "a|1"):
        with pytest.raises(ValueError):
            W(bad)
    with pytest.raises(ValueError):
        Weight((1, 2), (2, 1))


def test_super_dot_examples():
    split = (2, 2)
    assert super_dot(unit(1, split), unit(1, split)) == 1
    assert super_dot(unit(3, split), unit(3, split)) == -1
    assert super_dot(W("2,1|0,0"), alpha(1, 3, split)) == 2
    with pytest.raises(ValueError):
        super_dot(W("1|0"), W("1,0|"))


def test_root_order_examples():
    lam = W("1,0|0,0")
    assert root_order_leq(lam, lam)
    assert root_order_leq(W("0,1|0,0"), lam)
    assert root_order_leq(W("0,0|1,0"), lam)
    assert not root_order_leq(lam, W("0,0|1,0"))


def test_componentwise_examples():
    assert componentwise_leq((0, 0), (1, 0))
    assert not componentwise_leq((2, 0), (1, 3))
    assert componentwise_leq((1, 1), (1, 1))


def test_daggers():
    assert dagger((1, 2, 3)) == (3, 2, 1)
    assert dagger(()) == ()
    d = super_dagger(W("1,2|3"))
    assert d.entries == (3, 2, 1) and d.split == (1, 2)
    assert super_dagger(W("|")) == W("|")


def test_enumerators_examples():
    assert [w.format() for w in enumerate_compositions(1, 1, 1)] == ["1|0", "0|1"]
    assert [w.entries for w in enumerate_compositions(1, 0, 0)] == [(0,)]
    assert len(list(enumerate_compositions(2, 0, 2))) == 3
    assert {w.format() for w in enumerate_dominant(1, 1, 1)} == {"1|0", "0|1"}
    assert {w.format() for w in enumerate_dominant(2, 1, 2)} == {"2,0|0", "1,1|0", "1,0|1", "0,0|2"}
    assert [w.format() for w in enumerate_dominant(2, 2, 0)] == ["0,0|0,0"]
    assert set(l_restricted_partitions(3, 2)) == {(2, 1), (1, 1, 1)}
    assert len(list(l_restricted_partitions(3, INFINITY))) == 3
    assert list(l_restricted_partitions(0, 4)) == [()]


def test_partition_helpers():
    assert as_partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        as_partition((1, 2))
    assert conjugate((3, 1)) == (2, 1, 1)
    assert not is_restricted((3,), 3) and is_restricted((2, 1), 2)
    assert [len(list(partitions(r))) for r in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_roots():
    roots = positive_roots(2, 1)
    assert roots == [Root(1, 2), Root(1, 3), Root(2, 3)]
    assert [r.parity(2) for r in roots] == [0, 1, 1]
    assert alpha(2, 3, (2, 1)).entries == (0, 1, -1)
    with pytest.raises(ValueError):
        alpha(1, 1, (2, 1))


# ------------------------------------------------------------------ properties


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 0), (0, 3)])
def test_composition_count(m, n):
    for r in range(6):
        got = list(enumerate_compositions(m, n, r))
        assert len(got) == len(set(got)) == math.comb(r + m + n - 1, m + n - 1)
        assert all(w.degree() == r and w.is_composition() for w in got)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (0, 2), (2, 0)])
def test_dominant_count_by_double_enumeration(m, n):
    for r in range(7):
        want = sum(1 for k in range(r + 1)
                   for _ in partitions(k, max_len=m) for _ in partitions(r - k, max_len=n))
        got = list(enumerate_dominant(m, n, r))
        brute = [w for w in enumerate_compositions(m, n, r) if w.is_dominant()]
        assert len(got) == want == len(brute)
        assert set(got) == set(brute)


def test_order_relations_exhaustive():
    for r in range(5):
        ws = list(enumerate_compositions(2, 1, r))
        for mu, lam in itertools.product(ws, ws):
            diff = [a - b for a, b in zip(lam, mu)]
            prefix_ok = all(sum(diff[:k]) >= 0 for k in range(1, 4))
            assert root_order_leq(mu, lam) == prefix_ok
            assert componentwise_leq(mu.entries, lam.entries) == all(d >= 0 for d in diff)
    # componentwise order does not imply root order across degrees, nor the reverse
    assert componentwise_leq((0, 0, 0), (1, 0, 0)) and not root_order_leq(W("0,0|0"), W("1,0|0"))
    assert root_order_leq(W("0,1|0"), W("1,0|0")) and not componentwise_leq((0, 1, 0), (1, 0, 0))


vectors = st.lists(st.integers(-5, 5), max_size=8)


@given(vectors)
def test_dagger_involution(v):
    assert dagger(dagger(v)) == tuple(v)


@given(st.lists(st.integers(0, 5), max_size=4), st.lists(st.integers(0, 5), max_size=4))
def test_super_dagger_involution(even, odd):
    w = Weight.from_blocks(even, odd)
    d = super_dagger(w)
    assert d.split == (w.n, w.m)
    assert super_dagger(d) == w


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_super_dot_bilinear_symmetric(a, b):
    x, y = Weight(a, (1, 2)), Weight(b, (1, 2))
    assert super_dot(x, y) == super_dot(y, x)
    assert super_dot(x + y, y) == super_dot(x, y) + super_dot(y, y)


@given(st.integers(0, 9))
def test_conjugate_involution(r):
    for p in partitions(r):
        assert conjugate(conjugate(p)) == p
        assert sum(conjugate(p)) == r
