import itertools

import pytest
from hypothesis import given, strategies as st

from qmull.mullclass import (classical_mullineux, enumerate_classification, hook_partition,
                             is_polynomial_hw, jl, jl_subsequence_check, l_rim, mullineux_columns,
                             mullineux_symbol, nonpoly_witness)
from qmull.qarith import INFINITY, CycloContext, eval_at_q, product, quantum_int
from qmull.weights import Weight, conjugate, enumerate_dominant, l_restricted_partitions, partitions

W = Weight.parse


def test_jl_examples():
    assert jl((3, 3), 3).x == (0, 0) and jl((3, 3), 3).j == 0
    assert jl((4, 2, 1), 2).x == (0, 1, 1)
    assert jl((5,), INFINITY).j == 1
    assert jl((0, 0), 5).j == 0
    assert jl((), 3).j == 0
    with pytest.raises(ValueError):
        jl((1,), 1)


def test_subsequence_check_examples():
    assert jl_subsequence_check((3, 3, 1), (1, 2), 3) == (False, False)
    assert jl_subsequence_check((2, 1), (1, 2), 3) == (False, False)
    assert jl_subsequence_check((1, 1), (1, 2), 3) == (True, True)
    assert jl_subsequence_check((2, 1), (2,), 3) == (True, True)
    for bad in ((2, 1), (0,), (4,)):
        with pytest.raises(ValueError):
            jl_subsequence_check((3, 3, 1), bad, 3)
    with pytest.raises(ValueError):
        jl_subsequence_check((1,), (1,), 3, CycloContext(5))


def test_polynomial_examples():
    assert is_polynomial_hw(W("0,0,0|3,3,0"), 3)
    assert not is_polynomial_hw(W("0,0|1,0"), 2)
    assert not is_polynomial_hw(W("1,0|1,0"), 2)
    assert is_polynomial_hw(W("1,1|1,0"), 2)
    with pytest.raises(ValueError):
        is_polynomial_hw(W("0,1|0"), 3)
    with pytest.raises(ValueError):
        is_polynomial_hw(W("0|-1"), 3)


def test_m_zero_convention():
    # with no even block every dominant weight is polynomial
    for l in (2, 3, INFINITY):
        for r in range(5):
            assert set(enumerate_classification(0, 3, r, l)) == set(enumerate_dominant(0, 3, r))


def test_witness_examples():
    w = nonpoly_witness(W("0,0|1,0"), 2)
    assert w.indices == (1,)
    assert w.weight == W("0,-1|2,0")
    w = nonpoly_witness(W("1,0|1,1"), 2)
    assert w.indices == (2,) and w.weight == W("1,-1|1,2")
    with pytest.raises(ValueError):
        nonpoly_witness(W("1,1|1,0"), 2)


def test_classification_small():
    assert [w.format() for w in enumerate_classification(1, 1, 1, 2)] == ["1|0"]
    # at l = infinity the polynomial weights of degree r biject with (m|n)-hook partitions of r
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        for r in range(8):
            got = sorted(hook_partition(w) for w in enumerate_classification(m, n, r, INFINITY))
            hooks = sorted(p for p in partitions(r) if len(p) <= m or p[m] <= n)
            assert got == hooks, (m, n, r)


def test_hook_partition_examples():
    assert hook_partition(W("2,1|2,0")) == (2, 1, 1, 1)
    assert hook_partition(W("0|0")) == ()


def test_witness_weights_exhaustive():
    """Each non-member gets a witness whose product is nonzero and whose weight has ``-1`` at ``m``."""
    count = 0
    for l in (2, 3, 4, 5):
        ctx = CycloContext.from_l(l)
        for m, n in [(1, 1), (2, 2), (1, 3), (3, 2)]:
            for r in range(6):
                for lam in enumerate_dominant(m, n, r):
                    if is_polynomial_hw(lam, l):
                        continue
                    w = nonpoly_witness(lam, l)
                    assert not eval_at_q(w.product, ctx).is_zero()
                    assert w.weight[m] == -1
                    assert len(w.indices) == lam[m] + 1
                    count += 1
    assert count > 100


# ------------------------------------------------------------------ rim stripping


def test_rim_examples():
    assert l_rim((5, 4, 2), 3) == [(1, 5), (1, 4), (2, 4), (3, 2), (3, 1)]
    assert mullineux_columns((5, 4, 2), 3) == ((5, 3), (3, 2), (3, 2))
    assert mullineux_symbol((2, 1), 3) == (1, 1, 1)
    with pytest.raises(ValueError):
        mullineux_symbol((3,), 3)
    with pytest.raises(ValueError):
        classical_mullineux((1, 1, 1), 3)


def _hooks(lam):
    lc = conjugate(lam)
    return [lam[i] - j + lc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_mullineux_known_cases(l):
    for r in range(10):
        for lam in l_restricted_partitions(r, l):
            img = mullineux_symbol(lam, l)
            assert sum(img) == r
            assert mullineux_symbol(img, l) == lam
            if l == 2:
                # tensoring with the sign module is trivial in this case
                assert img == lam
            if r < l or all(h % l for h in _hooks(lam)):
                # semisimple range and l-cores: the ordinary transpose
                assert img == conjugate(lam)


@given(st.integers(0, 9), st.integers(2, 7))
def test_jl_matches_subsequence_product(r, l):
    ctx = CycloContext.from_l(l)
    for lam in partitions(r, max_len=4):
        d = len(lam)
        for t in range(1, d + 1):
            for idx in itertools.combinations(range(1, d + 1), t):
                a, b = jl_subsequence_check(lam, idx, l)
                assert a == b
                vals = [lam[i - 1] for i in idx]
                prod = product(quantum_int(v + t - s) for s, v in enumerate(vals, start=1))
                assert b == (not eval_at_q(prod, ctx).is_zero())


@given(st.integers(0, 7), st.integers(2, 6))
def test_polynomial_is_monotone_in_even_tail(r, l):
    # raising lam_m can only help
    for lam in enumerate_dominant(2, 2, r):
        if is_polynomial_hw(lam, l):
            bumped = Weight((lam[1] + 1, lam[2] + 1) + lam.odd, lam.split)
            assert is_polynomial_hw(bumped, l)
