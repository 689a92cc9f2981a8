import pytest
from hypothesis import given, strategies as st

from qmull.mullclass import mullineux_symbol
from qmull.serganova import (embed_x, embed_y, mull_via_serganova, odd_schedule, serganova_tilde,
                             sigma_weight)
from qmull.weights import INFINITY, Weight, conjugate, enumerate_dominant, l_restricted_partitions, partitions

W = Weight.parse


def test_schedule():
    assert odd_schedule(2, 2) == [(2, 3), (1, 3), (2, 4), (1, 4)]
    assert odd_schedule(0, 3) == [] and odd_schedule(2, 0) == []
    assert len(odd_schedule(3, 4)) == 12


def test_tilde_example():
    tr = serganova_tilde(W("2,1,0|0,0,0"), 3)
    assert tr.applied() == [2, 6, 9]
    assert tr.final == W("0,0,0|1,1,1")
    js = tr.to_json()
    assert js["tilde"] == "0,0,0|1,1,1" and len(js["steps"]) == 9
    assert "steps" not in tr.to_json(with_steps=False)


def test_mull_examples():
    assert mull_via_serganova((2, 1), 3) == (1, 1, 1)
    assert mull_via_serganova((), 3) == ()
    out, tr = mull_via_serganova((1,), 2, trace=True)
    assert out == (1,) and tr.start == W("1|0")
    with pytest.raises(ValueError):
        mull_via_serganova((3,), 3)


def test_infinity_gives_transpose():
    for r in range(7):
        for lam in partitions(r):
            assert mull_via_serganova(lam, INFINITY) == conjugate(lam)


def test_embeddings():
    assert embed_x((2, 1), 3, 2) == W("2,1,0|0,0")
    assert embed_y((1,), 1, 2) == W("0|1,0")
    with pytest.raises(ValueError):
        embed_x((1, 1, 1), 2, 2)


def test_sigma():
    assert sigma_weight(W("2,1,0|0,0,0"), 3) == W("1,1,1|0,0,0")
    with pytest.raises(ValueError):
        sigma_weight(W("1,0|0"), 3)


def test_errors():
    with pytest.raises(ValueError):
        serganova_tilde(W("0,1|0"), 3)
    with pytest.raises(ValueError):
        serganova_tilde(W("1|0"), 1)


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6])
def test_two_routes_agree(l):
    for r in range(8):
        for lam in l_restricted_partitions(r, l):
            assert mull_via_serganova(lam, l) == mullineux_symbol(lam, l)


@given(st.integers(0, 6), st.sampled_from([2, 3, 4, 5, INFINITY]))
def test_tilde_conserves_degree(r, l):
    for lam in enumerate_dominant(2, 2, r):
        tr = serganova_tilde(lam, l)
        for step in tr.steps:
            assert sum(step.weight.entries) == r
            # a skipped step leaves the weight alone
            if not step.applied:
                prev = tr.start if step.k == 1 else tr.steps[step.k - 2].weight
                assert prev == step.weight


def test_generic_q_example():
    tr = serganova_tilde(W("1,0|0,0"), INFINITY)
    assert tr.applied() == [2] and tr.final == W("0,0|1,0")


@pytest.mark.parametrize("l", [2, 3, 5, INFINITY])
def test_sigma_of_polynomial_weights(l):
    """Polynomial weights twist to polynomial weights; for the rest dominance is only counted."""
    from qmull.mullclass import is_polynomial_hw
    other = dominant = 0
    for n in range(1, 4):
        for r in range(5):
            for lam in enumerate_dominant(n, n, r):
                s = sigma_weight(lam, l)
                if is_polynomial_hw(lam, l):
                    assert s.is_dominant() and s.is_composition() and is_polynomial_hw(s, l), (lam, s)
                else:
                    other += 1
                    dominant += s.is_dominant()
    assert dominant <= other
