"""Engine results checked through highest weight vectors found numerically in tensor powers.

Any vector ``u`` of weight ``lam`` killed by all ``E_i`` receives a module map from
the Verma module with ``m_lam -> u``; so ``X m_lam = sum_B c_B F_B m_lam`` forces
``X u = sum_B c_B F_B u`` in the tensor power.
"""
import random

import numpy as np
import pytest

from matrix_oracle import hw_vectors, rep, weight_of
from qmull.pbw.engine import Engine, HWVector, RewriteLimitExceeded, UElement
from qmull.pbw.symbols import CartanBinom, CartanPow, RootPow, Split
from qmull.pbw.verify import root_vector
from qmull.qarith import ONE, CycloContext, gauss_binom, vpow


def _symbols(m, n, raising=True, lowering=True, cartan=True):
    sp = Split(m, n)
    N = m + n
    out = []
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if a == b or (a < b and not raising) or (a > b and not lowering):
                continue
            for M in ((1,) if sp.root_parity(a, b) else (1, 2)):
                out.append(RootPow(a, b, M))
    if cartan:
        out += [CartanPow(j, d) for j in range(1, N + 1) for d in (1, -1)]
        out += [CartanBinom(j, None, 1, 1) for j in range(1, N + 1)]
        out += [CartanBinom(1, N, 0, 1)]
    return out


def _apply(R, word, u):
    return R.word(word).dot(u) % R.p


def _image(R, vec: HWVector, u):
    out = np.zeros(R.dim, dtype=np.int64)
    for B, c in vec.terms.items():
        out = (out + R.poly(c) * _apply(R, B, u)) % R.p
    return out


@pytest.mark.parametrize("m,n,k", [(2, 0, 5), (3, 0, 4), (1, 1, 4), (2, 1, 4), (1, 2, 4), (2, 2, 3), (0, 2, 4)])
def test_act_matches_highest_weight_vectors(m, n, k):
    R = rep(m, n, k)
    eng = Engine(m, n)
    rng = random.Random(1000 * m + n)
    syms = _symbols(m, n)
    found = []
    for lam in sorted({weight_of(b, m + n) for b in R.basis}):
        us = hw_vectors(R, lam)
        if us:
            found.append((lam, us))
    assert len(found) >= 2
    for lam, us in found:
        for _ in range(40):
            u = us[rng.randrange(len(us))]
            word = tuple(rng.choice(syms) for _ in range(rng.randint(1, 4)))
            vec = eng.act_on_hw(word, lam)
            assert np.array_equal(_apply(R, word, u), _image(R, vec, u)), (lam, word)


@pytest.mark.parametrize("m,n,k", [(2, 0, 3), (1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 2, 2)])
def test_normalize_matches_matrices(m, n, k):
    R = rep(m, n, k)
    eng = Engine(m, n)
    rng = random.Random(7 * m + n)
    syms = _symbols(m, n)
    for _ in range(80):
        word = tuple(rng.choice(syms) for _ in range(rng.randint(2, 4)))
        norm = eng.normalize(UElement.word(Split(m, n), word))
        assert np.array_equal(R.word(word), R.terms([(c, w) for w, c in norm.terms.items()])), word


def test_normal_form_order():
    eng = Engine(2, 1)
    sp = Split(2, 1)
    norm = eng.normalize(UElement.word(sp, (RootPow(1, 2, 1), CartanPow(1, 1), RootPow(2, 1, 1))))
    rank = {True: 2, False: 0}
    for word in norm.terms:
        ranks = [1 if type(s) is not RootPow else rank[s.a < s.b] for s in word]
        assert ranks == sorted(ranks), word


def test_act_on_hw_examples():
    eng = Engine(1, 1)
    lam = (1, 0)
    for M in (1, 2):
        assert eng.act_on_hw((RootPow(1, 2, 1),), lam).is_zero()
        assert Engine(2, 0).act_on_hw((RootPow(1, 2, M),), (3, 1)).is_zero()
    v = eng.act_on_hw((CartanPow(1, 1),), (3, 0))
    assert v.terms == {(): vpow(3)}
    v = eng.act_on_hw((CartanPow(2, 1),), (0, 3))
    assert v.terms == {(): vpow(-3)}
    v = eng.act_on_hw((RootPow(1, 2, 1), RootPow(2, 1, 1)), lam)
    assert v.terms == {(): ONE}
    # odd divided squares vanish
    assert eng.act_on_hw((RootPow(2, 1, 1), RootPow(2, 1, 1)), (2, 2)).is_zero()


def test_act_at_q():
    eng = Engine(2, 0)
    word = (RootPow(1, 2, 2), RootPow(2, 1, 2))
    v = eng.act_on_hw(word, (3, 0))
    assert v.top_coefficient() == gauss_binom(3, 2)
    assert eng.act_on_hw(word, (3, 0), CycloContext(3)) == {}


def test_root_vector_expansion():
    sp = Split(3, 0)
    assert root_vector(1, 2, sp) == UElement.word(sp, (RootPow(1, 2, 1),))
    assert root_vector(2, 1, sp) == UElement.word(sp, (RootPow(2, 1, 1),))
    want = (UElement.word(sp, (RootPow(1, 2, 1), RootPow(2, 3, 1)))
            - UElement.word(sp, (RootPow(2, 3, 1), RootPow(1, 2, 1))).scale(vpow(-1)))
    assert root_vector(1, 3, sp) == want
    with pytest.raises(ValueError):
        root_vector(2, 2, sp)


@pytest.mark.parametrize("m,n", [(3, 0), (2, 1), (1, 2), (2, 2)])
def test_root_vectors_against_recursion(m, n):
    """The engine's single root symbol equals the expanded commutator after normalizing."""
    eng = Engine(m, n)
    sp = Split(m, n)
    N = m + n
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if abs(a - b) < 2:
                continue
            got = eng.normalize(root_vector(a, b, sp))
            assert got == UElement.word(sp, (RootPow(a, b, 1),)), (a, b)


def test_step_limit():
    eng = Engine(3, 0, step_limit=1)
    word = (RootPow(1, 3, 2), RootPow(3, 1, 2), RootPow(1, 2, 1), RootPow(2, 1, 1))
    with pytest.raises(RewriteLimitExceeded):
        eng.normalize(UElement.word(Split(3, 0), word))


def test_weight_mismatch():
    with pytest.raises(ValueError):
        Engine(2, 1).act_on_hw((RootPow(1, 2, 1),), (1, 0))
