import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from qmull.qarith import (INFINITY, ONE, V, CycloContext, LaurentPoly, eval_at_q, gauss_binom,
                          is_zero_at_q, lucas_nonzero, q_a_power, quantum_factorial, quantum_int,
                          vpow)


def poly(d):
    return LaurentPoly(d)


def at_root(p: LaurentPoly, lprime: int) -> complex:
    z = cmath.exp(2j * math.pi / lprime)
    return sum(a * z ** e for e, a in p.items())


# ---------------------------------------------------------------- examples


def test_quantum_int_examples():
    assert quantum_int(1) == ONE
    assert quantum_int(0).is_zero()
    assert quantum_int(3) == poly({2: 1, 0: 1, -2: 1})
    assert quantum_int(-3) == -quantum_int(3)


def test_gauss_binom_examples():
    assert gauss_binom(7, 0) == ONE
    assert gauss_binom(2, 1) == quantum_int(2) == V + vpow(-1)
    # [-1 brack 2] = (-1)^2 [2 brack 2]
    assert gauss_binom(-1, 2) == ONE
    with pytest.raises(ValueError):
        gauss_binom(3, -1)


def test_eval_and_zero_examples():
    ctx3 = CycloContext(3)
    assert ctx3.l == 3
    assert eval_at_q(quantum_int(3), ctx3).is_zero()
    assert eval_at_q(ONE, ctx3) == 1
    assert is_zero_at_q(quantum_int(3), ctx3)
    assert not is_zero_at_q(quantum_int(1), ctx3)
    assert is_zero_at_q(gauss_binom(2, 1), CycloContext(4))
    with pytest.raises(ValueError):
        eval_at_q(ONE, CycloContext(3, 7))


def test_lucas_examples():
    assert not lucas_nonzero(5, 1, CycloContext(5))
    assert lucas_nonzero(9, 0, CycloContext(7))
    assert not lucas_nonzero(4, 2, CycloContext(3))
    assert eval_at_q(gauss_binom(4, 2), CycloContext(3)).is_zero()
    with pytest.raises(ValueError):
        lucas_nonzero(2, 3, CycloContext(3))


def test_q_a_power_examples():
    assert q_a_power(1, 1, (2, 1)) == V
    assert q_a_power(3, 1, (2, 1)) == vpow(-1)
    assert q_a_power(3, -2, (2, 1)) == vpow(2)
    with pytest.raises(IndexError):
        q_a_power(4, 1, (2, 1))


def test_context_rules():
    assert CycloContext(6).l == 3
    assert CycloContext(7).l == 7
    assert CycloContext().l == INFINITY
    assert CycloContext.from_l(2).l_prime == 4
    assert CycloContext.from_l(5).l_prime == 5
    for bad in (dict(l_prime=2), dict(l_prime=5, field_char=2), dict(l_prime=5, field_char=9),
                dict(l_prime=6, field_char=3)):
        with pytest.raises(ValueError):
            CycloContext(**bad)
    assert CycloContext().divides(0) and not CycloContext().divides(5)


# ---------------------------------------------------------------- oracles


def test_gauss_binom_matches_modular_product():
    """Evaluate the defining quotient of quantum integers in F_p and compare."""
    p = 1_000_003
    for x in (2, 5, 12345):
        vinv = pow(x, -1, p)

        def qi(i):
            num = (pow(x, i, p) - pow(vinv, i, p)) % p if i >= 0 else -(pow(x, -i, p) - pow(vinv, -i, p)) % p
            return num * pow((x - vinv) % p, -1, p) % p

        for s in range(-8, 15):
            for t in range(0, 8):
                num = den = 1
                for i in range(1, t + 1):
                    num = num * qi(s - i + 1) % p
                    den = den * qi(i) % p
                want = num * pow(den, -1, p) % p
                assert gauss_binom(s, t).evaluate_mod(x, p) == want, (s, t, x)


@pytest.mark.parametrize("lprime", range(3, 13))
def test_zero_test_matches_complex_evaluation(lprime):
    ctx = CycloContext(lprime)
    for s in range(0, 25):
        for t in range(0, s + 1):
            g = gauss_binom(s, t)
            assert is_zero_at_q(g, ctx) == (abs(at_root(g, lprime)) < 1e-6), (s, t)


@pytest.mark.parametrize("lprime,p", [(3, 7), (3, 13), (4, 5), (4, 13), (5, 11), (6, 7), (8, 17)])
def test_char_p_zero_test_against_roots_in_Fp(lprime, p):
    """With ``l' | p-1`` the primitive roots live in ``F_p`` itself."""
    ctx = CycloContext(lprime, p)
    roots = [z for z in range(2, p) if pow(z, lprime, p) == 1
             and all(pow(z, k, p) != 1 for k in range(1, lprime))]
    assert roots
    # far enough that the base-p digit of s // l matters
    for s in range(0, ctx.l * p + 2 * ctx.l):
        for t in range(0, s + 1):
            g = gauss_binom(s, t)
            vals = {g.evaluate_mod(z, p) == 0 for z in roots}
            assert len(vals) == 1
            zero = vals.pop()
            assert is_zero_at_q(g, ctx) == zero, (s, t)
            assert lucas_nonzero(s, t, ctx) == (not zero), (s, t)


def test_infinite_order_char_p_gauss_binom():
    # at generic q in characteristic p, only a zero polynomial mod p vanishes
    ctx = CycloContext(INFINITY, 3)
    assert not is_zero_at_q(gauss_binom(6, 3), ctx)
    assert is_zero_at_q(LaurentPoly({0: 3, 2: 6}), ctx)


# ---------------------------------------------------------------- properties


@given(st.integers(-60, 60), st.integers(3, 12))
def test_quantum_int_zero_iff_l_divides(i, lprime):
    ctx = CycloContext(lprime)
    assert is_zero_at_q(quantum_int(i), ctx) == (i % ctx.l == 0)


@given(st.integers(0, 20), st.integers(0, 20))
def test_bar_invariance(s, t):
    if t <= s:
        assert gauss_binom(s, t).bar() == gauss_binom(s, t)


@given(st.integers(-15, 25), st.integers(1, 10))
def test_ratio_identity(s, t):
    # [s brack t] = [s-1 brack t-1] [s] / [t], denominators cleared
    assert gauss_binom(s, t) * quantum_int(t) == gauss_binom(s - 1, t - 1) * quantum_int(s)


@given(st.integers(-15, 25), st.integers(1, 10))
def test_pascal(s, t):
    lhs = gauss_binom(s, t)
    assert lhs == gauss_binom(s - 1, t - 1) * vpow(s - t) + gauss_binom(s - 1, t) * vpow(-t)


@given(st.integers(1, 20), st.integers(0, 10))
def test_negative_top_sign_identity(a, t):
    assert gauss_binom(-a, t) == gauss_binom(a + t - 1, t) * (-1) ** t


@given(st.integers(0, 12))
def test_factorial_quotient(n):
    for t in range(n + 1):
        assert gauss_binom(n, t) * quantum_factorial(t) * quantum_factorial(n - t) == quantum_factorial(n)


coeff_maps = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=6)


@settings(max_examples=150)
@given(coeff_maps, coeff_maps, st.integers(3, 12))
def test_eval_is_ring_homomorphism(a, b, lprime):
    ctx = CycloContext(lprime)
    p, q = LaurentPoly(a), LaurentPoly(b)
    assert eval_at_q(p + q, ctx) == eval_at_q(p, ctx) + eval_at_q(q, ctx)
    assert eval_at_q(p * q, ctx) == eval_at_q(p, ctx) * eval_at_q(q, ctx)
    assert eval_at_q(p, ctx).is_zero() == (abs(at_root(p, lprime)) < 1e-6)


@given(coeff_maps, coeff_maps)
def test_laurent_ring_axioms(a, b):
    p, q = LaurentPoly(a), LaurentPoly(b)
    assert p * q == q * p
    assert (p + q) - q == p
    assert (p * q).bar() == p.bar() * q.bar()
    assert all(c != 0 for _, c in (p * q).items())
