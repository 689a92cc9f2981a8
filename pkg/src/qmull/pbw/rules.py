"""Commutation rules for divided powers of root vectors.

Every rule returns a list of ``(coefficient, word)`` pairs whose sum equals
the product of its two arguments.  Mirror rules are generated from the
stated ones through the anti-automorphism ``upsilon`` (reverse the word,
swap root indices, invert Cartan powers, bar the coefficients).
"""
from __future__ import annotations

from ..qarith import ONE, LaurentPoly, gauss_binom, quantum_factorial, vpow
from .symbols import CartanBinom, CartanPow, RootPow, Split


class RuleError(RuntimeError):
    """No rule matches a pair that should have been covered."""


def vq(split: Split, i: int, e: int) -> LaurentPoly:
    """``v_i ** e``."""
    return vpow(e if i <= split.m else -e)


def _vq_diff(split: Split, i: int) -> LaurentPoly:
    # v_i - v_i^{-1}
    return vq(split, i, 1) - vq(split, i, -1)


def odd(split: Split, a: int, b: int) -> bool:
    return (a <= split.m) != (b <= split.m)


def clean(coeff: LaurentPoly, parts, split: Split):
    """Drop trivial divided powers; return None when the term vanishes."""
    if coeff.is_zero():
        return None
    out = []
    for s in parts:
        if type(s) is RootPow:
            if s.M == 0:
                continue
            if s.M > 1 and odd(split, s.a, s.b):
                return None
        out.append(s)
    return coeff, tuple(out)


def _collect(terms, split: Split):
    out = []
    for coeff, parts in terms:
        t = clean(coeff, parts, split)
        if t is not None:
            out.append(t)
    return out


def _kpow(i: int, j: int, t: int):
    """Word for ``K_{i,j}^t = K_i^t K_j^{-t}`` (t >= 0)."""
    return (CartanPow(i, 1),) * t + (CartanPow(j, -1),) * t


# ---------------------------------------------------------------------------
# upsilon


def upsilon_symbol(s):
    if type(s) is RootPow:
        return RootPow(s.b, s.a, s.M)
    if type(s) is CartanPow:
        return CartanPow(s.a, -s.d)
    return s


def upsilon_terms(terms):
    return [(c.bar(), tuple(upsilon_symbol(s) for s in reversed(w))) for c, w in terms]


# ---------------------------------------------------------------------------
# raising x raising


def ppco_case(a: int, b: int, c: int, d: int) -> int | None:
    """Which case covers ``E_{a,b} E_{c,d}`` (both raising); None if none does."""
    if (a, b) == (c, d):
        return None
    if b < c or c < a < b < d:
        return 1
    if (a == c and b < d) or (a < c and b == d):
        return 2
    if b == c:
        return 3
    if a < c < b < d:
        return 4
    return None


def ppco(x: RootPow, y: RootPow, split: Split):
    """``E_{a,b}^{(M)} E_{c,d}^{(N)}`` with ``a<b``, ``c<d`` rewritten toward normal order."""
    a, b, M = x
    c, d, N = y
    case = ppco_case(a, b, c, d)
    both_odd = odd(split, a, b) and odd(split, c, d)
    if case == 1:
        return _collect([(-ONE if both_odd else ONE, (y, x))], split)
    if case == 2:
        if both_odd:
            coeff = -vq(split, b, 1) if b == d else -vq(split, a, 1)
            return _collect([(coeff, (y, x))], split)
        return _collect([(vq(split, b, M * N), (y, x))], split)
    if case == 3:
        terms = []
        for t in range(min(M, N) + 1):
            terms.append((vq(split, b, -(N - t) * (M - t)),
                          (RootPow(c, d, N - t), RootPow(a, d, t), RootPow(a, b, M - t))))
        return _collect(terms, split)
    if case == 4:
        if both_odd:
            return _collect([(-ONE, (y, x)),
                             (_vq_diff(split, b), (RootPow(a, d, 1), RootPow(c, b, 1)))], split)
        terms = []
        diff = _vq_diff(split, b)
        for t in range(min(M, N) + 1):
            coeff = vq(split, b, t * (t - 1) // 2) * diff ** t * quantum_factorial(t)
            terms.append((coeff, (RootPow(c, b, t), RootPow(c, d, N - t),
                                  RootPow(a, b, M - t), RootPow(a, d, t))))
        return _collect(terms, split)
    raise RuleError(f"no raising rule for {x} {y}")


def lowering_pair(x: RootPow, y: RootPow, split: Split):
    """Straighten two lowering powers via the upsilon image of ``ppco``."""
    ux, uy = upsilon_symbol(x), upsilon_symbol(y)
    return upsilon_terms(ppco(uy, ux, split))


# ---------------------------------------------------------------------------
# raising x lowering


def cqrv_case(a: int, b: int, c: int, d: int) -> int | None:
    """Case for ``E_{a,b} E_{d,c}`` with ``a<b``, ``c<d``."""
    if b <= c or c < a < b < d:
        return 1
    if a < c < b == d:
        return 2
    if a == c < b < d:
        return 3
    if a == c and b == d:
        return 4
    if a < c < b < d:
        return 5
    return None


def cqrv(x: RootPow, y: RootPow, split: Split):
    """``E_{a,b}^{(M)} E_{d,c}^{(N)}`` rewritten as lowering * Cartan * raising."""
    a, b, M = x
    d, c, N = y
    case = cqrv_case(a, b, c, d)
    both_odd = odd(split, a, b) and odd(split, c, d)
    sign = -ONE if both_odd else ONE
    if case == 1:
        return _collect([(sign, (y, x))], split)
    if case == 2:
        if both_odd:
            return _collect([(sign, (y, x)), (ONE, _kpow(c, d, 1) + (RootPow(a, c, 1),))], split)
        terms = []
        for t in range(min(M, N) + 1):
            terms.append((vq(split, b, -t * (N - t)),
                          (RootPow(d, c, N - t),) + _kpow(c, d, t)
                          + (RootPow(a, b, M - t), RootPow(a, c, t))))
        return _collect(terms, split)
    if case == 3:
        if both_odd:
            return _collect([(sign, (y, x)), (-sign, _kpow(a, b, 1) + (RootPow(d, b, 1),))], split)
        terms = []
        for t in range(min(M, N) + 1):
            coeff = vq(split, b, -t * (M - 1 - t)) * (-1) ** t
            terms.append((coeff, (RootPow(d, b, t), RootPow(d, c, N - t)) + _kpow(a, b, t)
                          + (RootPow(a, b, M - t),)))
        return _collect(terms, split)
    if case == 4:
        if both_odd:
            return _collect([(sign, (y, x)), (ONE, (CartanBinom(a, b, 0, 1),))], split)
        terms = []
        for t in range(min(M, N) + 1):
            terms.append((ONE, (RootPow(b, a, N - t), CartanBinom(a, b, 2 * t - M - N, t),
                                RootPow(a, b, M - t))))
        return _collect(terms, split)
    if case == 5:
        diff = _vq_diff(split, b)
        if both_odd:
            return _collect([(sign, (y, x)), (-vq(split, b, 1) * diff,
                                              (RootPow(d, b, 1),) + _kpow(c, b, 1) + (RootPow(a, c, 1),))],
                            split)
        terms = []
        for t in range(min(M, N) + 1):
            e2 = -t * (2 * N - 3 * t - 1)
            coeff = vq(split, b, e2 // 2) * diff ** t * quantum_factorial(t) * (-1) ** t
            terms.append((coeff, (RootPow(d, c, N - t), RootPow(d, b, t)) + _kpow(c, b, t)
                          + (RootPow(a, b, M - t), RootPow(a, c, t))))
        return _collect(terms, split)
    raise RuleError(f"no raising/lowering rule for {x} {y}")


def raise_lower(x: RootPow, y: RootPow, split: Split):
    """Move raising ``x`` to the right of lowering ``y``."""
    a, b, _ = x
    d, c, _ = y
    if cqrv_case(a, b, c, d) is not None:
        return cqrv(x, y, split)
    ux, uy = upsilon_symbol(x), upsilon_symbol(y)
    if cqrv_case(uy.a, uy.b, ux.b, ux.a) is None:
        raise RuleError(f"no raising/lowering rule for {x} {y}")
    return upsilon_terms(cqrv(uy, ux, split))


# ---------------------------------------------------------------------------
# same-root merging and Cartan moves


def merge(x: RootPow, y: RootPow, split: Split):
    """``E^{(M)} E^{(N)} = [M+N, M] E^{(M+N)}``; zero for odd roots."""
    if odd(split, x.a, x.b):
        return []
    return [(gauss_binom(x.M + y.M, x.M), (RootPow(x.a, x.b, x.M + y.M),))]


def weight_shift(split: Split, a: int, s: RootPow) -> int:
    """Exponent ``e`` with ``K_a E = v_a^e E K_a`` for ``E = s``."""
    return s.M * ((a == s.a) - (a == s.b))


def cartan_shift(split: Split, k, s: RootPow) -> int:
    """For ``k = K_a^{+-1}`` or a Cartan binomial: exponent of ``v_a`` picked up by ``K E = v_a^e E K``."""
    b = k.b if type(k) is CartanBinom else None
    if b is None:
        return weight_shift(split, k.a, s)
    sign = 1 if (k.a <= split.m) == (k.b <= split.m) else -1
    return weight_shift(split, k.a, s) - sign * weight_shift(split, b, s)


def cartan_past_root(k, s: RootPow, split: Split):
    """Rewrite ``k * s`` as ``coeff * s * k'``."""
    e = cartan_shift(split, k, s)
    if type(k) is CartanPow:
        return vq(split, k.a, k.d * e), k
    return ONE, CartanBinom(k.a, k.b, k.c + e, k.t)


def root_past_cartan(s: RootPow, k, split: Split):
    """Rewrite ``s * k`` as ``coeff * k' * s``."""
    e = cartan_shift(split, k, s)
    if type(k) is CartanPow:
        return vq(split, k.a, -k.d * e), k
    return ONE, CartanBinom(k.a, k.b, k.c - e, k.t)


def cartan_scalar(k, mu, split: Split) -> LaurentPoly:
    """Eigenvalue of a Cartan symbol on a weight vector of weight ``mu``."""
    if type(k) is CartanPow:
        return vq(split, k.a, k.d * mu[k.a - 1])
    if k.b is None:
        return gauss_binom(mu[k.a - 1] + k.c, k.t)
    sign = 1 if (k.a <= split.m) == (k.b <= split.m) else -1
    return gauss_binom(mu[k.a - 1] - sign * mu[k.b - 1] + k.c, k.t)

