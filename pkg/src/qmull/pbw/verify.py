"""Mechanized checks of highest-weight computations with the rewriting engine."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..mullclass import nonpoly_witness
from ..qarith import ONE, CycloContext, LaurentPoly, eval_at_q, gauss_binom, product, quantum_int
from .engine import Engine, HWVector, UElement, word_weight
from .rules import vq
from .symbols import RootPow, Split


def root_vector(a: int, b: int, split: Split) -> UElement:
    """Expand ``E_{a,b}`` into simple generators (``c = b-1`` or ``c = b+1``)."""
    split = Split(*split)
    if abs(a - b) == 1:
        return UElement(split, {(RootPow(a, b, 1),): ONE})
    if a == b:
        raise ValueError("a root needs a != b")
    c = b - 1 if a < b else b + 1
    X = root_vector(a, c, split)
    Y = root_vector(c, b, split)
    coef = vq(split, c, -1) if a < b else vq(split, c, 1)
    return X * Y - (Y * X).scale(coef)


def _engine(split: Split, engine: Engine | None) -> Engine:
    if engine is not None:
        if engine.split != Split(*split):
            raise ValueError("engine split mismatch")
        return engine
    return Engine(*split)


# ---------------------------------------------------------------------------
# composition words


def comp_word(h: int, indices, exps) -> tuple:
    """``E_{h,i_1}^{(a_1)} ... E_{h,i_s}^{(a_s)} E_{i_s,h}^{(a_s)} ... E_{i_1,h}^{(a_1)}``."""
    up = tuple(RootPow(h, i, a) for i, a in zip(indices, exps))
    down = tuple(RootPow(i, h, a) for i, a in reversed(list(zip(indices, exps))))
    return up + down


def comp_closed_form(h: int, indices, exps, lam, split: Split) -> LaurentPoly:
    m = split.m
    out = ONE
    used = 0
    for i, a in zip(indices, exps):
        sign = 1 if (h <= m) == (i <= m) else -1
        out = out * gauss_binom(lam[h - 1] - sign * lam[i - 1] - used, a)
        used += a
    return out


def _check_comp_args(h, indices, exps, split: Split):
    if len(indices) != len(exps):
        raise ValueError("indices and exponents differ in length")
    prev = h
    for i, a in zip(indices, exps):
        if i <= prev or i > split.size:
            raise ValueError("need h < i_1 < ... < i_s <= m+n")
        if a < 1:
            raise ValueError("exponents must be positive")
        if (h <= split.m) != (i <= split.m) and a != 1:
            raise ValueError("odd roots take exponent 1")
        prev = i


@dataclass
class CompResult:
    engine_value: LaurentPoly
    closed_form: LaurentPoly
    equal: bool
    equal_at_q: bool | None = None


def verify_comp(h: int, indices, exps, lam, ctx: CycloContext | None = None,
                split: Split | None = None, engine: Engine | None = None) -> CompResult:
    """Engine value of the composition word on ``m_lambda`` against the Gaussian product."""
    if split is None:
        raise ValueError("split (m, n) is required")
    split = Split(*split)
    indices, exps = list(indices), list(exps)
    _check_comp_args(h, indices, exps, split)
    eng = _engine(split, engine)
    vec = eng.act_on_hw(comp_word(h, indices, exps), lam)
    others = [B for B in vec.terms if B]
    if others:
        raise AssertionError(f"composition word left non-top terms: {others[:3]}")
    val = vec.top_coefficient()
    closed = comp_closed_form(h, indices, exps, lam, split)
    at_q = None
    if ctx is not None:
        at_q = eval_at_q(val, ctx) == eval_at_q(closed, ctx)
    return CompResult(val, closed, val == closed, at_q)


# ---------------------------------------------------------------------------
# nonpolynomiality word


@dataclass
class NonResult:
    engine_value: LaurentPoly
    product: LaurentPoly
    equal: bool
    nonzero_at_q: bool

    @property
    def ok(self) -> bool:
        return self.equal and self.nonzero_at_q


def non_word(m: int, odd_indices) -> tuple:
    """``(E_{m,m+i_1} ... E_{m,m+i_k})(E_{m+i_k,m} ... E_{m+i_1,m})``."""
    return comp_word(m, [m + i for i in odd_indices], [1] * len(odd_indices))


def non_product(lam, m: int, odd_indices) -> LaurentPoly:
    return product(quantum_int(lam[m - 1] + lam[m + i - 1] - t + 1)
                   for t, i in enumerate(odd_indices, start=1))


def verify_non_indices(lam, split: Split, odd_indices, ctx: CycloContext,
                       engine: Engine | None = None) -> NonResult:
    split = Split(*split)
    eng = _engine(split, engine)
    vec = eng.act_on_hw(non_word(split.m, odd_indices), lam)
    if any(B for B in vec.terms):
        raise AssertionError("nonpolynomiality word left non-top terms")
    val = vec.top_coefficient()
    prod = non_product(lam, split.m, odd_indices)
    return NonResult(val, prod, val == prod, not eval_at_q(prod, ctx).is_zero())


def verify_non(lam, l, ctx: CycloContext | None = None, engine: Engine | None = None) -> NonResult:
    """Evaluate the witness word of a non-polynomial weight and compare with its product."""
    if ctx is None:
        ctx = CycloContext.from_l(l)
    w = nonpoly_witness(lam, l, ctx)
    return verify_non_indices(lam.entries, lam.split, w.indices, ctx, engine)


# ---------------------------------------------------------------------------
# lowest weight words for gl_m


def lowe2_fword(lam, k: int) -> tuple:
    """Word whose action takes ``n^(k-1)`` to ``n^(k)``, leftmost symbol applied last."""
    m = len(lam)
    out = []
    for j in range(m - k, 0, -1):
        e = lam[k - 1] - lam[k + j - 1]
        if e:
            out.append(RootPow(j + 1, j, e))
    return tuple(out)


def lowe2_eword(lam, k: int) -> tuple:
    """``E_1^{(l_k - l_{k+1})} ... E_{m-k}^{(l_k - l_m)}``."""
    m = len(lam)
    out = []
    for j in range(1, m - k + 1):
        e = lam[k - 1] - lam[k + j - 1]
        if e:
            out.append(RootPow(j, j + 1, e))
    return tuple(out)


def lowe2_expected_weight(lam, k: int) -> tuple:
    lam = tuple(lam)
    return lam[k:] + tuple(reversed(lam[:k]))


def raising_monomials(diff, split: Split):
    """Normal raising words of weight ``diff`` (an element of the root lattice)."""
    N = split.size
    roots = sorted(((a, b) for a in range(1, N + 1) for b in range(a + 1, N + 1)),
                   key=lambda r: (-r[1], -r[0]))
    out = []

    def rec(i, remaining, acc):
        if not any(remaining):
            out.append(tuple(acc))
            return
        if i == len(roots):
            return
        a, b = roots[i]
        odd = (a <= split.m) != (b <= split.m)
        cap = 1 if odd else max(0, max(remaining))
        for M in range(0, cap + 1):
            rem = list(remaining)
            rem[a - 1] -= M
            rem[b - 1] += M
            # partial sums of the remaining weight must stay nonnegative
            run, ok = 0, True
            for x in rem:
                run += x
                if run < 0:
                    ok = False
                    break
            if not ok:
                break
            rec(i + 1, rem, acc + ([RootPow(a, b, M)] if M else []))

    rec(0, list(diff), [])
    return out


def in_radical(vec: HWVector, ctx: CycloContext, engine: Engine) -> bool:
    """Whether a single-weight vector lies in the maximal submodule at ``q``.

    That submodule consists of the vectors that no raising monomial of the
    hyperalgebra can bring back to a nonzero multiple of ``m_lambda``.
    """
    if vec.is_zero():
        return True
    wts = vec.weights()
    if len(wts) != 1:
        raise ValueError("in_radical expects a weight vector")
    mu = next(iter(wts))
    diff = tuple(x - y for x, y in zip(vec.lam, mu))
    if not any(diff):
        return eval_at_q(vec.top_coefficient(), ctx).is_zero()
    for X in raising_monomials(diff, engine.split):
        top = engine.act(X, vec).top_coefficient()
        if not eval_at_q(top, ctx).is_zero():
            return False
    return True


@dataclass
class Lowe2Stage:
    k: int
    weight: tuple
    expected_weight: tuple
    terms: int
    exact_recovery: bool
    recovery_mod_radical: bool
    composite_top: LaurentPoly
    composite_top_is_one_at_q: bool

    @property
    def ok(self) -> bool:
        return (self.weight == self.expected_weight and self.recovery_mod_radical
                and self.composite_top_is_one_at_q)


@dataclass
class Lowe2Trace:
    lam: tuple
    stages: list = field(default_factory=list)
    final_weight: tuple = ()

    @property
    def ok(self) -> bool:
        lam_dagger = tuple(reversed(self.lam))
        return all(s.ok for s in self.stages) and self.final_weight == lam_dagger

    def first_failure(self):
        for s in self.stages:
            if not s.ok:
                return s
        return None


def verify_lowe2(lam, ctx: CycloContext, engine: Engine | None = None) -> Lowe2Trace:
    """Build ``n^(k)`` stage by stage and check weights, recovery and nonvanishing."""
    lam = tuple(lam)
    m = len(lam)
    if any(lam[i] < lam[i + 1] for i in range(m - 1)):
        raise ValueError("lambda must be weakly decreasing")
    split = Split(m, 0)
    eng = _engine(split, engine)
    trace = Lowe2Trace(lam)
    prev = HWVector(split, lam, {(): ONE})
    ewords = []
    for k in range(1, m):
        cur = eng.act(lowe2_fword(lam, k), prev)
        wts = cur.weights()
        weight = next(iter(wts)) if len(wts) == 1 else None
        back = eng.act(lowe2_eword(lam, k), cur)
        delta = back - prev
        exact = delta.is_zero()
        mod_rad = exact or in_radical(delta, ctx, eng)
        ewords.append(lowe2_eword(lam, k))
        top_vec = cur
        for w in reversed(ewords):
            top_vec = eng.act(w, top_vec)
        top = top_vec.top_coefficient()
        stray = [B for B in top_vec.terms if B]
        one_at_q = not stray and eval_at_q(top - ONE, ctx).is_zero()
        trace.stages.append(Lowe2Stage(k, weight, lowe2_expected_weight(lam, k), len(cur.terms),
                                       exact, mod_rad, top, one_at_q))
        prev = cur
    if m == 1:
        trace.final_weight = lam
    else:
        trace.final_weight = trace.stages[-1].weight
    return trace


__all__ = [
    "root_vector", "comp_word", "comp_closed_form", "verify_comp", "CompResult",
    "non_word", "non_product", "verify_non_indices", "verify_non", "NonResult",
    "lowe2_fword", "lowe2_eword", "lowe2_expected_weight", "verify_lowe2",
    "Lowe2Trace", "Lowe2Stage", "in_radical", "raising_monomials", "word_weight",
]
