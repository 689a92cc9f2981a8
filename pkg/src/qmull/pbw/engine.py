"""Rewriting engine: normal forms of words and evaluation on a highest-weight vector.

Normal form is ``lowering * Cartan * raising``.  Lowering powers ``E_{y,x}``
(``y > x``) are ordered left to right by ``(y, x)`` ascending; raising powers
``E_{x,y}`` by ``(y, x)`` descending.  These two orders are exchanged by
``upsilon``, so one rule table serves both halves.
"""
from __future__ import annotations

import threading
from typing import Iterable, Mapping

from ..qarith import ONE, CycloContext, LaurentPoly, eval_at_q
from . import rules
from .symbols import CartanPow, RootPow, Split, check_symbol, format_word

DEFAULT_STEP_LIMIT = 2_000_000


class RewriteLimitExceeded(RuntimeError):
    pass


def _rank(s) -> int:
    if type(s) is RootPow:
        return 0 if s.a > s.b else 2
    return 1


def _cartan_key(s):
    if type(s) is CartanPow:
        return (s.a, 0, 0, s.d, 0)
    return (s.a, 1, s.b or 0, s.c, s.t)


def lowering_key(s: RootPow):
    return (s.a, s.b)


def raising_key(s: RootPow):
    return (-s.b, -s.a)


def _add_into(acc: dict, word, coeff: LaurentPoly):
    cur = acc.get(word)
    new = coeff if cur is None else cur + coeff
    if new.is_zero():
        acc.pop(word, None)
    else:
        acc[word] = new


class UElement:
    """Finite sum of words with Laurent polynomial coefficients."""

    __slots__ = ("split", "terms")

    def __init__(self, split: Split, terms: Mapping | None = None):
        self.split = Split(*split)
        self.terms: dict[tuple, LaurentPoly] = {}
        if terms:
            for w, c in terms.items():
                _add_into(self.terms, tuple(w), LaurentPoly.coerce(c))

    @classmethod
    def word(cls, split: Split, word: Iterable, coeff=1) -> "UElement":
        word = tuple(word)
        for s in word:
            check_symbol(s, Split(*split))
        return cls(split, {word: coeff})

    def __add__(self, other: "UElement") -> "UElement":
        out = UElement(self.split, self.terms)
        for w, c in other.terms.items():
            _add_into(out.terms, w, c)
        return out

    def __sub__(self, other: "UElement") -> "UElement":
        return self + other.scale(-1)

    def scale(self, c) -> "UElement":
        c = LaurentPoly.coerce(c)
        return UElement(self.split, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other: "UElement") -> "UElement":
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _add_into(out, w1 + w2, c1 * c2)
        return UElement(self.split, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, UElement) and self.split == other.split and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{format_word(w)}]" for w, c in sorted(self.terms.items(), key=lambda t: str(t[0])))


class HWVector:
    """A vector ``sum_B c_B F_B m_lambda`` in the Verma-type span of a maximal vector."""

    __slots__ = ("split", "lam", "terms")

    def __init__(self, split: Split, lam, terms: Mapping | None = None):
        self.split = Split(*split)
        self.lam = tuple(lam)
        self.terms: dict[tuple, LaurentPoly] = dict(terms or {})

    def weight_of(self, B) -> tuple:
        return word_weight(self.lam, B)

    def weights(self) -> set:
        return {self.weight_of(B) for B in self.terms}

    def top_coefficient(self) -> LaurentPoly:
        """Coefficient of ``m_lambda`` itself."""
        return self.terms.get((), LaurentPoly())

    def is_zero(self) -> bool:
        return not self.terms

    def at_q(self, ctx: CycloContext) -> dict:
        out = {}
        for B, c in self.terms.items():
            e = eval_at_q(c, ctx)
            if not e.is_zero():
                out[B] = e
        return out

    def __sub__(self, other: "HWVector") -> "HWVector":
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, -c)
        return HWVector(self.split, self.lam, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{format_word(B)}]m" for B, c in self.terms.items())


def word_weight(lam, B) -> tuple:
    mu = list(lam)
    for s in B:
        if type(s) is RootPow:
            mu[s.a - 1] += s.M
            mu[s.b - 1] -= s.M
    return tuple(mu)


class Engine:
    """Rule application bound to one split ``(m, n)``.

    Straightening of lowering words is memoized and shared by all weights; the
    caches are guarded by a lock so one engine may serve several threads.
    """

    def __init__(self, m: int, n: int, step_limit: int = DEFAULT_STEP_LIMIT):
        self.split = Split(m, n)
        self.step_limit = step_limit
        self._prepend_cache: dict = {}
        self._lock = threading.Lock()

    # -- normal form of whole algebra elements ---------------------------

    def _bad_pair(self, x, y):
        """Rewrite of ``x*y`` if that pair is out of normal form, else None."""
        rx, ry = _rank(x), _rank(y)
        sp = self.split
        if rx == ry == 0:
            if (x.a, x.b) == (y.a, y.b):
                return rules.merge(x, y, sp)
            if lowering_key(x) > lowering_key(y):
                return rules.lowering_pair(x, y, sp)
            return None
        if rx == ry == 2:
            if (x.a, x.b) == (y.a, y.b):
                return rules.merge(x, y, sp)
            if raising_key(x) > raising_key(y):
                return rules.ppco(x, y, sp)
            return None
        if rx == ry == 1:
            if type(x) is CartanPow and type(y) is CartanPow and x.a == y.a and x.d == -y.d:
                return [(ONE, ())]
            if _cartan_key(x) > _cartan_key(y):
                return [(ONE, (y, x))]
            return None
        if rx < ry:
            return None
        if rx == 2 and ry == 0:
            return rules.raise_lower(x, y, sp)
        if rx == 2:  # raising * Cartan
            c, k = rules.root_past_cartan(x, y, sp)
            return [(c, (k, x))]
        c, k = rules.cartan_past_root(x, y, sp)  # Cartan * lowering
        return [(c, (y, k))]

    def normalize(self, elem: UElement) -> UElement:
        """Rewrite to a sum of ``lowering * Cartan * raising`` normal words."""
        done: dict = {}
        todo = list(elem.terms.items())
        steps = 0
        while todo:
            word, coeff = todo.pop()
            for i in range(len(word) - 1):
                rep = self._bad_pair(word[i], word[i + 1])
                if rep is not None:
                    break
            else:
                _add_into(done, word, coeff)
                continue
            steps += 1
            if steps > self.step_limit:
                raise RewriteLimitExceeded(f"normalize exceeded {self.step_limit} steps")
            head, tail = word[:i], word[i + 2:]
            for c, w in rep:
                todo.append((head + w + tail, coeff * c))
        return UElement(self.split, done)

    # -- lowering straightening ------------------------------------------

    def prepend(self, y: RootPow, B: tuple) -> dict:
        """Normal form of ``y * F_B`` for a normal lowering word ``B``."""
        key = (y, B)
        hit = self._prepend_cache.get(key)
        if hit is not None:
            return hit
        sp = self.split
        if not B or lowering_key(y) < lowering_key(B[0]):
            out = {(y,) + B: ONE}
        elif (y.a, y.b) == (B[0].a, B[0].b):
            out = {}
            for c, w in rules.merge(y, B[0], sp):
                _add_into(out, w + B[1:], c)
        else:
            out = {}
            for c, w in rules.lowering_pair(y, B[0], sp):
                for word, c2 in self.straighten(w, B[1:]).items():
                    _add_into(out, word, c * c2)
        with self._lock:
            self._prepend_cache[key] = out
        return out

    def straighten(self, W: tuple, B: tuple = ()) -> dict:
        """Normal form of ``F_W * F_B`` with ``B`` normal."""
        vec = {B: ONE}
        for s in reversed(W):
            nxt: dict = {}
            for word, c in vec.items():
                for w2, c2 in self.prepend(s, word).items():
                    _add_into(nxt, w2, c * c2)
            vec = nxt
        return vec

    # -- evaluation on m_lambda ------------------------------------------

    def act_on_hw(self, elem, lam, ctx: CycloContext | None = None):
        """Apply ``elem`` (UElement or word) to the maximal vector ``m_lambda``.

        Returns an :class:`HWVector`; with ``ctx`` given, the coefficient map
        evaluated at ``q`` instead.
        """
        vec = self.act(elem, HWVector(self.split, lam, {(): ONE}))
        return vec.at_q(ctx) if ctx is not None else vec

    def act(self, elem, vec: HWVector) -> HWVector:
        if not isinstance(elem, UElement):
            elem = UElement.word(self.split, elem)
        ev = _Evaluator(self, vec.lam)
        out: dict = {}
        for word, c in elem.terms.items():
            for B, c2 in ev.apply_word(word, vec.terms).items():
                _add_into(out, B, c * c2)
        return HWVector(self.split, vec.lam, out)


class _Evaluator:
    """Per-weight evaluation state; the raising-action memo depends on lambda."""

    def __init__(self, engine: Engine, lam):
        self.engine = engine
        self.split = engine.split
        self.lam = tuple(lam)
        if len(self.lam) != self.split.size:
            raise ValueError(f"weight {lam} does not match split {tuple(self.split)}")
        self._raise_cache: dict = {}

    def apply_word(self, word, vec: Mapping) -> dict:
        cur = dict(vec)
        for s in reversed(word):
            cur = self.apply_symbol(s, cur)
            if not cur:
                break
        return cur

    def apply_symbol(self, s, vec: Mapping) -> dict:
        out: dict = {}
        r = _rank(s)
        if r == 0:
            for B, c in vec.items():
                for w, c2 in self.engine.prepend(s, B).items():
                    _add_into(out, w, c * c2)
        elif r == 1:
            for B, c in vec.items():
                val = rules.cartan_scalar(s, word_weight(self.lam, B), self.split)
                if not val.is_zero():
                    _add_into(out, B, c * val)
        else:
            for B, c in vec.items():
                for w, c2 in self.raise_on(s, B).items():
                    _add_into(out, w, c * c2)
        return out

    def raise_on(self, x: RootPow, B: tuple) -> dict:
        """``x * F_B m_lambda`` for raising ``x``."""
        if not B:
            return {}
        key = (x, B)
        hit = self._raise_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        rest = {B[1:]: ONE}
        for c, w in rules.raise_lower(x, B[0], self.split):
            for word, c2 in self.apply_word(w, rest).items():
                _add_into(out, word, c * c2)
        self._raise_cache[key] = out
        return out
