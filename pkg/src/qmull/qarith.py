"""Quantum integers, Gaussian binomials and zero tests at roots of unity.

Everything here is exact.  Laurent polynomials in ``v`` carry integer
coefficients; evaluation at a primitive ``l'``-th root of unity ``q`` is
modelled by reduction modulo the ``l'``-th cyclotomic polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Union

INFINITY = math.inf

Number = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable Laurent polynomial in ``v`` with integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = int(a)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> "LaurentPoly":
        return cls._raw({e: a} if a else {})

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls._raw({0: a} if a else {})

    @staticmethod
    def coerce(x: Number) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: Number) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other: Number) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Number) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Number) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: a * other for e, a in self._c.items()})
        other = LaurentPoly.coerce(other)
        if not self._c or not other._c:
            return ZERO
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
        return LaurentPoly._raw({e: a for e, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) == 1:
                (e, a), = self._c.items()
                if a in (1, -1):
                    return LaurentPoly.monomial(e * n, a ** (-n) if n % 2 else 1)
            raise ValueError("only units have negative powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v**k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``v -> v**-1``."""
        return LaurentPoly._raw({-e: a for e, a in self._c.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Return ``p(v**k)``."""
        if k == 0:
            return LaurentPoly.const(sum(self._c.values()))
        return LaurentPoly._raw({e * k: a for e, a in self._c.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises if the division leaves a remainder."""
        if not other._c:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._c:
            return ZERO
        lo_d = other.min_exp()
        hi_d = other.max_exp()
        lead = other._c[hi_d]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            if hi - hi_d < min(rem) - lo_d:
                raise ArithmeticError("division is not exact")
            a = rem[hi]
            if a % lead:
                raise ArithmeticError("division is not exact over the integers")
            k = hi - hi_d
            qa = a // lead
            quot[k] = qa
            for e, b in other._c.items():
                s = rem.get(e + k, 0) - qa * b
                if s:
                    rem[e + k] = s
                else:
                    rem.pop(e + k, None)
        return LaurentPoly._raw(quot)

    def __call__(self, x):
        """Evaluate at a number (``Fraction``/``int``/modular value); negative powers use ``1/x``."""
        total = 0
        for e, a in self._c.items():
            total += a * (x ** e)
        return total

    def evaluate_mod(self, x: int, prime: int) -> int:
        total = 0
        for e, a in self._c.items():
            total += a * pow(x, e, prime)
        return total % prime

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            a = self._c[e]
            if e == 0:
                mono = str(abs(a))
            else:
                vpart = "v" if e == 1 else f"v^{e}"
                mono = vpart if abs(a) == 1 else f"{abs(a)}*{vpart}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    def to_json(self) -> dict[str, int]:
        return {str(e): a for e, a in sorted(self._c.items())}


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)


def vpow(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


@lru_cache(maxsize=None)
def quantum_int(i: int) -> LaurentPoly:
    """``[i] = (v^i - v^-i)/(v - v^-1)``."""
    if i == 0:
        return ZERO
    if i < 0:
        return -quantum_int(-i)
    return LaurentPoly._raw({i - 1 - 2 * k: 1 for k in range(i)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for i in range(1, n + 1):
        out = out * quantum_int(i)
    return out


@lru_cache(maxsize=None)
def _gauss_nonneg(s: int, t: int) -> LaurentPoly:
    if t < 0 or t > s:
        return ZERO
    if t == 0 or t == s:
        return ONE
    # [s, t] = v^-t [s-1, t] + v^(s-t) [s-1, t-1]
    return _gauss_nonneg(s - 1, t).shift(-t) + _gauss_nonneg(s - 1, t - 1).shift(s - t)


def gauss_product(s: int, t: int) -> LaurentPoly:
    """The defining product ``prod_{i=1}^t [s-i+1]/[i]``, divided exactly."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    num = ONE
    for i in range(1, t + 1):
        num = num * quantum_int(s - i + 1)
    return num.divmod_exact(quantum_factorial(t))


@lru_cache(maxsize=None)
def gauss_binom(s: int, t: int) -> LaurentPoly:
    """Symmetric Gaussian binomial ``[s brack t]`` for any integer ``s`` and ``t >= 0``."""
    if t < 0:
        raise ValueError(f"gauss_binom needs t >= 0, got t={t}")
    if s >= 0:
        return _gauss_nonneg(s, t)
    return gauss_product(s, t)


def q_a_power(a: int, e: int, split: tuple[int, int]) -> LaurentPoly:
    """``v_a ** e`` where ``v_a = v`` for even ``a`` and ``v**-1`` for odd ``a``."""
    m, n = split
    if not 1 <= a <= m + n:
        raise IndexError(f"index {a} outside 1..{m + n}")
    return vpow(e if a <= m else -e)


# ---------------------------------------------------------------------------
# roots of unity


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the ``n``-th cyclotomic polynomial."""
    # x^n - 1 divided by all Phi_d with d | n, d < n
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic(d)))
    return tuple(poly)


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] // b[db]
        quot[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _reduce_mod_monic(coeffs: list[int], modulus: tuple[int, ...], prime: int = 0) -> list[int]:
    d = len(modulus) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, d - 1, -1):
        a = c[k]
        if a:
            for j in range(d + 1):
                c[k - d + j] -= a * modulus[j]
            if prime:
                for j in range(d + 1):
                    c[k - d + j] %= prime
    c = c[:d] + [0] * max(0, d - len(c))
    if prime:
        c = [x % prime for x in c]
    return c


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class CycloContext:
    """Where ``q`` lives: its multiplicative order ``l'`` and the field characteristic."""

    l_prime: float | int = INFINITY
    field_char: int = 0
    l: float | int = field(init=False)

    def __post_init__(self):
        lp = self.l_prime
        if lp != INFINITY:
            if not isinstance(lp, int) or lp < 3:
                raise ValueError(f"l' must be an integer >= 3 or infinity, got {lp!r}")
            object.__setattr__(self, "l", lp if lp % 2 else lp // 2)
        else:
            object.__setattr__(self, "l", INFINITY)
        p = self.field_char
        if p == 2:
            raise ValueError("characteristic 2 is excluded")
        if p and not _is_prime(p):
            raise ValueError(f"field characteristic must be 0 or an odd prime, got {p}")
        if p and lp != INFINITY and lp % p == 0:
            raise ValueError(f"no primitive {lp}-th root of unity exists in characteristic {p}")

    @classmethod
    def from_l(cls, l: float | int, field_char: int = 0) -> "CycloContext":
        """Pick the odd ``l' = l`` when possible, otherwise ``l' = 2l``."""
        if l == INFINITY:
            return cls(INFINITY, field_char)
        if l < 2:
            raise ValueError("l must be at least 2")
        lp = l if l % 2 and l >= 3 else 2 * l
        if field_char and lp % field_char == 0:
            lp = 2 * l
        return cls(lp, field_char)

    def divides(self, x: int) -> bool:
        """``l | x`` with the convention that infinity divides only 0."""
        if self.l == INFINITY:
            return x == 0
        return x % self.l == 0


class CycloElt:
    """Canonical residue of a Laurent polynomial at ``q`` (characteristic 0)."""

    __slots__ = ("ctx", "residue")

    def __init__(self, ctx: CycloContext, residue):
        self.ctx = ctx
        self.residue = residue

    def is_zero(self) -> bool:
        if self.ctx.l_prime == INFINITY:
            return self.residue.is_zero()
        return not any(self.residue)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = eval_at_q(LaurentPoly.const(other), self.ctx)
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.ctx.l_prime == other.ctx.l_prime and self.residue == other.residue

    def __hash__(self):
        return hash((self.ctx.l_prime, self.residue))

    def _check(self, other: "CycloElt"):
        if other.ctx.l_prime != self.ctx.l_prime:
            raise ValueError("elements live at different roots of unity")

    def __add__(self, other: "CycloElt") -> "CycloElt":
        self._check(other)
        if self.ctx.l_prime == INFINITY:
            return CycloElt(self.ctx, self.residue + other.residue)
        return CycloElt(self.ctx, tuple(a + b for a, b in zip(self.residue, other.residue)))

    def __neg__(self) -> "CycloElt":
        if self.ctx.l_prime == INFINITY:
            return CycloElt(self.ctx, -self.residue)
        return CycloElt(self.ctx, tuple(-a for a in self.residue))

    def __sub__(self, other: "CycloElt") -> "CycloElt":
        return self + (-other)

    def __mul__(self, other: "CycloElt") -> "CycloElt":
        self._check(other)
        if self.ctx.l_prime == INFINITY:
            return CycloElt(self.ctx, self.residue * other.residue)
        prod = [0] * (2 * len(self.residue))
        for i, a in enumerate(self.residue):
            if a:
                for j, b in enumerate(other.residue):
                    prod[i + j] += a * b
        return CycloElt(self.ctx, tuple(_reduce_mod_monic(prod, cyclotomic(self.ctx.l_prime))))

    def to_json(self):
        """Coefficients of ``1, q, q^2, ...`` (a Laurent map when ``l'`` is infinite)."""
        if self.ctx.l_prime == INFINITY:
            return self.residue.to_json()
        res = list(self.residue)
        while res and res[-1] == 0:
            res.pop()
        return res

    def __repr__(self) -> str:
        return f"CycloElt(l'={self.ctx.l_prime}, {self.residue})"


def eval_at_q(p: Number, ctx: CycloContext) -> CycloElt:
    """Evaluate ``p`` at ``q``; characteristic 0 only."""
    if ctx.field_char != 0:
        raise ValueError("exact evaluation is characteristic 0 only; use lucas_nonzero instead")
    p = LaurentPoly.coerce(p)
    lp = ctx.l_prime
    if lp == INFINITY:
        return CycloElt(ctx, p)
    folded = [0] * lp
    for e, a in p.items():
        folded[e % lp] += a
    return CycloElt(ctx, tuple(_reduce_mod_monic(folded, cyclotomic(lp))))


def _fp_poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _fp_poly_trim([x % p for x in a])
    b = _fp_poly_trim([x % p for x in b])
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
        _fp_poly_trim(a)
    return a


def _fp_poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _fp_poly_trim([x % p for x in a])
    b = _fp_poly_trim([x % p for x in b])
    while b:
        a, b = b, _fp_poly_mod(a, b, p)
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def is_zero_at_q(p: Number, ctx: CycloContext) -> bool:
    """Whether ``p(q) = 0``.

    In characteristic ``p > 0`` the answer must not depend on which primitive
    ``l'``-th root ``q`` is; it is decided through ``gcd(p, Phi_l')`` over
    ``F_p`` and a ``ValueError`` is raised when the root choice matters.
    Gaussian binomials never hit that case.
    """
    p = LaurentPoly.coerce(p)
    char = ctx.field_char
    if char == 0:
        return eval_at_q(p, ctx).is_zero()
    if p.is_zero():
        return True
    if ctx.l_prime == INFINITY:
        return all(a % char == 0 for _, a in p.items())
    lo = p.min_exp()
    dense = [0] * (p.max_exp() - lo + 1)
    for e, a in p.items():
        dense[e - lo] = a % char
    if not any(dense):
        return True
    phi = list(cyclotomic(ctx.l_prime))
    g = _fp_poly_gcd(dense, phi, char)
    if len(g) == 1:
        return False
    if len(g) == len(_fp_poly_trim([x % char for x in phi])):
        return True
    raise ValueError("vanishing depends on the choice of primitive root; not a Gaussian binomial")


def _binom_mod_p_nonzero(s: int, t: int, p: int) -> bool:
    while s or t:
        if t % p > s % p:
            return False
        s //= p
        t //= p
    return True


def lucas_nonzero(s: int, t: int, ctx: CycloContext) -> bool:
    """``[s brack t]_q != 0`` via the q-Lucas digit test (then Lucas mod ``p``)."""
    if t < 0 or s < 0:
        raise ValueError("lucas_nonzero needs s, t >= 0")
    if t > s:
        raise ValueError(f"lucas_nonzero needs t <= s, got s={s}, t={t}")
    if ctx.l == INFINITY:
        return True
    l = ctx.l
    s0, s1 = s % l, s // l
    t0, t1 = t % l, t // l
    if t0 > s0 or t1 > s1:
        return False
    if ctx.field_char:
        return _binom_mod_p_nonzero(s1, t1, ctx.field_char)
    return True


def product(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out
