"""Symmetric groups, Hecke algebras and the matrix index sets of q-Schur superalgebras.

Permutations are one-line tuples ``(w(1), ..., w(r))`` and compose as maps,
``(uw)(i) = u(w(i))``.  The Hecke parameter is ``q^2 = v^2``.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .qarith import ONE, LaurentPoly, vpow
from .weights import _compositions

# ---------------------------------------------------------------------------
# permutations

Perm = tuple


def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def simple(i: int, r: int) -> Perm:
    if not 1 <= i < r:
        raise ValueError(f"s_{i} is not a generator of S_{r}")
    w = list(range(1, r + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Perm, w: Perm) -> Perm:
    return tuple(u[x - 1] for x in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def right_mul_simple(w: Perm, i: int) -> Perm:
    """``w s_i``: swap positions ``i`` and ``i+1`` of the one-line form."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w: Perm) -> tuple:
    """Indices ``(i_1, ..., i_k)`` with ``w = s_{i_1} ... s_{i_k}`` and ``k = length(w)``."""
    w = list(w)
    out = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                out.append(i + 1)
                break
        else:
            return tuple(reversed(out))


def perm_dagger(w: Perm) -> Perm:
    """Conjugation by the longest element, so ``s_i`` goes to ``s_{r-i}``."""
    r = len(w)
    return tuple(r + 1 - w[r - i] for i in range(1, r + 1))


def all_perms(r: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, r + 1))


# ---------------------------------------------------------------------------
# Hecke algebra

Q2 = vpow(2)
Q2_MINUS_1 = Q2 - ONE


class HeckeElt:
    """Element of the Hecke algebra of ``S_r`` in the ``T_w`` basis."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: Mapping | None = None):
        self.r = r
        self.terms: dict = {}
        for w, c in (terms or {}).items():
            c = LaurentPoly.coerce(c)
            if len(w) != r:
                raise ValueError(f"{w} is not in S_{r}")
            if not c.is_zero():
                self.terms[tuple(w)] = self.terms.get(tuple(w), LaurentPoly()) + c
        self.terms = {w: c for w, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def _from_acc(cls, r: int, acc: dict) -> "HeckeElt":
        x = cls.__new__(cls)
        x.r = r
        x.terms = {w: c for w, c in acc.items() if not c.is_zero()}
        return x

    @classmethod
    def T(cls, w: Perm) -> "HeckeElt":
        return cls(len(w), {tuple(w): ONE})

    @classmethod
    def gen(cls, i: int, r: int) -> "HeckeElt":
        return cls.T(simple(i, r))

    @classmethod
    def one(cls, r: int) -> "HeckeElt":
        return cls.T(identity(r))

    def _check(self, other: "HeckeElt"):
        if self.r != other.r:
            raise ValueError(f"S_{self.r} vs S_{other.r}")

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, LaurentPoly()) + c
        return HeckeElt(self.r, out)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(-1)

    def scale(self, c) -> "HeckeElt":
        c = LaurentPoly.coerce(c)
        return HeckeElt(self.r, {w: x * c for w, x in self.terms.items()})

    def mul_simple(self, i: int) -> "HeckeElt":
        """Right multiplication by ``T_{s_i}``."""
        return HeckeElt._from_acc(self.r, _mul_simple_terms(self.terms, i))

    def __mul__(self, other: "HeckeElt") -> "HeckeElt":
        return hecke_mul(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElt) and self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (length(w), w)):
            word = reduced_word(w)
            name = "T_id" if not word else "T" + "".join(f"[{i}]" for i in word)
            parts.append(f"({self.terms[w]})*{name}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"w": list(w), "word": list(reduced_word(w)), "coeff": c.to_json()}
                for w, c in sorted(self.terms.items(), key=lambda t: (length(t[0]), t[0]))]


def _mul_simple_terms(terms: dict, i: int) -> dict:
    out: dict = {}
    for w, c in terms.items():
        ws = right_mul_simple(w, i)
        if w[i - 1] < w[i]:
            out[ws] = out[ws] + c if ws in out else c
        else:
            b = c.shift(2)
            a = b - c
            out[w] = out[w] + a if w in out else a
            out[ws] = out[ws] + b if ws in out else b
    return out


@lru_cache(maxsize=None)
def _reduced_word(w: Perm) -> tuple:
    return reduced_word(w)


def hecke_mul(x: HeckeElt, y: HeckeElt) -> HeckeElt:
    x._check(y)
    out: dict = {}
    for w, c in y.terms.items():
        acc = x.terms
        for i in _reduced_word(w):
            acc = _mul_simple_terms(acc, i)
        for u, a in acc.items():
            a = a * c
            out[u] = out[u] + a if u in out else a
    return HeckeElt._from_acc(x.r, out)


@lru_cache(maxsize=None)
def _sharp_T(w: Perm) -> HeckeElt:
    r = len(w)
    out = HeckeElt.one(r)
    for i in reduced_word(w):
        out = out * (HeckeElt.one(r).scale(Q2_MINUS_1) - HeckeElt.gen(i, r))
    return out


def sharp(x: HeckeElt) -> HeckeElt:
    """Algebra map with ``T_i -> (q^2 - 1) - T_i``."""
    out = HeckeElt(x.r)
    for w, c in x.terms.items():
        out = out + _sharp_T(w).scale(c)
    return out


def dagger_hecke(x: HeckeElt) -> HeckeElt:
    """``T_w -> T_{w^dagger}``."""
    return HeckeElt(x.r, {perm_dagger(w): c for w, c in x.terms.items()})


_HTOKEN = re.compile(r"\s*(?:(T)(\d+)|(Tid|1)|([+*()-]))")


def parse_hecke(expr: str, r: int) -> HeckeElt:
    """Read sums/products of ``T<i>`` and ``Tid`` such as ``"T1*T2 - T1 + Tid"``."""
    tokens = []
    pos = 0
    expr = expr.rstrip()
    while pos < len(expr):
        m = _HTOKEN.match(expr, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos}: {expr[pos:pos + 8]!r}")
        if m.group(1):
            tokens.append(("gen", int(m.group(2))))
        elif m.group(3):
            tokens.append(("one", None))
        else:
            tokens.append(("op", m.group(4)))
        pos = m.end()
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expr_():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        acc = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() == ("op", "*"):
            take()
            acc = acc * factor()
        return acc

    def factor():
        kind, val = peek()
        if kind == "gen":
            take()
            return HeckeElt.gen(val, r)
        if kind == "one":
            take()
            return HeckeElt.one(r)
        if (kind, val) == ("op", "("):
            take()
            e = expr_()
            if take() != ("op", ")"):
                raise ValueError("missing ')'")
            return e
        raise ValueError(f"unexpected token {val!r}")

    out = expr_()
    if i != len(tokens):
        raise ValueError(f"trailing input after token {i}")
    return out


# ---------------------------------------------------------------------------
# parabolic subgroups and double cosets


def row_blocks(lam: Sequence[int]) -> list:
    """``R^lam_i``: consecutive blocks of sizes ``lam_1, lam_2, ...``."""
    out, start = [], 1
    for part in lam:
        out.append(tuple(range(start, start + part)))
        start += part
    return out


def parabolic_data(lam: Sequence[int]) -> tuple:
    """Generators ``s_j`` of ``S_lam`` (as indices ``j``) and the row blocks."""
    blocks = row_blocks(lam)
    gens = [j for b in blocks for j in b[:-1]]
    return tuple(gens), blocks


def parabolic_elements(lam: Sequence[int], offset: int = 0) -> Iterator[Perm]:
    """All elements of ``S_lam`` acting on ``offset+1 .. offset+|lam|`` inside ``S_{offset+|lam|+...}``."""
    blocks = row_blocks(lam)
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        yield tuple(x + offset for img in choice for x in img)


def _increasing_on(w: Perm, blocks) -> bool:
    return all(w[b[k] - 1] < w[b[k + 1] - 1] for b in blocks for k in range(len(b) - 1))


def is_min_double_coset(lam, d: Perm, mu) -> bool:
    """``d`` is the shortest element of ``S_lam d S_mu``."""
    return _increasing_on(d, row_blocks(mu)) and _increasing_on(inverse(d), row_blocks(lam))


def min_double_cosets_bruteforce(lam, mu) -> list:
    """Minimal-length representatives by exhaustive search (test oracle)."""
    r = sum(lam)
    if sum(mu) != r:
        raise ValueError("lambda and mu must have the same size")
    return [d for d in all_perms(r) if is_min_double_coset(lam, d, mu)]


def matrix_to_perm(A) -> Perm:
    """The shortest ``d`` with ``|R^ro_i cap d(R^co_j)| = a_ij``.

    Column block ``j`` is cut top to bottom into pieces of sizes ``a_1j, a_2j, ...``;
    the piece for row ``i`` lands, in increasing order, in the slot of ``R^ro_i``
    reserved for column ``j`` (slots ordered left to right).
    """
    N = len(A)
    lam = [sum(row) for row in A]
    mu = [sum(A[i][j] for i in range(N)) for j in range(N)]
    rows, cols = row_blocks(lam), row_blocks(mu)
    r = sum(lam)
    d = [0] * r
    row_fill = [0] * N
    for j in range(N):
        k = 0
        for i in range(N):
            for _ in range(A[i][j]):
                d[cols[j][k] - 1] = rows[i][row_fill[i]]
                k += 1
                row_fill[i] += 1
    return tuple(d)


def min_double_cosets(lam, mu) -> Iterator[Perm]:
    """``D_{lam,mu}``, one representative per matrix with these row/column sums."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must have the same size")
    for A in _matrices_with_margins(lam, mu, None):
        yield matrix_to_perm(A)


def super_double_cosets(lam, mu, split) -> Iterator[Perm]:
    """``D°_{lam,mu}``: odd blocks of the matching matrix have entries at most 1."""
    m, n = split
    if len(lam) != m + n or len(mu) != m + n:
        raise ValueError("compositions must have m+n parts")
    for A in _matrices_with_margins(tuple(lam), tuple(mu), m):
        yield matrix_to_perm(A)


def _matrices_with_margins(lam, mu, m: int | None) -> Iterator[tuple]:
    """Matrices with row sums ``lam`` and column sums ``mu``; ``m`` caps odd entries at 1."""
    R, C = len(lam), len(mu)

    def cap(i, j):
        if m is None:
            return None
        return 1 if (i < m) != (j < m) else None

    def rec(i, colrem):
        if i == R:
            if not any(colrem):
                yield ()
            return
        for row in _rows(lam[i], colrem, [cap(i, j) for j in range(C)]):
            rest = tuple(c - x for c, x in zip(colrem, row))
            for tail in rec(i + 1, rest):
                yield (row,) + tail

    yield from rec(0, tuple(mu))


def _rows(total, colrem, caps, j=0):
    if j == len(colrem):
        if total == 0:
            yield ()
        return
    hi = min(total, colrem[j])
    if caps[j] is not None:
        hi = min(hi, caps[j])
    for x in range(hi, -1, -1):
        for tail in _rows(total - x, colrem, caps, j + 1):
            yield (x,) + tail


# ---------------------------------------------------------------------------
# matrices


def ro(A) -> tuple:
    return tuple(sum(row) for row in A)


def co(A) -> tuple:
    N = len(A)
    return tuple(sum(A[i][j] for i in range(N)) for j in range(N))


def norm(A) -> int:
    return sum(sum(row) for row in A)


def as_matrix(rows) -> tuple:
    A = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != len(A) for row in A):
        raise ValueError("matrix must be square")
    if any(x < 0 for row in A for x in row):
        raise ValueError("matrix entries must be nonnegative")
    return A


def parse_matrix(text: str) -> tuple:
    """Rows separated by ``;``, entries by ``,``."""
    try:
        return as_matrix([r.split(",") for r in text.strip().split(";")])
    except ValueError as exc:
        raise ValueError(f"bad matrix {text!r}: {exc}") from None


def format_matrix(A) -> str:
    return ";".join(",".join(map(str, row)) for row in A)


def _odd(i: int, j: int, m: int) -> bool:
    return (i < m) != (j < m)


def in_M(A, m: int, n: int, r: int | None = None) -> bool:
    if len(A) != m + n:
        return False
    if any(A[i][j] > 1 for i in range(m + n) for j in range(m + n) if _odd(i, j, m)):
        return False
    return r is None or norm(A) == r


def in_P(A, m: int, n: int) -> bool:
    return in_M(A, m, n) and all(A[i][i] == 0 for i in range(m + n))


def iota(lam, d: Perm, mu) -> tuple:
    """``a_ij = |R^lam_i cap d(R^mu_j)|``."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("lambda and mu need the same number of parts")
    if sum(lam) != len(d) or sum(mu) != len(d):
        raise ValueError("sizes of lambda, mu and d disagree")
    if not is_min_double_coset(lam, d, mu):
        raise ValueError(f"{d} is not a minimal double coset representative")
    rows = [set(b) for b in row_blocks(lam)]
    images = [{d[x - 1] for x in b} for b in row_blocks(mu)]
    return tuple(tuple(len(R & D) for D in images) for R in rows)


def iota_inverse(A) -> tuple:
    """``(ro(A), d, co(A))`` with ``iota(ro, d, co) = A``."""
    A = as_matrix(A)
    return ro(A), matrix_to_perm(A), co(A)


def matrix_dagger(A) -> tuple:
    """``a^dagger_ij = a_{N-j+1, N-i+1}``."""
    N = len(A)
    return tuple(tuple(A[N - 1 - j][N - 1 - i] for j in range(N)) for i in range(N))


def content(A) -> tuple:
    """``chi_h = sum_{i<h} (a_ih + a_hi)``."""
    N = len(A)
    return tuple(sum(A[i][h] + A[h][i] for i in range(h)) for h in range(N))


def enumerate_M(m: int, n: int, r: int) -> Iterator[tuple]:
    """``M(m|n, r)``."""
    N = m + n
    cells = [(i, j) for i in range(N) for j in range(N)]
    odd_cells = {k for k, (i, j) in enumerate(cells) if _odd(i, j, m)}
    for c in _compositions(r, len(cells)):
        if any(c[k] > 1 for k in odd_cells):
            continue
        yield tuple(tuple(c[i * N + j] for j in range(N)) for i in range(N))


def enumerate_P(m: int, n: int, max_norm: int) -> Iterator[tuple]:
    """Elements of ``P(m|n)`` with ``|A| <= max_norm``."""
    for k in range(max_norm + 1):
        for A in enumerate_M(m, n, k):
            if all(A[i][i] == 0 for i in range(m + n)):
                yield A


def enumerate_Y(m: int, n: int, r: int) -> Iterator[tuple]:
    """Pairs ``(A, lam)`` with ``A`` in ``P(m|n)``, ``lam`` in ``Lambda(m|n, r)`` and ``chi(A) <= lam``."""
    lams = list(_compositions(r, m + n))
    # the entries of chi(A) add up to |A|, so |A| <= r
    for A in enumerate_P(m, n, r):
        chi = content(A)
        for lam in lams:
            if all(a <= b for a, b in zip(chi, lam)):
                yield A, lam


# ---------------------------------------------------------------------------
# x_lam y_lam


def xy_element(lam, split) -> HeckeElt:
    """``x_{lam^(0)} y_{lam^(1)}``, the odd parabolic sitting after ``|lam^(0)|``."""
    m, n = split
    lam = tuple(lam)
    if len(lam) != m + n:
        raise ValueError("composition length must be m+n")
    even, odd = lam[:m], lam[m:]
    r = sum(lam)
    e_size = sum(even)
    x = HeckeElt(r, {w + tuple(range(e_size + 1, r + 1)): ONE for w in parabolic_elements(even)})
    y_terms = {}
    for w in parabolic_elements(odd, offset=e_size):
        full = tuple(range(1, e_size + 1)) + w
        ell = length(full)
        y_terms[full] = vpow(-2 * ell) * (-1) ** ell
    return x * HeckeElt(r, y_terms)
