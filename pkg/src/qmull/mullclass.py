"""The j_l statistic, polynomial highest weights, and a rim-stripping Mullineux oracle."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .qarith import INFINITY, CycloContext, eval_at_q, product, quantum_int
from .weights import Weight, alpha, conjugate, enumerate_dominant, is_restricted, partitions, trim


def _divides(l, x: int) -> bool:
    return x == 0 if l == INFINITY else x % l == 0


def _check_l(l):
    if l != INFINITY and (not isinstance(l, int) or l < 2):
        raise ValueError(f"l must be an integer >= 2 or infinity, got {l!r}")


@dataclass(frozen=True)
class JlTrace:
    parts: tuple
    x: tuple
    j: int

    def to_json(self) -> dict:
        return {"partition": list(self.parts), "x": list(self.x), "j": self.j}


@lru_cache(maxsize=None)
def _jl_bits(parts: tuple, l) -> tuple:
    x = [0] * len(parts)
    tail = 0
    for i in range(len(parts) - 1, -1, -1):
        x[i] = 0 if _divides(l, parts[i] + tail) else 1
        tail += x[i]
    return tuple(x)


def jl(lam: Sequence[int], l) -> JlTrace:
    """Run ``x_i = 1`` iff ``l`` does not divide ``lam_i + x_{i+1} + ... + x_d``, for ``i = d..1``."""
    _check_l(l)
    parts = trim(lam)
    x = _jl_bits(parts, l)
    return JlTrace(parts, x, sum(x))


def _check_indices(indices, d: int):
    prev = 0
    for i in indices:
        if i <= prev or i > d:
            raise ValueError(f"indices must increase strictly within 1..{d}, got {tuple(indices)}")
        prev = i


@lru_cache(maxsize=None)
def _sub_check(values: tuple, ctx: CycloContext) -> tuple:
    t = len(values)
    j_ok = sum(_jl_bits(values, ctx.l)) == t
    prod = product(quantum_int(v + t - s) for s, v in enumerate(values, start=1))
    return j_ok, not eval_at_q(prod, ctx).is_zero()


def jl_subsequence_check(lam: Sequence[int], indices: Sequence[int], l, ctx: CycloContext | None = None) -> tuple:
    """``(j_l(sub) == t, prod_s [lam_{i_s} + t - s]_q != 0)`` for the subsequence at ``indices``.

    The two flags always agree; both are returned so callers can check that.
    """
    _check_l(l)
    lam = trim(lam)
    _check_indices(indices, len(lam))
    if ctx is None:
        ctx = CycloContext.from_l(l)
    if ctx.l != l:
        raise ValueError(f"context has l={ctx.l}, expected {l}")
    values = tuple(lam[i - 1] for i in indices)
    return _sub_check(values, ctx)


def _check_hw(lam: Weight):
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if not lam.is_composition():
        raise ValueError(f"{lam} has negative entries")


def is_polynomial_hw(lam: Weight, l) -> bool:
    """``j_l(lam^(1)) <= lam_m``; with ``m = 0`` every dominant weight qualifies."""
    _check_l(l)
    _check_hw(lam)
    if lam.m == 0:
        return True
    return jl(lam.odd, l).j <= lam[lam.m]


@dataclass(frozen=True)
class Witness:
    indices: tuple
    weight: Weight
    product: object
    trace: JlTrace

    def to_json(self) -> dict:
        return {"indices": list(self.indices), "weight": self.weight.format(),
                "product": self.product.to_json(), "x": list(self.trace.x)}


def nonpoly_witness(lam: Weight, l, ctx: CycloContext | None = None) -> Witness:
    """Indices of the last ``lam_m + 1`` ones in the ``j_l`` trace of ``lam^(1)`` and the weight they reach."""
    if is_polynomial_hw(lam, l):
        raise ValueError(f"{lam} is polynomial for l={l}; no witness")
    if ctx is None:
        ctx = CycloContext.from_l(l)
    if ctx.l != l:
        raise ValueError(f"context has l={ctx.l}, expected {l}")
    m = lam.m
    k = lam[m] + 1
    trace = jl(lam.odd, l)
    ones = [i for i, b in enumerate(trace.x, start=1) if b]
    indices = tuple(ones[-k:])
    prod = product(quantum_int(lam[m] + lam[m + i] - t + 1) for t, i in enumerate(indices, start=1))
    if eval_at_q(prod, ctx).is_zero():
        raise AssertionError(f"witness product vanishes for {lam}, l={l}")
    wt = lam
    for i in indices:
        wt = wt - alpha(m, m + i, lam.split)
    assert wt[m] == -1
    return Witness(indices, wt, prod, trace)


def enumerate_classification(m: int, n: int, r: int, l) -> Iterator[Weight]:
    for lam in enumerate_dominant(m, n, r):
        if is_polynomial_hw(lam, l):
            yield lam


def hook_partition(lam: Weight) -> tuple:
    """``lam^(0)`` followed by the transpose of ``lam^(1)`` (a partition when ``lam`` is a member at infinity)."""
    return trim(tuple(lam.even) + conjugate(lam.odd))


# ---------------------------------------------------------------------------
# rim stripping


def _rim(lam: tuple) -> list:
    """Rim nodes ``(row, col)`` from the top right to the bottom left, 1-based."""
    out = []
    d = len(lam)
    for i in range(d):
        below = lam[i + 1] if i + 1 < d else 0
        for c in range(lam[i], max(below, 1) - 1, -1):
            out.append((i + 1, c))
    return out


def l_rim(lam: Sequence[int], l) -> list:
    """Nodes of the ``l``-rim: ``l``-segments along the rim, each starting at the end of a fresh row."""
    lam = trim(lam)
    if not lam:
        return []
    rim = _rim(lam)
    pos = {node: k for k, node in enumerate(rim)}
    d = len(lam)
    out = []
    start = 0
    while True:
        seg = rim[start:] if l == INFINITY else rim[start:start + l]
        out.extend(seg)
        low = seg[-1][0]
        if low == d:
            return out
        start = pos[(low + 1, lam[low])]


def remove_nodes(lam: Sequence[int], nodes) -> tuple:
    parts = list(trim(lam))
    for row, _ in nodes:
        parts[row - 1] -= 1
    out = trim(parts)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise AssertionError(f"removing {nodes} from {lam} left a non-partition")
    return out


def mullineux_columns(lam: Sequence[int], l) -> tuple:
    """Columns ``(|l-rim|, rows)`` of the Mullineux symbol of an ``l``-regular partition."""
    cols = []
    lam = trim(lam)
    while lam:
        rim = l_rim(lam, l)
        cols.append((len(rim), len(lam)))
        lam = remove_nodes(lam, rim)
    return tuple(cols)


def _is_regular(lam, l) -> bool:
    return is_restricted(conjugate(lam), l)


@lru_cache(maxsize=None)
def _symbol_table(r: int, l) -> dict:
    table = {}
    for p in partitions(r):
        if _is_regular(p, l):
            sym = mullineux_columns(p, l)
            if sym in table:
                raise AssertionError(f"symbol collision {p} and {table[sym]}")
            table[sym] = p
    return table


def classical_mullineux(lam: Sequence[int], l) -> tuple:
    """The Mullineux map on ``l``-regular partitions via ``(a, r) -> (a, a - r + eps)``."""
    lam = trim(lam)
    if not _is_regular(lam, l):
        raise ValueError(f"{lam} is not {l}-regular")
    cols = mullineux_columns(lam, l)
    image = tuple((a, a - r + (0 if _divides(l, a) else 1)) for a, r in cols)
    return _symbol_table(sum(lam), l)[image]


def mullineux_symbol(lam: Sequence[int], l) -> tuple:
    """Mullineux map on ``l``-restricted partitions, conjugated on both sides."""
    _check_l(l)
    lam = trim(lam)
    if not is_restricted(lam, l):
        raise ValueError(f"{lam} is not {l}-restricted")
    return conjugate(classical_mullineux(conjugate(lam), l))
