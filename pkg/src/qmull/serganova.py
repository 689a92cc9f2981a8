"""Serganova's sweep over the odd positive roots, the sigma twist and the Mullineux map."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .qarith import INFINITY
from .weights import Weight, is_restricted, trim


def odd_schedule(m: int, n: int) -> list:
    """``beta_{(j-1)m+k} = alpha_{m-k+1, m+j}`` as index pairs ``(a, b)``."""
    return [(m - k + 1, m + j) for j in range(1, n + 1) for k in range(1, m + 1)]


@dataclass(frozen=True)
class Step:
    k: int
    root: tuple
    pairing: int
    applied: bool
    weight: Weight

    def to_json(self) -> dict:
        return {"k": self.k, "beta": list(self.root), "pairing": self.pairing,
                "applied": self.applied, "weight": self.weight.format()}


@dataclass
class SerganovaTrace:
    start: Weight
    steps: list = field(default_factory=list)

    @property
    def final(self) -> Weight:
        return self.steps[-1].weight if self.steps else self.start

    def applied(self) -> list:
        return [s.k for s in self.steps if s.applied]

    def to_json(self, with_steps: bool = True) -> dict:
        out = {"start": self.start.format(), "tilde": self.final.format(), "applied": self.applied()}
        if with_steps:
            out["steps"] = [s.to_json() for s in self.steps]
        return out


def _divides(l, x: int) -> bool:
    return x == 0 if l == INFINITY else x % l == 0


def serganova_tilde(lam: Weight, l) -> SerganovaTrace:
    """Subtract ``beta_k = e_a - e_b`` whenever ``l`` does not divide ``wt_a + wt_b``."""
    if l != INFINITY and (not isinstance(l, int) or l < 2):
        raise ValueError(f"l must be an integer >= 2 or infinity, got {l!r}")
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    trace = SerganovaTrace(lam)
    wt = list(lam.entries)
    for k, (a, b) in enumerate(odd_schedule(lam.m, lam.n), start=1):
        pairing = wt[a - 1] + wt[b - 1]
        hit = not _divides(l, pairing)
        if hit:
            wt[a - 1] -= 1
            wt[b - 1] += 1
        trace.steps.append(Step(k, (a, b), pairing, hit, Weight(tuple(wt), lam.split)))
    return trace


def sigma_weight(lam: Weight, l) -> Weight:
    """``(tilde^(1) | tilde^(0))``."""
    if lam.m != lam.n:
        raise ValueError("the sigma twist needs m = n")
    t = serganova_tilde(lam, l).final
    return Weight.from_blocks(t.odd, t.even)


def embed_x(lam: Sequence[int], m: int, n: int) -> Weight:
    lam = trim(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} parts")
    return Weight.from_blocks(lam + (0,) * (m - len(lam)), (0,) * n)


def embed_y(lam: Sequence[int], m: int, n: int) -> Weight:
    lam = trim(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return Weight.from_blocks((0,) * m, lam + (0,) * (n - len(lam)))


class ShapeError(AssertionError):
    """The sweep on ``x(lam)`` did not land on some ``y(mu)``."""


def mull_via_serganova(lam: Sequence[int], l, trace: bool = False):
    """Mullineux image read off from ``tilde(x(lam)) = y(M(lam))`` with ``m = n = |lam|``."""
    lam = trim(lam)
    if not is_restricted(lam, l):
        raise ValueError(f"{lam} is not {l}-restricted")
    r = sum(lam)
    tr = serganova_tilde(embed_x(lam, r, r), l)
    t = tr.final
    if any(t.even):
        raise ShapeError(f"even block of tilde(x({lam})) is {t.even}")
    odd = t.odd
    if any(odd[i] < odd[i + 1] for i in range(len(odd) - 1)) or any(x < 0 for x in odd):
        raise ShapeError(f"odd block {odd} is not a partition")
    out = trim(odd)
    return (out, tr) if trace else out
