"""Weights with an (m|n) parity split, partitions, compositions and their enumerators."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

INFINITY = math.inf


@dataclass(frozen=True)
class Weight:
    entries: tuple
    split: tuple  # (m, n)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        m, n = self.split
        object.__setattr__(self, "split", (int(m), int(n)))
        if m < 0 or n < 0:
            raise ValueError("split sizes must be nonnegative")
        if len(self.entries) != m + n:
            raise ValueError(f"weight {self.entries} has length {len(self.entries)}, split needs {m + n}")

    @classmethod
    def from_blocks(cls, even: Sequence[int], odd: Sequence[int]) -> "Weight":
        return cls(tuple(even) + tuple(odd), (len(even), len(odd)))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Read ``"a1,...,am|b1,...,bn"``."""
        if text.count("|") != 1:
            raise ValueError(f"expected exactly one '|' in {text!r}")
        left, right = text.split("|")
        return cls.from_blocks(_int_list(left), _int_list(right))

    @property
    def m(self) -> int:
        return self.split[0]

    @property
    def n(self) -> int:
        return self.split[1]

    @property
    def even(self) -> tuple:
        return self.entries[: self.m]

    @property
    def odd(self) -> tuple:
        return self.entries[self.m:]

    def parity(self, i: int) -> int:
        """Parity of the 1-based index ``i``."""
        return 0 if i <= self.m else 1

    def __getitem__(self, i: int) -> int:
        """1-based access, matching the usual lambda_i."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(i)
        return self.entries[i - 1]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def degree(self) -> int:
        return sum(self.entries)

    def __add__(self, other: "Weight") -> "Weight":
        _same_split(self, other)
        return Weight(tuple(a + b for a, b in zip(self, other)), self.split)

    def __sub__(self, other: "Weight") -> "Weight":
        _same_split(self, other)
        return Weight(tuple(a - b for a, b in zip(self, other)), self.split)

    def is_dominant(self) -> bool:
        e, o = self.even, self.odd
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1)) and all(
            o[i] >= o[i + 1] for i in range(len(o) - 1))

    def is_composition(self) -> bool:
        return all(x >= 0 for x in self.entries)

    def format(self) -> str:
        return ",".join(map(str, self.even)) + "|" + ",".join(map(str, self.odd))

    def __str__(self) -> str:
        return self.format()


def _int_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot read integer list {text!r}") from None


def parse_partition(text: str) -> tuple:
    """Comma separated parts; empty string is the empty partition."""
    parts = _int_list(text)
    return as_partition(parts)


def _same_split(a: Weight, b: Weight):
    if a.split != b.split:
        raise ValueError(f"split mismatch {a.split} vs {b.split}")


def unit(i: int, split) -> Weight:
    m, n = split
    e = [0] * (m + n)
    e[i - 1] = 1
    return Weight(tuple(e), split)


class Root(NamedTuple):
    i: int
    j: int

    def parity(self, m: int) -> int:
        return int((self.i <= m) != (self.j <= m))

    def is_positive(self) -> bool:
        return self.i < self.j

    def vector(self, split) -> Weight:
        return unit(self.i, split) - unit(self.j, split)


def alpha(i: int, j: int, split) -> Weight:
    if i == j:
        raise ValueError("alpha needs i != j")
    return Root(i, j).vector(split)


def positive_roots(m: int, n: int) -> list:
    N = m + n
    return [Root(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]


def super_dot(mu: Weight, nu: Weight) -> int:
    _same_split(mu, nu)
    m = mu.m
    return sum((1 if i < m else -1) * a * b for i, (a, b) in enumerate(zip(mu, nu)))


def root_order_leq(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam`` iff ``lam - mu`` is a nonnegative sum of simple roots."""
    _same_split(mu, lam)
    run = 0
    for a, b in zip(lam, mu):
        run += a - b
        if run < 0:
            return False
    return run == 0


def componentwise_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    if len(mu) != len(lam):
        raise ValueError("length mismatch")
    return all(a <= b for a, b in zip(mu, lam))


def dagger(seq):
    """Reverse a sequence (a Weight keeps its split)."""
    if isinstance(seq, Weight):
        return Weight(tuple(reversed(seq.entries)), seq.split)
    return tuple(reversed(tuple(seq)))


def super_dagger(lam: Weight) -> Weight:
    """``(lam^(0) | lam^(1))`` goes to ``(rev lam^(1) | rev lam^(0))`` with split ``(n, m)``."""
    return Weight.from_blocks(tuple(reversed(lam.odd)), tuple(reversed(lam.even)))


# ---------------------------------------------------------------------------
# partitions


def as_partition(parts: Sequence[int]) -> tuple:
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    return trim(parts)


def trim(parts: Sequence[int]) -> tuple:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def conjugate(lam: Sequence[int]) -> tuple:
    lam = trim(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def _partitions(r: int, max_part: int) -> tuple:
    if r == 0:
        return ((),)
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in _partitions(r - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(r: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[tuple]:
    """Partitions of ``r`` in reverse lexicographic order."""
    if r < 0:
        return
    for p in _partitions(r, r if max_part is None else max_part):
        if max_len is None or len(p) <= max_len:
            yield p


def is_restricted(lam: Sequence[int], l) -> bool:
    """``lam_i - lam_{i+1} < l`` for all ``i`` (with a trailing zero)."""
    if l == INFINITY:
        return True
    lam = tuple(lam) + (0,)
    return all(lam[i] - lam[i + 1] < l for i in range(len(lam) - 1))


def is_regular(lam: Sequence[int], l) -> bool:
    """No part repeated ``l`` or more times."""
    if l == INFINITY:
        return True
    lam = trim(lam)
    return not lam or _max_run(lam) < l


def _max_run(lam) -> int:
    best = run = 1
    for i in range(1, len(lam)):
        run = run + 1 if lam[i] == lam[i - 1] else 1
        best = max(best, run)
    return best


def l_restricted_partitions(r: int, l) -> Iterator[tuple]:
    for p in partitions(r):
        if is_restricted(p, l):
            yield p


def l_regular_partitions(r: int, l) -> Iterator[tuple]:
    for p in partitions(r):
        if is_regular(p, l):
            yield p


# ---------------------------------------------------------------------------
# compositions and dominant weights


def _compositions(r: int, k: int) -> Iterator[tuple]:
    if k == 0:
        if r == 0:
            yield ()
        return
    if k == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for rest in _compositions(r - first, k - 1):
            yield (first,) + rest


def enumerate_compositions(m: int, n: int, r: int) -> Iterator[Weight]:
    """All of Lambda(m|n, r)."""
    for c in _compositions(r, m + n):
        yield Weight(c, (m, n))


def enumerate_dominant(m: int, n: int, r: int) -> Iterator[Weight]:
    """Lambda^{++}(m|n, r): compositions of r with both blocks weakly decreasing."""
    for k in range(r, -1, -1):
        for p in partitions(k, max_len=m):
            even = p + (0,) * (m - len(p))
            for q in partitions(r - k, max_len=n):
                odd = q + (0,) * (n - len(q))
                yield Weight(even + odd, (m, n))
