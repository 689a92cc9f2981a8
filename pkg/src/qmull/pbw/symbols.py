"""Generator symbols for words in the quantum hyperalgebra of gl(m|n)."""
from __future__ import annotations

import re
from typing import NamedTuple, Union


class RootPow(NamedTuple):
    """Divided power ``E_{a,b}^{(M)}``; raising when ``a < b``."""

    a: int
    b: int
    M: int

    def __str__(self):
        return f"E({self.a},{self.b},{self.M})"


class CartanPow(NamedTuple):
    """``K_a`` or ``K_a^{-1}``."""

    a: int
    d: int

    def __str__(self):
        return f"K({self.a},{'+1' if self.d > 0 else '-1'})"


class CartanBinom(NamedTuple):
    """``[K_a; c brack t]`` when ``b`` is None, else ``[K_{a,b}; c brack t]``."""

    a: int
    b: int | None
    c: int
    t: int

    def __str__(self):
        if self.b is None:
            return f"KB({self.a},{self.c},{self.t})"
        return f"KB2({self.a},{self.b},{self.c},{self.t})"


Symbol = Union[RootPow, CartanPow, CartanBinom]
Word = tuple


class Split(NamedTuple):
    m: int
    n: int

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        return 0 if i <= self.m else 1

    def root_parity(self, a: int, b: int) -> int:
        return (self.parity(a) + self.parity(b)) % 2


def is_raising(s) -> bool:
    return type(s) is RootPow and s.a < s.b


def is_lowering(s) -> bool:
    return type(s) is RootPow and s.a > s.b


def is_cartan(s) -> bool:
    return type(s) is not RootPow


def symbol_parity(s, split: Split) -> int:
    if type(s) is RootPow:
        return split.root_parity(s.a, s.b) * (s.M % 2)
    return 0


def word_parity(word, split: Split) -> int:
    return sum(symbol_parity(s, split) for s in word) % 2


def check_symbol(s, split: Split) -> None:
    N = split.size
    if type(s) is RootPow:
        if not (1 <= s.a <= N and 1 <= s.b <= N) or s.a == s.b:
            raise ValueError(f"bad root indices in {s}")
        if s.M < 1:
            raise ValueError(f"divided power exponent must be positive in {s}")
    elif type(s) is CartanPow:
        if not 1 <= s.a <= N or s.d not in (1, -1):
            raise ValueError(f"bad Cartan symbol {s}")
    else:
        if not 1 <= s.a <= N or (s.b is not None and not (1 <= s.b <= N and s.b != s.a)):
            raise ValueError(f"bad Cartan binomial {s}")
        if s.t < 0:
            raise ValueError(f"negative t in {s}")


# ---------------------------------------------------------------------------
# text grammar:  E(a,b,M)  K(a,+1)  K(a,-1)  KB(a,c,t)  KB2(a,b,c,t)


class WordSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_NAME = re.compile(r"KB2|KB|E|K")
_INT = re.compile(r"[+-]?\d+")
_ARITY = {"E": 3, "K": 2, "KB": 3, "KB2": 4}


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, ch: str):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise WordSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise WordSyntaxError("expected one of E, K, KB, KB2", self.pos)
        self.pos = m.end()
        return m.group(0)

    def integer(self) -> int:
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise WordSyntaxError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group(0))

    def symbol(self):
        self.skip_ws()
        start = self.pos
        head = self.name()
        self.expect("(")
        args = [self.integer()]
        while True:
            self.skip_ws()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                args.append(self.integer())
            else:
                break
        self.expect(")")
        if len(args) != _ARITY[head]:
            raise WordSyntaxError(f"{head} takes {_ARITY[head]} arguments, got {len(args)}", start)
        if head == "E":
            return RootPow(*args)
        if head == "K":
            if args[1] not in (1, -1):
                raise WordSyntaxError("K exponent must be +1 or -1", start)
            return CartanPow(*args)
        if head == "KB":
            return CartanBinom(args[0], None, args[1], args[2])
        return CartanBinom(*args)


def parse_word(text: str) -> tuple:
    """Parse a whitespace separated word such as ``"E(1,2,1) K(2,-1)"``."""
    r = _Reader(text)
    out = []
    while not r.at_end():
        out.append(r.symbol())
    return tuple(out)


def format_word(word) -> str:
    return " ".join(str(s) for s in word)
