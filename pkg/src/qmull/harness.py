"""Seeded verification suites, one per acceptance property.

Every suite returns a :class:`SuiteResult`.  Random choices come from a
``random.Random(seed)`` so a run is reproducible; work that fans out over a
thread pool is reduced in input order.
"""
from __future__ import annotations

import itertools
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import mullclass, serganova, symhecke
from .pbw.engine import Engine, UElement
from .pbw.symbols import CartanBinom, CartanPow, RootPow, Split
from .pbw.verify import verify_comp, verify_lowe2, verify_non
from .qarith import INFINITY, CycloContext, gauss_binom, is_zero_at_q, lucas_nonzero
from .weights import (enumerate_compositions, enumerate_dominant, is_restricted,
                      l_restricted_partitions, partitions)

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def check(self, ok: bool, info) -> bool:
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(info() if callable(info) else info)
        return ok

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": [str(f) for f in self.failures], "details": self.details,
                "elapsed_s": round(self.elapsed, 3)}


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("QMULL_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items, threads: int | None = None) -> list:
    threads = thread_count() if threads is None else threads
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# j_l and classification


def suite_jinf(samples: int = 0, seed: int = 0, max_r: int = 12) -> SuiteResult:
    res = SuiteResult("jinf")
    for r in range(max_r + 1):
        for p in partitions(r):
            t = mullclass.jl(p, INFINITY)
            res.check(t.j == len(p), lambda: f"j_inf{p} = {t.j}")
    return res


def box_partitions(rows: int, cols: int):
    for r in range(rows * cols + 1):
        yield from partitions(r, max_part=cols, max_len=rows)


def suite_mull_lemma(samples: int = 0, seed: int = 0, rows: int = 6, cols: int = 8,
                     ls=range(2, 8)) -> SuiteResult:
    """Both flags of the subsequence check agree, and ``j_l`` is monotone under subsequences."""
    res = SuiteResult("mull-lemma")
    ctxs = {}
    for l in ls:
        # both orders of q that give this l
        ctxs[l] = [CycloContext(l)] if l % 2 and l >= 3 else []
        ctxs[l].append(CycloContext(2 * l))
    boxes = list(box_partitions(rows, cols))
    for l in ls:
        for lam in boxes:
            j_full = mullclass.jl(lam, l).j
            d = len(lam)
            for t in range(d + 1):
                for idx in itertools.combinations(range(1, d + 1), t):
                    sub = tuple(lam[i - 1] for i in idx)
                    res.check(mullclass.jl(sub, l).j <= j_full,
                              lambda: f"monotonicity lam={lam} idx={idx} l={l}")
                    for ctx in ctxs[l]:
                        a, b = mullclass.jl_subsequence_check(lam, idx, l, ctx)
                        res.check(a == b, lambda: f"lam={lam} idx={idx} l={l} l'={ctx.l_prime}: {a} vs {b}")
    res.details = {"partitions": len(boxes), "l": list(ls)}
    return res


def suite_lucas(samples: int = 0, seed: int = 0, max_s: int = 40, lprimes=range(3, 13)) -> SuiteResult:
    res = SuiteResult("lucas")
    for lp in lprimes:
        ctx = CycloContext(lp)
        for s in range(max_s + 1):
            for t in range(s + 1):
                fast = lucas_nonzero(s, t, ctx)
                exact = not is_zero_at_q(gauss_binom(s, t), ctx)
                res.check(fast == exact, lambda: f"s={s} t={t} l'={lp}: lucas {fast} exact {exact}")
    return res


def suite_non(samples: int = 50, seed: int = 0, max_mnr: int = 5, ls=range(2, 6)) -> SuiteResult:
    """Every non-member has a witness; a seeded subsample is confirmed by the engine."""
    res = SuiteResult("non")
    cases = []
    for m in range(max_mnr + 1):
        for n in range(max_mnr + 1):
            if m + n == 0:
                continue
            for r in range(max_mnr + 1):
                for lam in enumerate_dominant(m, n, r):
                    for l in ls:
                        if not mullclass.is_polynomial_hw(lam, l):
                            cases.append((lam, l))
    for lam, l in cases:
        try:
            w = mullclass.nonpoly_witness(lam, l)
        except AssertionError as exc:
            res.check(False, f"{lam} l={l}: {exc}")
            continue
        ctx = CycloContext.from_l(l)
        res.check(len(w.indices) == lam[lam.m] + 1, lambda: f"{lam} l={l}: wrong index count")
        res.check(not is_zero_at_q(w.product, ctx), lambda: f"{lam} l={l}: product vanishes")
        res.check(w.weight[lam.m] == -1, lambda: f"{lam} l={l}: witness {w.weight}")
    rng = random.Random(seed)
    sub = rng.sample(cases, min(samples, len(cases)))
    engines: dict = {}
    for lam, l in sub:
        eng = engines.setdefault(lam.split, Engine(*lam.split))
        out = verify_non(lam, l, engine=eng)
        res.check(out.ok, lambda: f"engine {lam} l={l}: {out}")
    res.details = {"non_members": len(cases), "engine_checked": len(sub)}
    return res


# ---------------------------------------------------------------------------
# Mullineux and Serganova


def _restricted_sweep(max_r: int, ls):
    for l in ls:
        for r in range(max_r + 1):
            for p in l_restricted_partitions(r, l):
                yield p, l


def suite_involution(samples: int = 0, seed: int = 0, max_r: int = 8, ls=range(2, 8)) -> SuiteResult:
    res = SuiteResult("involution")
    res.check(serganova.mull_via_serganova((2, 1), 3) == (1, 1, 1), "anchor M_3(2,1) != (1,1,1)")
    for p, l in _restricted_sweep(max_r, ls):
        a = serganova.mull_via_serganova(p, l)
        b = mullclass.mullineux_symbol(p, l)
        res.check(a == b, lambda: f"l={l} {p}: serganova {a} symbol {b}")
        res.check(serganova.mull_via_serganova(a, l) == p, lambda: f"l={l} {p}: M(M) != id")
        res.check(sum(a) == sum(p), lambda: f"l={l} {p}: size changed")
        res.check(is_restricted(a, l), lambda: f"l={l} {p}: {a} not restricted")
    return res


def suite_shape(samples: int = 0, seed: int = 0, max_r: int = 8, ls=range(2, 8)) -> SuiteResult:
    res = SuiteResult("shape")
    for p, l in _restricted_sweep(max_r, ls):
        r = sum(p)
        tr = serganova.serganova_tilde(serganova.embed_x(p, r, r), l)
        t = tr.final
        odd = t.odd
        res.check(not any(t.even), lambda: f"l={l} {p}: even block {t.even}")
        res.check(all(odd[i] >= odd[i + 1] for i in range(len(odd) - 1)) and min(odd, default=0) >= 0,
                  lambda: f"l={l} {p}: odd block {odd}")
        res.check(all(s.weight.degree() == r for s in tr.steps), lambda: f"l={l} {p}: sum drift")
    return res


def suite_sigma(samples: int = 0, seed: int = 0, max_n: int = 4, max_r: int = 4, ls=(2, 3, 5)) -> SuiteResult:
    res = SuiteResult("sigma")
    for n in range(max_n + 1):
        for r in range(max_r + 1):
            for lam in enumerate_dominant(n, n, r):
                for l in ls:
                    try:
                        back = serganova.sigma_weight(serganova.sigma_weight(lam, l), l)
                    except ValueError as exc:
                        res.check(False, f"{lam} l={l}: {exc}")
                        continue
                    res.check(back == lam, lambda: f"{lam} l={l}: sigma^2 = {back}")
    return res


# ---------------------------------------------------------------------------
# engine suites


def random_comp_instance(rng: random.Random, max_size: int = 5, max_sum: int = 5, max_entry: int = 6):
    while True:
        N = rng.randint(2, max_size)
        m = rng.randint(0, N)
        split = Split(m, N - m)
        h = rng.randint(1, N - 1)
        s = rng.randint(1, N - h)
        indices = sorted(rng.sample(range(h + 1, N + 1), s))
        exps = []
        budget = max_sum
        for i in indices:
            if budget == 0:
                break
            odd = (h <= m) != (i <= m)
            a = 1 if odd else rng.randint(1, min(3, budget))
            exps.append(a)
            budget -= a
        indices = indices[:len(exps)]
        if not exps:
            continue
        lam = tuple(rng.randint(0, max_entry) for _ in range(N))
        return split, h, tuple(indices), tuple(exps), lam


COMP_LPRIMES = (3, 4, 5, 7)


def suite_comp(samples: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("comp")
    rng = random.Random(seed)
    instances = [random_comp_instance(rng) for _ in range(samples)]
    engines = {Split(m, N - m): Engine(m, N - m) for N in range(2, 6) for m in range(N + 1)}
    ctxs = [CycloContext(lp) for lp in COMP_LPRIMES]

    def run(inst):
        split, h, idx, exps, lam = inst
        out = verify_comp(h, idx, exps, lam, split=split, engine=engines[split])
        at_q = [verify_comp(h, idx, exps, lam, ctx, split=split, engine=engines[split]).equal_at_q
                for ctx in ctxs]
        return inst, out, at_q

    for inst, out, at_q in _map(run, instances):
        res.check(out.equal, lambda: f"{inst}: engine {out.engine_value} closed {out.closed_form}")
        res.check(all(at_q), lambda: f"{inst}: mismatch at q {at_q}")
    res.details = {"instances": len(instances), "lprimes": list(COMP_LPRIMES)}
    return res


LOWE2_LPRIMES = (INFINITY, 3, 4)


def suite_lowe2(samples: int = 0, seed: int = 0, max_m: int = 4, max_entry: int = 4,
                lprimes=LOWE2_LPRIMES) -> SuiteResult:
    res = SuiteResult("lowe2")
    exact = total = 0
    for m in range(1, max_m + 1):
        eng = Engine(m, 0)
        for lam in itertools.combinations_with_replacement(range(max_entry, -1, -1), m):
            for lp in lprimes:
                tr = verify_lowe2(lam, CycloContext(lp), eng)
                res.check(tr.ok, lambda: f"lam={lam} l'={lp}: stage {tr.first_failure()}")
                exact += sum(s.exact_recovery for s in tr.stages)
                total += len(tr.stages)
    res.details = {"stages": total, "exact_in_verma": exact, "lprimes": [str(x) for x in lprimes]}
    return res


def _odd_roots(split: Split):
    N = split.size
    return [(a, b) for a in range(1, N + 1) for b in range(1, N + 1)
            if a != b and (a <= split.m) != (b <= split.m)]


def _random_symbol(rng: random.Random, split: Split):
    N = split.size
    kind = rng.random()
    if kind < 0.7 or N < 2:
        a, b = rng.sample(range(1, N + 1), 2) if N >= 2 else (1, 1)
        if a == b:
            return CartanPow(1, rng.choice((1, -1)))
        odd = (a <= split.m) != (b <= split.m)
        return RootPow(a, b, 1 if odd else rng.randint(1, 2))
    if kind < 0.85:
        return CartanPow(rng.randint(1, N), rng.choice((1, -1)))
    a = rng.randint(1, N)
    if rng.random() < 0.5:
        return CartanBinom(a, None, rng.randint(-2, 2), rng.randint(0, 2))
    b = rng.choice([x for x in range(1, N + 1) if x != a])
    return CartanBinom(a, b, rng.randint(-2, 2), rng.randint(0, 2))


def suite_odd_square(samples: int = 200, seed: int = 0, max_size: int = 6) -> SuiteResult:
    res = SuiteResult("odd-square")
    for N in range(2, max_size + 1):
        for m in range(1, N):
            eng = Engine(m, N - m)
            for a, b in _odd_roots(eng.split):
                x = RootPow(a, b, 1)
                out = eng.normalize(UElement.word(eng.split, (x, x)))
                res.check(out.is_zero(), lambda: f"({m}|{N - m}) {x}^2 = {out}")
    rng = random.Random(seed)
    engines: dict = {}
    for _ in range(samples):
        N = rng.randint(2, 4)
        m = rng.randint(1, N - 1)
        split = Split(m, N - m)
        eng = engines.setdefault(split, Engine(m, N - m))
        a, b = rng.choice(_odd_roots(split))
        left = [_random_symbol(rng, split) for _ in range(rng.randint(0, 3))]
        right = [_random_symbol(rng, split) for _ in range(rng.randint(0, 3))]
        word = tuple(left) + (RootPow(a, b, 1), RootPow(a, b, 1)) + tuple(right)
        lam = tuple(rng.randint(0, 4) for _ in range(N))
        vec = eng.act_on_hw(word, lam)
        res.check(vec.is_zero(), lambda: f"{split} {word} on {lam}: {vec}")
    return res


# ---------------------------------------------------------------------------
# combinatorics of the Schur superalgebra and the Hecke algebra


def suite_index(samples: int = 0, seed: int = 0, max_mn: int = 2, max_r: int = 4) -> SuiteResult:
    res = SuiteResult("index")
    counts = {}
    for m in range(max_mn + 1):
        for n in range(max_mn + 1):
            if m + n == 0:
                continue
            for r in range(max_r + 1):
                Ms = set(symhecke.enumerate_M(m, n, r))
                comps = [w.entries for w in enumerate_compositions(m, n, r)]
                images = []
                for lam in comps:
                    for mu in comps:
                        for d in symhecke.min_double_cosets_bruteforce(lam, mu):
                            A = symhecke.iota(lam, d, mu)
                            if not symhecke.in_M(A, m, n):
                                continue
                            images.append(A)
                            res.check(symhecke.ro(A) == lam and symhecke.co(A) == mu,
                                      lambda: f"ro/co of iota({lam},{d},{mu})")
                            res.check(symhecke.iota_inverse(A) == (lam, d, mu),
                                      lambda: f"iota_inverse({A})")
                res.check(len(images) == len(set(images)), lambda: f"iota not injective ({m}|{n},{r})")
                res.check(set(images) == Ms, lambda: f"iota image != M({m}|{n},{r})")
                y = sum(1 for _ in symhecke.enumerate_Y(m, n, r))
                res.check(y == len(Ms), lambda: f"|Y({m}|{n},{r})| = {y} vs |M| = {len(Ms)}")
                for A in Ms:
                    D = symhecke.matrix_dagger(A)
                    res.check(symhecke.matrix_dagger(D) == A, lambda: f"dagger^2 {A}")
                    res.check(symhecke.ro(D) == tuple(reversed(symhecke.co(A)))
                              and symhecke.co(D) == tuple(reversed(symhecke.ro(A))),
                              lambda: f"ro/co of dagger {A}")
                counts[f"{m}|{n},{r}"] = len(Ms)
    for m in range(1, 4):
        for r in range(6):
            got = sum(1 for _ in symhecke.enumerate_M(m, 0, r))
            want = math.comb(m * m + r - 1, r)
            res.check(got == want, lambda: f"|M({m}|0,{r})| = {got}, expected {want}")
    res.details = {"sizes": counts}
    return res


def _relations_hold(phi, r: int) -> bool:
    T = lambda i: phi(symhecke.HeckeElt.gen(i, r))  # noqa: E731
    one = phi(symhecke.HeckeElt.one(r))
    if one != symhecke.HeckeElt.one(r):
        return False
    for i in range(1, r):
        Ti = T(i)
        if Ti * Ti - Ti.scale(symhecke.Q2_MINUS_1) - one.scale(symhecke.Q2) != symhecke.HeckeElt(r):
            return False
        for j in range(i + 1, r):
            Tj = T(j)
            if j == i + 1:
                if Ti * Tj * Ti != Tj * Ti * Tj:
                    return False
            elif Ti * Tj != Tj * Ti:
                return False
    return True


def _random_hecke(rng: random.Random, perms: list, r: int):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[rng.choice(perms)] = symhecke.vpow(rng.randint(-2, 2)) * rng.choice((1, -1, 2))
    return symhecke.HeckeElt(r, terms)


def suite_hecke(samples: int = 500, seed: int = 0, max_r: int = 4, big_r: int = 5) -> SuiteResult:
    res = SuiteResult("hecke")
    maps = {"sharp": symhecke.sharp, "dagger": symhecke.dagger_hecke}
    for r in range(1, max_r + 1):
        for i in range(1, r):
            Ti = symhecke.HeckeElt.gen(i, r)
            rhs = Ti.scale(symhecke.Q2_MINUS_1) + symhecke.HeckeElt.one(r).scale(symhecke.Q2)
            res.check(Ti * Ti == rhs, f"quadratic relation fails for T_{i} in S_{r}")
        for name, phi in maps.items():
            res.check(_relations_hold(phi, r), f"{name} breaks a defining relation in S_{r}")
        perms = list(symhecke.all_perms(r))
        for w in perms:
            x = symhecke.HeckeElt.T(w)
            for name, phi in maps.items():
                res.check(phi(phi(x)) == x, f"{name} not involutive on T_{w}")
            res.check(symhecke.sharp(symhecke.dagger_hecke(x)) == symhecke.dagger_hecke(symhecke.sharp(x)),
                      f"sharp and dagger do not commute on T_{w}")
            res.check(symhecke.length(symhecke.perm_dagger(w)) == symhecke.length(w),
                      f"length changes under dagger for {w}")
        for w in perms:
            for u in perms:
                x, y = symhecke.HeckeElt.T(w), symhecke.HeckeElt.T(u)
                for name, phi in maps.items():
                    res.check(phi(x * y) == phi(x) * phi(y), f"{name} not multiplicative on T_{w} T_{u}")
    rng = random.Random(seed)
    perms = list(symhecke.all_perms(big_r))
    for name, phi in maps.items():
        res.check(_relations_hold(phi, big_r), f"{name} breaks a defining relation in S_{big_r}")
    for _ in range(samples):
        x, y = _random_hecke(rng, perms, big_r), _random_hecke(rng, perms, big_r)
        for name, phi in maps.items():
            res.check(phi(x * y) == phi(x) * phi(y), lambda: f"{name}: {x} * {y}")
    return res


SUITES = {
    "jinf": suite_jinf,
    "mull-lemma": suite_mull_lemma,
    "lucas": suite_lucas,
    "involution": suite_involution,
    "shape": suite_shape,
    "sigma": suite_sigma,
    "comp": suite_comp,
    "non": suite_non,
    "lowe2": suite_lowe2,
    "index": suite_index,
    "hecke": suite_hecke,
    "odd-square": suite_odd_square,
}

DEFAULT_SAMPLES = {"comp": 200, "non": 50, "hecke": 500, "odd-square": 200}


def run_suite(name: str, samples: int | None = None, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if samples is None:
        samples = DEFAULT_SAMPLES.get(name, 0)
    start = time.perf_counter()
    res = SUITES[name](samples=samples, seed=seed)
    res.elapsed = time.perf_counter() - start
    return res
