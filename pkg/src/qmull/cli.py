"""Command line front end: ``qmull <command> [options]``.

Every command prints one JSON object (default), a ``key: value`` text
rendering, or a single JSON line.  ``qmull batch`` reads request objects
``{"cmd": ..., "args": {...}}`` from stdin, one per line.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness, mullclass, serganova, symhecke
from .pbw.engine import Engine
from .pbw.symbols import format_word, parse_word
from .qarith import (INFINITY, CycloContext, eval_at_q, gauss_binom, is_zero_at_q,
                     lucas_nonzero)
from .weights import Weight, enumerate_dominant, parse_partition

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _l_value(text: str):
    t = str(text).strip().lower()
    if t in ("inf", "infinity", "oo"):
        return INFINITY
    try:
        l = int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}") from None
    if l < 2:
        raise argparse.ArgumentTypeError("l must be at least 2")
    return l


def _lprime_value(text: str):
    t = str(text).strip().lower()
    if t in ("inf", "infinity", "oo"):
        return INFINITY
    try:
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}") from None


def _int_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated integer list, got {text!r}") from None


def _jsonable_l(l):
    return "inf" if l == INFINITY else l


def _context(args) -> CycloContext:
    """``--lprime`` wins over ``--l``; neither means generic ``q``."""
    char = getattr(args, "char", 0) or 0
    lp = getattr(args, "lprime", None)
    if lp is not None:
        return CycloContext(lp, char)
    l = getattr(args, "l", None)
    if l is not None:
        return CycloContext.from_l(l, char)
    return CycloContext(INFINITY, char)


# ---------------------------------------------------------------------------
# commands; each returns (payload, ok)


def cmd_qbinom(args):
    ctx = _context(args)
    value = gauss_binom(args.s, args.t)
    out = {"s": args.s, "t": args.t, "lprime": _jsonable_l(ctx.l_prime), "l": _jsonable_l(ctx.l),
           "char": ctx.field_char, "value": value.to_json()}
    if 0 <= args.t <= args.s:
        out["lucas_nonzero"] = lucas_nonzero(args.s, args.t, ctx)
    if ctx.field_char:
        out["zero"] = not out["lucas_nonzero"] if "lucas_nonzero" in out else is_zero_at_q(value, ctx)
    else:
        out["at_q"] = eval_at_q(value, ctx).to_json()
        out["zero"] = is_zero_at_q(value, ctx)
    return out, True


def cmd_jl(args):
    t = mullclass.jl(args.partition, args.l)
    return {"partition": list(t.parts), "l": _jsonable_l(args.l), "x": list(t.x), "j": t.j}, True


def cmd_classify(args):
    members, witnesses = [], []
    total = 0
    for lam in enumerate_dominant(args.m, args.n, args.r):
        total += 1
        if mullclass.is_polynomial_hw(lam, args.l):
            members.append(lam)
        elif args.witnesses:
            w = mullclass.nonpoly_witness(lam, args.l)
            witnesses.append({**w.to_json(), "weight": lam.format(), "reached": w.weight.format()})
    out = {"m": args.m, "n": args.n, "r": args.r, "l": _jsonable_l(args.l),
           "count": len(members), "dominant": total}
    if args.list or not (args.count or args.witnesses):
        out["members"] = [w.format() for w in members]
    if args.witnesses:
        out["witnesses"] = witnesses
    return out, True


def cmd_mull(args):
    out = {"partition": list(args.partition), "l": _jsonable_l(args.l), "method": args.method}
    if args.method in ("serganova", "both"):
        a = serganova.mull_via_serganova(args.partition, args.l)
        out["M"] = list(a)
    if args.method in ("symbol", "both"):
        b = mullclass.mullineux_symbol(args.partition, args.l)
        out["M_symbol" if args.method == "both" else "M"] = list(b)
    if args.method == "both":
        out["agree"] = out["M"] == out["M_symbol"]
        return out, out["agree"]
    return out, True


def cmd_serganova(args):
    tr = serganova.serganova_tilde(args.weight, args.l)
    return tr.to_json(with_steps=args.trace) | {"l": _jsonable_l(args.l)}, True


def cmd_sigma(args):
    s = serganova.sigma_weight(args.weight, args.l)
    return {"weight": args.weight.format(), "l": _jsonable_l(args.l), "sigma": s.format()}, True


def _composition(text: str):
    """Comma list, or pipe syntax giving a split as well."""
    if "|" in text:
        w = Weight.parse(text)
        return w.entries, w.split
    return _int_list(text), None


def cmd_cosets(args):
    lam, s1 = _composition(args.lam)
    mu, s2 = _composition(args.mu)
    if args.super:
        split = s1 or s2
        if split is None or (s1 and s2 and s1 != s2):
            raise UsageError("--super needs both compositions in the same 'a,b|c' split syntax")
        reps = list(symhecke.super_double_cosets(lam, mu, split))
    else:
        reps = list(symhecke.min_double_cosets(lam, mu))
    return {"lambda": list(lam), "mu": list(mu), "super": args.super, "count": len(reps),
            "representatives": [{"d": list(d), "matrix": symhecke.format_matrix(symhecke.iota(lam, d, mu))}
                                for d in reps]}, True


def cmd_iota(args):
    lam, _ = _composition(args.lam)
    mu, _ = _composition(args.mu)
    A = symhecke.iota(lam, args.d, mu)
    return {"matrix": symhecke.format_matrix(A), "ro": list(symhecke.ro(A)), "co": list(symhecke.co(A))}, True


def cmd_matrices(args):
    Ms = list(symhecke.enumerate_M(args.m, args.n, args.r))
    out = {"m": args.m, "n": args.n, "r": args.r, "count": len(Ms)}
    if not args.count:
        out["matrices"] = [symhecke.format_matrix(A) for A in Ms]
    return out, True


def cmd_daggermat(args):
    A = symhecke.parse_matrix(args.matrix)
    D = symhecke.matrix_dagger(A)
    return {"matrix": symhecke.format_matrix(A), "dagger": symhecke.format_matrix(D),
            "ro": list(symhecke.ro(D)), "co": list(symhecke.co(D))}, True


def cmd_hecke(args):
    x = symhecke.parse_hecke(args.expr, args.r)
    if args.sharp:
        x = symhecke.sharp(x)
    if args.dagger:
        x = symhecke.dagger_hecke(x)
    return {"r": args.r, "expr": args.expr, "sharp": args.sharp, "dagger": args.dagger,
            "terms": x.to_json(), "text": repr(x)}, True


def cmd_pbw(args):
    lam = args.lam
    if lam.split != (args.m, args.n):
        raise UsageError(f"--lambda has split {lam.split}, expected ({args.m}, {args.n})")
    word = parse_word(args.word)
    eng = Engine(args.m, args.n)
    vec = eng.act_on_hw(word, lam.entries)
    terms = []
    ctx = _context(args) if args.at_q else None
    for B, c in sorted(vec.terms.items(), key=lambda t: format_word(t[0])):
        item = {"F": format_word(B), "weight": list(vec.weight_of(B)), "coeff": c.to_json(), "text": repr(c)}
        if ctx is not None:
            e = eval_at_q(c, ctx)
            item["at_q"] = e.to_json()
            item["zero_at_q"] = e.is_zero()
        terms.append(item)
    return {"m": args.m, "n": args.n, "lambda": lam.format(), "word": format_word(word),
            "terms": terms, "zero": vec.is_zero()}, True


def cmd_verify(args):
    res = harness.run_suite(args.suite, args.samples, args.seed)
    return res.to_json() | {"seed": args.seed}, res.passed


COMMANDS = {
    "qbinom": cmd_qbinom, "jl": cmd_jl, "classify": cmd_classify, "mull": cmd_mull,
    "serganova": cmd_serganova, "sigma": cmd_sigma, "cosets": cmd_cosets, "iota": cmd_iota,
    "matrices": cmd_matrices, "daggermat": cmd_daggermat, "hecke": cmd_hecke, "pbw": cmd_pbw,
    "verify": cmd_verify,
}


def _weight_arg(text: str) -> Weight:
    try:
        return Weight.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition_arg(text: str) -> tuple:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=("json", "text", "jsonl"), default="json")
    common.add_argument("--lprime", type=_lprime_value, default=None, help="order of q")
    common.add_argument("--char", type=int, default=0, help="field characteristic (0 or an odd prime)")
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="qmull", description="Quantum gl(m|n) computations at roots of unity.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial and its zero test")
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--l", type=_l_value)

    s = sub.add_parser("jl", parents=[common], help="j_l trace of a partition")
    s.add_argument("--partition", type=_partition_arg, required=True)
    s.add_argument("--l", type=_l_value, required=True)

    s = sub.add_parser("classify", parents=[common], help="polynomial dominant weights")
    for name in ("m", "n", "r"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--l", type=_l_value, required=True)
    s.add_argument("--list", action="store_true")
    s.add_argument("--count", action="store_true")
    s.add_argument("--witnesses", action="store_true")

    s = sub.add_parser("mull", parents=[common], help="Mullineux map of an l-restricted partition")
    s.add_argument("--partition", type=_partition_arg, required=True)
    s.add_argument("--l", type=_l_value, required=True)
    s.add_argument("--method", choices=("serganova", "symbol", "both"), default="serganova")

    for name in ("serganova", "sigma"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--weight", type=_weight_arg, required=True)
        s.add_argument("--l", type=_l_value, required=True)
        if name == "serganova":
            s.add_argument("--trace", action="store_true")

    s = sub.add_parser("cosets", parents=[common], help="minimal double coset representatives")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--super", action="store_true")

    s = sub.add_parser("iota", parents=[common], help="matrix of a double coset")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--d", type=_int_list, required=True, help="one-line permutation")

    s = sub.add_parser("matrices", parents=[common], help="enumerate M(m|n,r)")
    for name in ("m", "n", "r"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--count", action="store_true")

    s = sub.add_parser("daggermat", parents=[common])
    s.add_argument("--matrix", required=True, help="rows separated by ';', entries by ','")

    s = sub.add_parser("hecke", parents=[common], help="Hecke algebra expression in T_w basis")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--expr", required=True)
    s.add_argument("--sharp", action="store_true")
    s.add_argument("--dagger", action="store_true")

    s = sub.add_parser("pbw", parents=[common], help="act with a word on a maximal vector")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=_weight_arg, required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--at-q", action="store_true")
    s.add_argument("--l", type=_l_value)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=list(harness.SUITES))
    s.add_argument("--samples", type=int, default=None)

    sub.add_parser("batch", parents=[common], help="JSONL requests on stdin")
    return p


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "jsonl":
        return json.dumps(payload, separators=(",", ":"))
    lines = []
    for k, v in payload.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v, separators=(",", ":"))
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def run(argv) -> tuple:
    """Parse and execute; returns ``(payload, exit_code)``."""
    args = build_parser().parse_args(argv)
    if args.cmd == "batch":
        raise UsageError("batch cannot be nested")
    if getattr(args, "char", 0) not in (0,) and args.cmd not in ("qbinom",):
        raise UsageError("--char applies to qbinom only")
    payload, ok = COMMANDS[args.cmd](args)
    return {"schema_version": SCHEMA_VERSION, "cmd": args.cmd} | payload, 0 if ok else 1


def _request_argv(req: dict) -> list:
    if not isinstance(req, dict) or "cmd" not in req:
        raise UsageError('request needs {"cmd": ..., "args": {...}}')
    argv = [str(req["cmd"])]
    for key, val in (req.get("args") or {}).items():
        flag = "--" + key.replace("_", "-")
        if key in ("suite",):
            argv.append(str(val))
        elif val is True:
            argv.append(flag)
        elif val is False or val is None:
            continue
        else:
            if isinstance(val, list):
                val = ",".join(map(str, val))
            argv.extend([flag, str(val)])
    return argv


def _batch(stream, out) -> int:
    worst = 0
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            argv = _request_argv(json.loads(line))
            payload, code = run(argv)
        except (UsageError, ValueError, KeyError, json.JSONDecodeError) as exc:
            payload, code = {"schema_version": SCHEMA_VERSION, "line": lineno, "error": str(exc)}, 2
        worst = max(worst, code)
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return worst


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv and argv[0] == "batch":
        try:
            build_parser().parse_args(argv)
        except UsageError as exc:
            print(f"qmull: error: {exc}", file=sys.stderr)
            return 2
        return _batch(sys.stdin, sys.stdout)
    fmt = "json"
    for i, a in enumerate(argv):
        if a == "--output" and i + 1 < len(argv):
            fmt = argv[i + 1]
        elif a.startswith("--output="):
            fmt = a.split("=", 1)[1]
    try:
        payload, code = run(argv)
    except (UsageError, ValueError) as exc:
        print(f"qmull: error: {exc}", file=sys.stderr)
        return 2
    print(_render(payload, fmt if fmt in ("json", "text", "jsonl") else "json"))
    if code == 1 and payload.get("failures"):
        print(f"qmull: first counterexample: {payload['failures'][0]}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
