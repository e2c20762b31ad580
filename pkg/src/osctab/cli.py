"""Command-line front end: ``osctab <command> ...``.

Exit codes: 0 success, 1 usage error (including an empty tableau set),
2 verification failure or brute/formula disagreement.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from itertools import islice
from typing import Any, Sequence

from osctab.errors import EmptySetError, UnknownFormula, ValidationError
from osctab.formulas import FORMULAS, asymptotic_coefficient, closed_form
from osctab.partitions import Partition, make_partition
from osctab.polyring import Poly, parse_poly
from osctab.psi import average_weight_formula, psi_apply, psi_inverse, psi_matrix, q_polynomial
from osctab.tableaux import (
    ContentWeight,
    HookWeight,
    WeightSpec,
    average_weight_bruteforce,
    count_oscillating,
    enumerate_oscillating,
)
from osctab.verify import CHECKS, VerifyConfig, run_all

ENUMERATE_CAP = 10**6
WORKERS_ENV = "OSCTAB_WORKERS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rational_str(q: Any) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _parse_partition(text: str) -> Partition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"partition must be a JSON array such as [4,2,2,1]: {exc}") from exc
    if not isinstance(data, list):
        raise UsageError("partition must be a JSON array such as [4,2,2,1]")
    try:
        return make_partition(data)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc


def _parse_poly(text: str) -> Poly:
    try:
        return parse_poly(text)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc


def parse_weight(text: str):
    """``hook:r``, ``content:r``, ``wt:a:b`` or polynomial text in x and y."""
    head, _, rest = text.partition(":")
    try:
        if head == "hook":
            return HookWeight(_nonneg(rest))
        if head == "content":
            return ContentWeight(_nonneg(rest))
        if head == "wt":
            a, _, b = rest.partition(":")
            return WeightSpec(Poly.monomial(_nonneg(a), _nonneg(b)))
    except ValueError as exc:
        raise UsageError(f"bad weight {text!r}: {exc}") from exc
    return WeightSpec(_parse_poly(text))


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise ValueError("parameters must be nonnegative")
    return v


def _length(lam: Partition, args) -> tuple[int, int | None]:
    """Return ``(l, n)``; ``n`` is None when ``l`` does not have the parity of ``|lam|``."""
    k = sum(lam)
    if args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        return k + 2 * args.n, args.n
    if args.l < 0:
        raise UsageError("--l must be nonnegative")
    if args.l < k or (args.l - k) % 2:
        return args.l, None
    return args.l, (args.l - k) // 2


def _poly_result(p: Poly) -> dict:
    return {"text": str(p), **p.to_json()}


# command handlers return (input, result, plain_text, exit_code)


def cmd_count(args):
    lam = _parse_partition(args.partition)
    l, _ = _length(lam, args)
    c = count_oscillating(lam, l)
    return {"partition": list(lam), "l": l}, str(c), str(c), 0


def cmd_enumerate(args):
    lam = _parse_partition(args.partition)
    l, _ = _length(lam, args)
    total = count_oscillating(lam, l)
    if args.limit is None and total > ENUMERATE_CAP:
        raise UsageError(f"{total} tableaux exceed {ENUMERATE_CAP}; pass --limit to enumerate anyway")
    items = [t.to_json() for t in islice(enumerate_oscillating(lam, l), args.limit)]
    plain = "\n".join(json.dumps(t, separators=(",", ":")) for t in items)
    return {"partition": list(lam), "l": l, "limit": args.limit}, items, plain, 0


def _formula_average(lam: Partition, n: int, w) -> Fraction:
    if isinstance(w, WeightSpec):
        return average_weight_formula(sum(lam), n, w.poly)
    if lam:
        raise UsageError("hook/content weights only have a closed form for the empty shape")
    name = "hook_empty" if isinstance(w, HookWeight) else "content_empty"
    return (2 * n + 1) * closed_form(name, 0, n, w.r)


def cmd_avg(args):
    lam = _parse_partition(args.partition)
    l, n = _length(lam, args)
    w = parse_weight(args.weight)
    if n is None:
        raise EmptySetError(f"no oscillating tableaux of shape {list(lam)} and length {l}")
    inp = {"partition": list(lam), "l": l, "n": n, "weight": args.weight, "mode": args.mode}
    result: dict[str, Any] = {}
    if args.mode in ("brute", "both"):
        result["brute"] = average_weight_bruteforce(lam, l, w, workers=_workers())
    if args.mode in ("formula", "both"):
        result["formula"] = _formula_average(lam, n, w)
    code = 0
    if args.mode == "both":
        result["agrees"] = result["brute"] == result["formula"]
        code = 0 if result["agrees"] else 2
    plain = "\n".join(f"{key}: {str(v).lower() if isinstance(v, bool) else v}" for key, v in result.items())
    payload = {key: v if isinstance(v, bool) else rational_str(v) for key, v in result.items()}
    return inp, payload, plain, code


def _unary_poly(fn):
    def handler(args):
        out = fn(_parse_poly(args.poly))
        return {"poly": args.poly}, _poly_result(out), str(out), 0

    return handler


def cmd_matrix(args):
    if args.r < 0:
        raise UsageError("r must be nonnegative")
    m = psi_matrix(args.r)
    width = max(len(str(c)) for row in m.entries for c in row)
    plain = "\n".join(" ".join(str(c).rjust(width) for c in row) for row in m.entries)
    return {"r": args.r}, m.to_json(), plain, 0


def cmd_closed_form(args):
    try:
        v = closed_form(args.name, args.k, args.n, args.r)
    except UnknownFormula:
        raise UsageError(f"unknown formula {args.name!r}; choose from {', '.join(FORMULAS)}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {"name": args.name, "k": args.k, "n": args.n, "r": args.r}, rational_str(v), str(v), 0


def cmd_asymptotic(args):
    if args.i < 0 or args.j < 0:
        raise UsageError("i and j must be nonnegative")
    regimes = ["large_size", "large_length"] if args.regime == "both" else [args.regime]
    result, lines = {}, []
    for regime in regimes:
        c, e = asymptotic_coefficient(args.i, args.j, regime)
        var = "k" if regime == "large_size" else "(2n)"
        result[regime] = {"coefficient": rational_str(c), "exponent": e}
        lines.append(f"{regime}: {c} * {var}^{e}")
    return {"i": args.i, "j": args.j, "regime": args.regime}, result, "\n".join(lines), 0


def cmd_verify(args):
    unknown = [c for c in args.check or [] if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    cfg = VerifyConfig(
        max_size=args.max_size,
        max_n=args.max_n,
        max_degree=args.max_degree,
        workers=_workers(),
    )
    results = run_all(cfg, args.check)
    ok = all(r.passed for r in results)
    plain = "\n".join(
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail} ({r.seconds:.2f}s)" for r in results
    )
    payload = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    inp = {"max_size": cfg.max_size, "max_n": cfg.max_n, "max_degree": cfg.max_degree}
    return inp, payload, plain, 0 if ok else 2


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json"], default="plain")

    shape = argparse.ArgumentParser(add_help=False)
    shape.add_argument("--partition", required=True, help="JSON array, e.g. [4,2,2,1] or []")
    which = shape.add_mutually_exclusive_group(required=True)
    which.add_argument("--l", type=int, help="total length of the tableaux")
    which.add_argument("--n", type=int, help="length is |partition| + 2n")

    parser = _Parser(prog="osctab", description="Exact computations on oscillating tableaux.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common, shape], help="number of oscillating tableaux")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common, shape], help="list oscillating tableaux")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("avg", parents=[common, shape], help="average weight")
    p.add_argument("--weight", required=True, help="polynomial in x,y or hook:r, content:r, wt:a:b")
    p.add_argument("--mode", choices=["brute", "formula", "both"], default="formula")
    p.set_defaults(func=cmd_avg)

    for name, fn, help_ in (
        ("psi", psi_apply, "apply Psi"),
        ("inv-psi", psi_inverse, "apply the inverse of Psi"),
        ("qpoly", q_polynomial, "Q = Psi^-1(P(x, x+2y))"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("poly")
        p.set_defaults(func=_unary_poly(fn))

    p = sub.add_parser("matrix", parents=[common], help="matrix of Psi in the alpha/beta bases")
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("closed-form", parents=[common], help="evaluate a named closed form")
    p.add_argument("name")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--r", type=int, default=0)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("asymptotic", parents=[common], help="asymptotic coefficient of wt_{i,j}")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--regime", choices=["large_size", "large_length", "both"], default="both")
    p.set_defaults(func=cmd_asymptotic)

    defaults = VerifyConfig()
    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--max-size", type=int, default=defaults.max_size)
    p.add_argument("--max-n", type=int, default=defaults.max_n)
    p.add_argument("--max-degree", type=int, default=defaults.max_degree)
    p.add_argument("--check", action="append", help="run only this check (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inp, result, plain, code = args.func(args)
    except EmptySetError as exc:
        print(f"osctab: empty tableau set: {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"osctab: error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({"command": args.command, "input": inp, "result": result}))
    elif plain:
        print(plain)
    return code


if __name__ == "__main__":
    sys.exit(main())
