"""Command-line interface: ``qsdd table|expand|verify|reduce|volume``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .basis import Expansion, forest_expand, forest_polynomial, fundamental_expand, fundamental_reconstruct
from .coinv import coinv_reduce
from .forest import IndexedForest, enumerate_class
from .harmonic import from_difference_coeffs, lambda_difference_coeffs, volume_polynomial
from .poly import LPoly, XPoly, pad
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _read_input(args) -> str:
    if args.file:
        with open(args.file) as fh:
            return fh.read()
    if args.poly is None:
        raise UsageError("no input polynomial (give it as an argument or with --file)")
    return args.poly


def _code_text(c, n: Optional[int] = None) -> str:
    if n is not None:
        c = pad(c, n)
    return "(" + ",".join(map(str, c)) + ")"


def _parse_code(text: str):
    body = text.strip().strip("[]()")
    if not body:
        return ()
    try:
        return tuple(int(t) for t in body.split(","))
    except ValueError:
        raise UsageError(f"bad code {text!r}; expected e.g. [0,2,0,1]") from None


def _seq_text(a) -> str:
    if all(v < 10 for v in a):
        return "".join(map(str, a)) or "()"
    return ",".join(map(str, a))


def cmd_table(args) -> int:
    n, m = args.n, args.m
    rows = [(F, forest_polynomial(F)) for F in enumerate_class("Supp", n, m)]
    if args.format == "json":
        print(json.dumps({"m": m, "n": n, "rows": [{"code": list(F.code), "poly": P.to_json_obj()} for F, P in rows]}))
        return 0
    if args.format == "tsv":
        print("code\tpolynomial")
    for F, P in rows:
        print(f"{_code_text(F.code, n)}\t{P.format()}")
    return 0


def _print_expansion(exp: Expansion, fmt: str):
    if fmt == "json":
        print(exp.to_json())
    elif fmt == "tsv":
        print("code\tcoeff")
        for c, a in exp.items():
            print(f"{_code_text(c)}\t{a}")
    else:
        text = exp.format()
        if text:
            print(text)


def cmd_expand(args) -> int:
    text = _read_input(args)
    if args.basis == "forest":
        f = XPoly.parse(text)
        exp = forest_expand(f, args.m)
        if exp.reconstruct() != f:
            raise RuntimeError("internal error: forest expansion does not reconstruct the input")
        _print_expansion(exp, args.format)
    elif args.basis == "fundamental":
        f = XPoly.parse(text)
        n = args.n if args.n is not None else f.nvars()
        exp = fundamental_expand(f, n, args.m)
        if fundamental_reconstruct(exp, args.m) != f:
            raise RuntimeError("internal error: fundamental expansion does not reconstruct the input")
        items = sorted(exp.items(), key=lambda t: (len(t[0]), [-v for v in t[0]]))
        if args.format == "json":
            print(json.dumps({"m": args.m, "n": n, "terms": [{"seq": list(a), "coeff": str(c)} for a, c in items]}))
        else:
            for a, c in items:
                print(f"{_seq_text(a)}: {c}")
    else:
        g = LPoly.parse(text)
        coeffs = lambda_difference_coeffs(g, args.m)
        if from_difference_coeffs(coeffs, args.m) != g:
            raise RuntimeError("internal error: difference expansion does not reconstruct the input")
        items = sorted(coeffs.items(), key=lambda t: (sum(t[0]), len(t[0]), t[0][::-1]))
        if args.format == "json":
            print(json.dumps({"m": args.m, "terms": [{"code": list(c), "coeff": str(a)} for c, a in items]}))
        else:
            for c, a in items:
                print(f"{_code_text(c)}: {a}")
    return 0


def cmd_reduce(args) -> int:
    f = XPoly.parse(_read_input(args))
    n = args.n if args.n is not None else f.nvars()
    exp = coinv_reduce(f, n, args.m, args.k)
    _print_expansion(exp, args.format)
    return 0


def cmd_volume(args) -> int:
    F = IndexedForest(_parse_code(args.code), args.m)
    V = volume_polynomial(F, args.method)
    print(V.to_json() if args.format == "json" else V.format())
    return 0


def cmd_verify(args) -> int:
    name = args.suite_opt or args.suite or "all"
    params = {"seed": args.seed, "trials": args.trials}
    for key in ("m", "n", "max_size"):
        v = getattr(args, key)
        if v is not None:
            params[key] = v
    if name not in SUITES and name != "all":
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    checks = run_suite(name, **params)
    ok = all(c.ok for c in checks)
    if args.format == "json":
        print(json.dumps({"suite": name, "ok": ok, "checks": [c.to_json_obj() for c in checks]}))
    else:
        for c in checks:
            print(c.line())
        print(f"{'PASS' if ok else 'FAIL'} {sum(c.ok for c in checks)}/{len(checks)} checks")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qsdd", description="Forest polynomials and quasisymmetric divided differences.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_default=None, fmt=("text", "json")):
        sp.add_argument("--m", type=int, default=1, help="colour parameter m >= 1 (default 1)")
        sp.add_argument("--n", type=int, default=n_default, help="number of variables")
        sp.add_argument("--format", choices=fmt, default="text")

    t = sub.add_parser("table", help="forest polynomials of all fully supported forests on [n]")
    common(t, 5, ("text", "tsv", "json"))
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("expand", help="expand a polynomial in a basis")
    common(e, None, ("text", "tsv", "json"))
    e.add_argument("poly", nargs="?")
    e.add_argument("--file")
    e.add_argument("--basis", choices=("forest", "fundamental", "lambda-diff"), default="forest")
    e.set_defaults(func=cmd_expand)

    r = sub.add_parser("reduce", help="normal form modulo the quasisymmetric ideal")
    common(r, None, ("text", "tsv", "json"))
    r.add_argument("--k", type=int, default=1, help="reduce modulo the ideal generated in degrees >= k (default 1)")
    r.add_argument("poly", nargs="?")
    r.add_argument("--file")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("volume", help="volume polynomial of a forest given by its code")
    common(v)
    v.add_argument("code", help="forest code, e.g. [0,2,0,1]")
    v.add_argument("--method", choices=("recursive", "paths"), default="recursive")
    v.set_defaults(func=cmd_volume)

    ver = sub.add_parser("verify", help="run a property suite")
    ver.add_argument("suite", nargs="?", help=f"one of {', '.join(list(SUITES) + ['all'])}")
    ver.add_argument("--suite", dest="suite_opt")
    ver.add_argument("--m", type=int)
    ver.add_argument("--n", type=int)
    ver.add_argument("--max-size", dest="max_size", type=int)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int, default=100)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "m", None) is not None and args.m < 1:
        print("error: --m must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
