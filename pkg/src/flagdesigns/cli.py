"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a verified property fails,
2 on a usage, parse or cap error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import geometry, numtheory
from .checker import full_report
from .designfile import DesignFileError, format_design, read_design
from .designs import DesignError, is_2design
from .fields import prime_power
from .params import family_rows

LAMBDA_MAX_CAP = 100_000
SEARCH_CAP = 10_000_000
EXPONENT_CAP = 4096

_DECIMAL = re.compile(r"^[0-9]+$")


class UsageError(Exception):
    pass


def _decimal(text: str) -> int:
    if not _DECIMAL.match(text):
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")
    return int(text)


def _cap(name: str, value: int, lo: int, hi: int) -> int:
    if not lo <= value <= hi:
        raise UsageError(f"{name} = {value} outside {lo}..{hi}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flagdesigns", description=__doc__.splitlines()[0])
    p.add_argument("--json-output", action="store_true", help="print a JSON document")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check the 2-design axioms of a design file")
    v.add_argument("file")

    a = sub.add_parser("analyze", help="run the full classification report")
    a.add_argument("file")

    c = sub.add_parser("construct", help="write a geometric design to a design file")
    c.add_argument("family", choices=["pg-collinear", "pg-noncollinear", "ag-lines"])
    c.add_argument("--h", type=_decimal, required=True)
    c.add_argument("--q", type=_decimal, required=True)
    c.add_argument("-o", "--output")
    c.add_argument("--with-group", action="store_true",
                   help="also write generators of PSL or AGL")
    c.add_argument("--include-frobenius", action="store_true")

    pa = sub.add_parser("params", help="list parameter rows of a family")
    pa.add_argument("family", choices=["type1", "type2", "k0eq2"])
    pa.add_argument("--lambda-max", type=_decimal, required=True)

    n = sub.add_parser("numth", help="number-theory helpers")
    nsub = n.add_subparsers(dest="numth", required=True, parser_class=_Parser)
    pp = nsub.add_parser("primitive-part")
    pp.add_argument("a", type=_decimal)
    pp.add_argument("e", type=_decimal)
    ld = nsub.add_parser("lemma-div")
    ld.add_argument("--pm-max", type=_decimal, required=True)
    pl = nsub.add_parser("pillai")
    pl.add_argument("--bound", type=_decimal, required=True)
    qb = nsub.add_parser("qbin")
    for name in ("h", "t", "q"):
        qb.add_argument(name, type=_decimal)
    rh = nsub.add_parser("rho")
    for name in ("s", "a", "aut"):
        rh.add_argument(name, type=_decimal)
    return p


def _emit(args, payload, text: str) -> None:
    if args.json_output:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _verify(args) -> int:
    df = read_design(args.file)
    D = df.design
    try:
        lam = is_2design(D)
    except DesignError as exc:
        _emit(args, {"is_design": False, "error": str(exc), "witness": exc.witness},
              f"not a 2-design: {exc}")
        return 1
    r = lam * (D.v - 1) // (D.k - 1)
    sym = D.b == D.v
    payload = {"is_design": True, "v": D.v, "b": D.b, "k": D.k, "r": r, "lam": lam,
               "symmetric": sym}
    _emit(args, payload,
          f"2-({D.v},{D.k},{lam}), b={D.b}, symmetric: {'yes' if sym else 'no'}")
    return 0


def _analyze(args) -> int:
    report = full_report(args.file)
    if args.json_output:
        print(report.to_json())
    else:
        sys.stdout.write(report.render())
    failed = any(s.status == "fail" for s in report.stages.values())
    return 1 if failed or report.conclusion == "contradiction" else 0


def _construct(args) -> int:
    h, q = args.h, args.q
    if prime_power(q) is None:
        raise UsageError(f"q = {q} is not a prime power")
    _cap("h", h, 2, 64)
    try:
        if args.family == "pg-collinear":
            D = geometry.collinear_triples_design(h, q)
        elif args.family == "pg-noncollinear":
            D = geometry.noncollinear_triples_design(h, q)
        else:
            D = geometry.ag_lines_design(h, q)
        gens = None
        if args.with_group:
            build = geometry.affine_group if args.family == "ag-lines" else geometry.projective_group
            gens = build(h, q, include_frobenius=args.include_frobenius).generators
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_design(D, gens, None, [f"{args.family} h={h} q={q}"])
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        _emit(args, {"output": args.output, "v": D.v, "b": D.b, "k": D.k},
              f"wrote {args.output}: v={D.v}, b={D.b}, k={D.k}")
    else:
        sys.stdout.write(text)
    return 0


def _params(args) -> int:
    _cap("lambda-max", args.lambda_max, 2, LAMBDA_MAX_CAP)
    rows = family_rows(args.family, args.lambda_max)
    ok = all(r.satisfies_symmetric_identity() for r in rows)
    text = "\n".join(
        f"{r.family} lambda={r.lam}: (v,k,lambda)=({r.v},{r.k},{r.lam}) c={r.c} d={r.d} k0={r.k0}"
        for r in rows)
    _emit(args, [r.as_dict() for r in rows], text)
    return 0 if ok else 1


def _numth(args) -> int:
    cmd = args.numth
    if cmd == "primitive-part":
        _cap("a", args.a, 2, 10 ** 9)
        _cap("e", args.e, 1, EXPONENT_CAP)
        val = numtheory.primitive_part(args.a, args.e)
        _emit(args, {"a": args.a, "e": args.e, "primitive_part": val}, str(val))
    elif cmd == "lemma-div":
        _cap("pm-max", args.pm_max, 1, SEARCH_CAP)
        sols = numtheory.lemma_div_solutions(args.pm_max)
        _emit(args, [list(s) for s in sols],
              "\n".join(f"p^m={pm} u={u} z={z}" for pm, u, z in sols))
    elif cmd == "pillai":
        _cap("bound", args.bound, 3, SEARCH_CAP)
        sols = numtheory.pillai_solutions(args.bound)
        _emit(args, [list(s) for s in sols],
              "\n".join(f"{p}^{m} + 2 = {u}^{h}" for p, m, u, h in sols))
    elif cmd == "qbin":
        _cap("q", args.q, 2, 10 ** 9)
        _cap("h", args.h, 0, EXPONENT_CAP)
        if args.t > args.h:
            raise UsageError("need t <= h")
        val = numtheory.gaussian_binomial(args.h, args.t, args.q)
        _emit(args, {"h": args.h, "t": args.t, "q": args.q, "qbin": val}, str(val))
    else:
        _cap("a", args.a, 2, 10 ** 18)
        _cap("aut", args.aut, 1, 10 ** 30)
        val = numtheory.compute_rho(args.s, args.a, args.aut)
        _emit(args, {"s": args.s, "a": args.a, "aut": args.aut, "rho": val}, str(val))
    return 0


_COMMANDS = {"verify": _verify, "analyze": _analyze, "construct": _construct,
             "params": _params, "numth": _numth}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, DesignFileError, OSError) as exc:
        print(f"flagdesigns: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
