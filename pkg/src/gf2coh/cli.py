"""Command-line front end.

    gf2coh verify {steinberg,chi,lim,classes,membership,all} [options]
    gf2coh report xs-series [--max-degree N]
    gf2coh membership --n N --expr "x1+x2"

Every command accepts ``--format json|text``, ``--out FILE`` and ``--seed``.
The exit status is 0 iff every check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import report as rp
from .grammar import ParseError, parse
from .membership import reduce
from .quillen import DEFAULT_MAX_DEGREE


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=rp.DEFAULT_SEED)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="gf2coh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)
    vsub.add_parser("steinberg", parents=[common])
    p = vsub.add_parser("chi", parents=[common])
    p.add_argument("--order", type=int, default=60)
    p = vsub.add_parser("lim", parents=[common])
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p = vsub.add_parser("classes", parents=[common])
    p.add_argument("--n", type=int, default=5)
    p = vsub.add_parser("membership", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--max-degree", type=int, default=16)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--exhaustive", action="store_true")
    p = vsub.add_parser("all", parents=[common])
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--order", type=int, default=60)
    p.add_argument("--samples", type=int, default=10_000)

    rep = sub.add_parser("report", help="print a dimension table")
    rsub = rep.add_subparsers(dest="table", required=True)
    p = rsub.add_parser("xs-series", parents=[common])
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    p = sub.add_parser("membership", parents=[common], help="decide membership in C_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    return parser


def _run_verify(args) -> rp.VerificationReport:
    if args.suite == "steinberg":
        return rp.verify_steinberg()
    if args.suite == "chi":
        return rp.verify_chi(args.order)
    if args.suite == "lim":
        return rp.verify_lim(args.max_degree)
    if args.suite == "classes":
        return rp.verify_classes(args.n)
    if args.suite == "membership":
        return rp.verify_membership(
            args.n, args.max_degree, args.exhaustive, args.seed, args.samples
        )
    return rp.verify_all(args.max_degree, args.order, args.seed, args.samples)


def _xs_text(r: rp.VerificationReport) -> str:
    lines = ["degree  lim  lim1(d-1)  dim"]
    for row in r.meta["rows"]:
        lines.append(f"{row['degree']:>6}  {row['lim']:>3}  {row['lim1_shifted']:>9}  {row['dim']:>3}")
    lines.append(f"suspension classes in degrees {r.meta['suspension_degrees']}")
    return "\n".join(lines) + "\n" + r.to_text()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def membership_result(n: int, expr: str) -> dict:
    x = parse(expr, n)
    cert, rem = reduce(x)
    return {
        "n": n,
        "expr": expr,
        "member": not rem,
        "certificate": [k.as_dict() for k in cert],
        "certificate_labels": [str(k) for k in cert],
        "remainder": str(rem),
    }


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "membership":
        try:
            res = membership_result(args.n, args.expr)
        except ParseError as err:
            print(f"parse error: {err}", file=sys.stderr)
            return 2
        if args.format == "json":
            _emit(json.dumps(res, indent=2), args.out)
        else:
            verdict = "member" if res["member"] else "not a member"
            _emit(
                f"{args.expr}: {verdict} of C_{args.n}\n"
                f"  certificate: {' + '.join(res['certificate_labels']) or '(empty)'}\n"
                f"  remainder: {res['remainder']}",
                args.out,
            )
        return 0

    r = _run_verify(args) if args.command == "verify" else rp.report_xs_series(args.max_degree)
    if args.format == "json":
        _emit(json.dumps(r.to_dict(), indent=2, default=str), args.out)
    elif args.command == "report":
        _emit(_xs_text(r), args.out)
    else:
        _emit(r.to_text(), args.out)
    return 0 if r.passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
