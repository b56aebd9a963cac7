"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails (invalid code under
``validate``, a FAIL row under ``table-verify``), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import combinat
from .errors import GaussCodeError, ParseError
from .fixtures import bundled_table_path, load_fixture_table
from .gauss import GaussDiagram, parse_gauss_code, serialize_gauss_code
from .pairing import conway_coefficient, pairing_polynomial
from .skein import conway_skein
from .statesum import nabla_state


class UsageError(Exception):
    pass


def _diagram(code: str) -> GaussDiagram:
    try:
        return parse_gauss_code(code)
    except GaussCodeError as exc:
        raise UsageError(f"invalid Gauss code: {type(exc).__name__}: {exc}") from None


def _fmt(poly, machine: bool) -> str:
    return poly.machine() if machine else str(poly)


def _method_polynomial(method: str, d: GaussDiagram, cache):
    if method == "pairing":
        return pairing_polynomial(d, cache_dir=cache)
    if method == "statesum":
        return nabla_state(d, "asc")
    return conway_skein(d)


def cmd_validate(args, out) -> int:
    try:
        d = parse_gauss_code(args.code)
    except GaussCodeError as exc:
        print(f"invalid: {type(exc).__name__}: {exc}", file=out)
        return 1
    print(serialize_gauss_code(d), file=out)
    return 0


def cmd_pairing(args, out) -> int:
    d = _diagram(args.code)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    poly = pairing_polynomial(d, args.max_degree, cache_dir=args.combo_cache)
    print(_fmt(poly, args.machine), file=out)
    return 0


def cmd_statesum(args, out) -> int:
    print(_fmt(nabla_state(_diagram(args.code), args.direction), args.machine), file=out)
    return 0


def cmd_skein(args, out) -> int:
    print(_fmt(conway_skein(_diagram(args.code)), args.machine), file=out)
    return 0


def cmd_coeff(args, out) -> int:
    if args.degree < 0:
        raise UsageError("--degree must be non-negative")
    d = _diagram(args.code)
    print(conway_coefficient(d, args.degree, cache_dir=args.combo_cache), file=out)
    return 0


def cmd_combo(args, out) -> int:
    if not 1 <= args.size <= combinat.MAX_ENUMERATED:
        raise UsageError(f"--size must be between 1 and {combinat.MAX_ENUMERATED}")
    comb = combinat.generate_conway_combination(args.size)
    if args.out:
        combinat.save_combination(args.out, comb)
    print(f"count={len(comb)}", file=out)
    for key in comb.keys():
        print(key, file=out)
    return 0


def cmd_table_verify(args, out) -> int:
    path = args.file or bundled_table_path()
    try:
        fixtures = load_fixture_table(path)
    except (OSError, ParseError) as exc:
        raise UsageError(str(exc)) from None
    failed = 0
    for fx in fixtures:
        got = _method_polynomial(args.method, fx.diagram, args.combo_cache)
        if got == fx.expected:
            print(f"PASS {fx.name} {_fmt(got, args.machine)}", file=out)
        else:
            failed += 1
            print(f"FAIL {fx.name} expected={_fmt(fx.expected, args.machine)} "
                  f"got={_fmt(got, args.machine)}", file=out)
    print(f"passed={len(fixtures) - failed} failed={failed}", file=out)
    return 1 if failed else 0


def cmd_lk(args, out) -> int:
    d = _diagram(args.code)
    if d.n_circles != 2:
        raise UsageError("lk needs a two-component link code")
    print(conway_coefficient(d, 1), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvconway", description=(
        "Conway polynomial of knot and 2-component link Gauss diagrams by "
        "arrow-diagram pairing, ascending state sum, and skein recursion."))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true",
                        help="print polynomials as space-separated coefficients")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check and normalise a Gauss code")
    p.add_argument("code")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("pairing", parents=[common], help="Conway polynomial from combination pairings")
    p.add_argument("--code", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--combo-cache", metavar="DIR")
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("statesum", parents=[common], help="ascending/descending state sum")
    p.add_argument("--code", required=True)
    p.add_argument("--direction", choices=("asc", "des"), default="asc")
    p.set_defaults(func=cmd_statesum)

    p = sub.add_parser("skein", parents=[common], help="skein-relation recursion")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_skein)

    p = sub.add_parser("coeff", parents=[common], help="one Conway coefficient by pairing")
    p.add_argument("--code", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--combo-cache", metavar="DIR")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("combo", parents=[common], help="list a Conway combination")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", metavar="PATH", help="also write the combination cache file")
    p.set_defaults(func=cmd_combo)

    p = sub.add_parser("table-verify", parents=[common], help="check a fixture table")
    p.add_argument("--file", metavar="PATH", help="fixture TSV (default: bundled knot table)")
    p.add_argument("--method", choices=("pairing", "statesum", "skein"), required=True)
    p.add_argument("--combo-cache", metavar="DIR")
    p.set_defaults(func=cmd_table_verify)

    p = sub.add_parser("lk", parents=[common], help="linking number of a 2-component link")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_lk)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"pvconway {args.command}: error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
