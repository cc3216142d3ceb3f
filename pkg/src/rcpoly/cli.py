"""Command-line interface.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage or
parse error, 3 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence, TextIO

from .carlitz import LinearMapQ, dedekind_carlitz, rc
from .dedekind import dedekind_rademacher, dedekind_sum, rademacher_xy
from .errors import ParseError, PreconditionError
from .exact import format_rational, parse_rational
from .geometry import ConvexRationalPolygon, parse_vertices
from .ratgen import RationalGF, gf_as_polynomial
from .report import IDENTITIES
from .sweep import sweep, sweep_all
from .triangles import (RightTriangleParams, box_decomposition, lattice_count, polygon_ipt,
                        triangle_ipt_thm2)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _posint(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--t -1/2`` as ``--t=-1/2``; argparse would read ``-1/2`` as a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_RATIONAL.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="rcpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rc", parents=[fmt], help="Rademacher-Carlitz polynomial")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=_posint, required=True)
    p.add_argument("--s", type=_rational, required=True)
    p.add_argument("--t", type=_rational, required=True)

    p = sub.add_parser("carlitz", parents=[fmt], help="Dedekind-Carlitz polynomial")
    p.add_argument("--a", type=_posint, required=True)
    p.add_argument("--b", type=_posint, required=True)

    p = sub.add_parser("dedekind", parents=[fmt], help="Dedekind sum s(a,b)")
    p.add_argument("--a", type=_posint, required=True)
    p.add_argument("--b", type=_posint, required=True)

    p = sub.add_parser("rademacher", parents=[fmt], help="Dedekind-Rademacher sum r_t(a,b)")
    p.add_argument("--a", type=_posint, required=True)
    p.add_argument("--b", type=_posint, required=True)
    p.add_argument("--t", type=_rational, required=True)

    p = sub.add_parser("rademacher-xy", parents=[fmt], help="Rademacher sum d(a,b;x,y)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=_posint, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--y", type=_rational, required=True)

    p = sub.add_parser("ipt", help="integer-point transforms")
    ipt = p.add_subparsers(dest="shape", required=True)
    for name, helptext in (("polygon", "convex polygon (Brion per fan triangle)"),
                           ("triangle", "triangle via bounding-box decomposition")):
        q = ipt.add_parser(name, parents=[fmt], help=helptext)
        q.add_argument("--vertices", required=True)
        q.add_argument("--expand", action="store_true", help="also print the Laurent polynomial")
        q.add_argument("--count", action="store_true", help="also print the lattice count")
    q = ipt.add_parser("triangle-right", parents=[fmt], help="right triangle closed form")
    q.add_argument("--params", required=True, help="e,f,g,h,a,b,c,d")
    q.add_argument("--expand", action="store_true")
    q.add_argument("--count", action="store_true")

    p = sub.add_parser("count", parents=[fmt], help="lattice points of a convex polygon")
    p.add_argument("--vertices", required=True)

    p = sub.add_parser("verify", parents=[fmt], help="run verification sweeps")
    p.add_argument("identity", choices=IDENTITIES + ("all",))
    p.add_argument("--max", type=_posint, default=None)
    p.add_argument("--cases", type=_nonneg, default=None)
    p.add_argument("--seed", type=_nonneg, default=0)
    p.add_argument("--jobs", type=_posint, default=1)
    return parser


def _emit_value(args, out: TextIO, value, text: str) -> None:
    if args.format == "json":
        out.write(json.dumps(value, separators=(",", ":")) + "\n")
    else:
        out.write(text + "\n")


def _parse_params(text: str) -> RightTriangleParams:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 8:
        raise ParseError(f"expected 8 comma-separated integers, got {text!r}")
    try:
        values = [int(s) for s in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}") from None
    return RightTriangleParams.from_list(values)


def _emit_gf(args, out: TextIO, gf: RationalGF, notes: str = "") -> None:
    poly = gf_as_polynomial(gf) if (args.expand or args.count) else None
    if args.format == "json":
        data = {"gf": gf.to_json()}
        if args.expand:
            data["polynomial"] = poly.to_json()
        if args.count:
            data["count"] = int(poly.eval(1, 1))
        if notes:
            data["notes"] = notes
        out.write(json.dumps(data, separators=(",", ":")) + "\n")
        return
    out.write(gf.to_text() + "\n")
    if args.expand:
        out.write(poly.to_text(("x", "y")) + "\n")
    if args.count:
        out.write(f"{int(poly.eval(1, 1))}\n")


def _run_verify(args, out: TextIO, err: TextIO) -> int:
    if args.identity == "all":
        reports = sweep_all(args.max, args.cases, args.seed, args.jobs)
    else:
        reports = sweep(args.identity, args.max, args.cases, args.seed, args.jobs)
    failed = sum(not r.holds for r in reports)
    if args.format == "json":
        out.write(json.dumps([r.to_json() for r in reports], separators=(",", ":")) + "\n")
    else:
        for r in reports:
            out.write(r.to_text() + "\n")
    err.write(f"{len(reports)} cases, {failed} failed\n")
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def _dispatch(args, out: TextIO, err: TextIO) -> int:
    cmd = args.command
    if cmd == "rc":
        poly = rc(args.s, LinearMapQ(args.a, args.b, args.t))
        _emit_value(args, out, poly.to_json(), poly.to_text())
    elif cmd == "carlitz":
        poly = dedekind_carlitz(args.a, args.b)
        _emit_value(args, out, poly.to_json(), poly.to_text())
    elif cmd == "dedekind":
        v = format_rational(dedekind_sum(args.a, args.b))
        _emit_value(args, out, v, v)
    elif cmd == "rademacher":
        v = format_rational(dedekind_rademacher(args.t, args.a, args.b))
        _emit_value(args, out, v, v)
    elif cmd == "rademacher-xy":
        v = format_rational(rademacher_xy(args.a, args.b, args.x, args.y))
        _emit_value(args, out, v, v)
    elif cmd == "ipt":
        if args.shape == "polygon":
            poly = ConvexRationalPolygon.from_points(parse_vertices(args.vertices))
            _emit_gf(args, out, polygon_ipt(poly))
        elif args.shape == "triangle":
            vs = parse_vertices(args.vertices)
            if len(vs) != 3:
                raise ParseError(f"a triangle needs 3 vertices, got {len(vs)}")
            gf, how = box_decomposition(vs)
            _emit_gf(args, out, gf, how)
        else:
            _emit_gf(args, out, triangle_ipt_thm2(_parse_params(args.params)))
    elif cmd == "count":
        n = lattice_count(ConvexRationalPolygon.from_points(parse_vertices(args.vertices)))
        _emit_value(args, out, n, str(n))
    elif cmd == "verify":
        return _run_verify(args, out, err)
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    """Parse ``argv``, execute, write to ``out``/``err`` and return the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = _join_negative_values(sys.argv[1:] if argv is None else list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _dispatch(args, out, err)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, ValueError) as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())
