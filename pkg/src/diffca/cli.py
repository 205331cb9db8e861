"""Command-line front end.

Subcommands:

* ``run``       evolve a difference pyramid and render it
* ``eca``       evolve an elementary (Wolfram) rule and render it
* ``compare``   both renderings side by side, plus agreement ratios
                when the input is a single-impulse row
* ``selfcheck`` re-derive the built-in reference results
* ``fixtures``  list the built-in inputs

Exit status: 0 on success, 1 for parse/value/IO failures (diagnostic on
stderr names the failing component), 2 for invalid flag combinations.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .eca import (
    BOUNDARIES,
    NonBinaryCell,
    OutOfRange,
    eca_evolve,
    impulse_agreement,
    impulse_row,
    rule_table,
)
from .engine import InputExpression, RowTooShort, evolve, make_symmetric
from .expressions import ExpressionError, parse_expression, serialize_expression
from .fixtures import DEFAULT_EVOLUTION, UnknownFixture, fixture_ids, load_fixture
from .patterns import highlight_pyramid
from .render import ALIGNMENTS, FORMATS, PALETTES, RenderSpec, render_compare, render_eca, render_pyramid

__all__ = ["build_parser", "main"]


def _add_render_flags(sub: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    sub.add_argument("--format", choices=formats, default="ascii")
    sub.add_argument("--out", metavar="PATH", help="write the artifact here instead of stdout")
    sub.add_argument("--cell-px", type=int, default=None, metavar="N",
                     help="square size per cell in raster/svg output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffca",
        description="difference pyramids, elementary rules, and their renderings",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="evolve a difference pyramid")
    source = run.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="EXPR", help="dash expression, e.g. 2-0-1-4")
    source.add_argument("--file", metavar="PATH", help="read the dash expression from a file")
    source.add_argument("--fixture", metavar="ID", help="use a built-in input row")
    run.add_argument("--pattern", metavar="EXPR", help="highlight occurrences of this row")
    run.add_argument("--symmetric", action="store_true",
                     help="mirror the input into a palindrome before evolving")
    run.add_argument("--max-generations", type=int, default=None, metavar="N")
    run.add_argument("--align", choices=ALIGNMENTS, default="centered")
    run.add_argument("--palette", choices=PALETTES, default="values")
    _add_render_flags(run, FORMATS)
    run.set_defaults(handler=_cmd_run)

    eca = commands.add_parser("eca", help="evolve an elementary rule")
    eca.add_argument("--rule", type=int, required=True, metavar="N")
    eca.add_argument("--generations", type=int, required=True, metavar="T")
    eca.add_argument("--width", type=int, default=None, metavar="W",
                     help="row width; default 2T+1 with the impulse centered")
    eca.add_argument("--initial", metavar="EXPR",
                     help="binary dash expression for generation 0")
    eca.add_argument("--boundary", choices=BOUNDARIES, default="zero")
    _add_render_flags(eca, FORMATS)
    eca.set_defaults(handler=_cmd_eca)

    compare = commands.add_parser("compare", help="rule diagram above pyramid mask")
    compare.add_argument("--fixture", required=True, metavar="ID")
    compare.add_argument("--pattern", required=True, metavar="EXPR")
    compare.add_argument("--rule", type=int, required=True, metavar="N")
    compare.add_argument("--boundary", choices=BOUNDARIES, default="zero")
    _add_render_flags(compare, ("ascii", "pbm", "svg"))
    compare.set_defaults(handler=_cmd_compare)

    selfcheck = commands.add_parser("selfcheck", help="re-derive built-in reference results")
    selfcheck.set_defaults(handler=_cmd_selfcheck)

    fixtures = commands.add_parser("fixtures", help="list built-in inputs")
    fixtures.set_defaults(handler=_cmd_fixtures)
    return parser


_DEFAULT_CELL_PX = {"ascii": 1, "pbm": 1, "pgm": 1, "svg": 12}


def _render_spec(args: argparse.Namespace, **overrides) -> RenderSpec:
    cell_px = args.cell_px if args.cell_px is not None else _DEFAULT_CELL_PX[args.format]
    fields = {
        "format": args.format,
        "cell_px": cell_px,
        "alignment": getattr(args, "align", "centered"),
        "palette": getattr(args, "palette", "values"),
    }
    fields.update(overrides)
    return RenderSpec(**fields)


def _emit(artifact: str | bytes, out: str | None) -> None:
    if out is not None:
        data = artifact if isinstance(artifact, bytes) else (artifact + "\n").encode("utf-8")
        Path(out).write_bytes(data)
    elif isinstance(artifact, bytes):
        sys.stdout.buffer.write(artifact)
        sys.stdout.buffer.flush()
    else:
        print(artifact)


def _usage_error(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return 2


def _cmd_run(args: argparse.Namespace) -> int:
    if args.format == "pbm" and not args.pattern:
        return _usage_error("--format pbm needs --pattern")
    if args.format == "pgm" and args.pattern:
        return _usage_error("--format pgm renders values, not matches; drop --pattern")
    if args.input is not None:
        expr = parse_expression(args.input)
    elif args.file is not None:
        expr = parse_expression(Path(args.file).read_text(encoding="utf-8"))
    else:
        expr = load_fixture(args.fixture)
    if args.symmetric:
        expr = make_symmetric(expr)
    pyramid = evolve(expr, max_generations=args.max_generations)
    mask = None
    if args.pattern:
        mask = highlight_pyramid(pyramid, parse_expression(args.pattern))
    _emit(render_pyramid(pyramid, mask, _render_spec(args)), args.out)
    return 0


def _cmd_eca(args: argparse.Namespace) -> int:
    rule = rule_table(args.rule)
    if args.generations < 0:
        raise ValueError("generations is non-negative")
    if args.initial is not None:
        if args.width is not None:
            return _usage_error("--initial already fixes the width; drop --width")
        initial = parse_expression(args.initial).row()
    else:
        width = args.width if args.width is not None else 2 * args.generations + 1
        if width < 1:
            raise ValueError("width is at least 1")
        initial = impulse_row(width)
    diagram = eca_evolve(initial, rule, args.generations, boundary=args.boundary)
    _emit(render_eca(diagram, _render_spec(args)), args.out)
    return 0


def _is_impulse(expr: InputExpression) -> int | None:
    """Index of the single nonzero cell, when there is exactly one and it is 1."""
    hot = [i for i, v in enumerate(expr.terms) if v]
    if len(hot) == 1 and expr.terms[hot[0]] == 1:
        return hot[0]
    return None


def _cmd_compare(args: argparse.Namespace) -> int:
    expr = load_fixture(args.fixture)
    rule = rule_table(args.rule)
    pyramid = evolve(expr)
    mask = highlight_pyramid(pyramid, parse_expression(args.pattern))
    width = len(expr)
    if all(v <= 1 for v in expr.terms):
        initial = expr.row()
    else:
        initial = impulse_row(width)
    diagram = eca_evolve(initial, rule, width - 1, boundary=args.boundary)
    artifact = render_compare(
        diagram,
        pyramid,
        mask,
        _render_spec(args),
        diagram_label=f"rule {rule.number}, {args.boundary} boundary",
        pyramid_label=f"difference pyramid: {args.fixture}, pattern {args.pattern}",
    )
    _emit(artifact, args.out)
    j0 = _is_impulse(expr)
    if j0 is not None:
        direct, complement = impulse_agreement(mask, j0)
        print(f"in-cone agreement vs binomial parity: {direct:.6f}")
        print(f"in-cone complement agreement: {complement:.6f}")
    return 0


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1

    reference = [list(row) for row in DEFAULT_EVOLUTION]
    check("default-p evolution matches the stored reference triangle",
          evolve(load_fixture("default-p")).to_lists() == reference)

    p1 = load_fixture("p1")
    check("make_symmetric(p1) reproduces p1-new",
          make_symmetric(p1).terms == load_fixture("p1-new").terms)

    a1 = load_fixture("a1")
    j0 = _is_impulse(a1)
    pyramid = evolve(a1)
    ones = highlight_pyramid(pyramid, parse_expression("1-"))
    zeros = highlight_pyramid(pyramid, parse_expression("0-"))
    direct, _ = impulse_agreement(ones, j0)
    _, complement = impulse_agreement(zeros, j0)
    check("a1 ones-mask equals binomial parity in the cone", direct == 1.0)
    check("a1 zeros-mask equals its in-cone complement", complement == 1.0)

    check("fixture expressions survive a parse round trip",
          all(parse_expression(serialize_expression(load_fixture(f))).terms
              == load_fixture(f).terms for f in fixture_ids()))

    print("all checks passed" if failures == 0 else f"{failures} check(s) failed")
    return 0 if failures == 0 else 1


def _cmd_fixtures(args: argparse.Namespace) -> int:
    for fid in fixture_ids():
        expr = load_fixture(fid)
        print(f"{fid:<10} {len(expr):>4} cells  {serialize_expression(expr)}")
    return 0


_COMPONENTS: tuple[tuple[type[Exception], str], ...] = (
    (ExpressionError, "expression"),
    (UnknownFixture, "fixture"),
    (OutOfRange, "rule"),
    (NonBinaryCell, "initial row"),
    (RowTooShort, "input row"),
    (OSError, "io"),
    (ValueError, "input"),
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except tuple(exc for exc, _ in _COMPONENTS) as err:
        for exc_type, component in _COMPONENTS:
            if isinstance(err, exc_type):
                print(f"error: {component}: {err}", file=sys.stderr)
                break
        return 1


if __name__ == "__main__":
    sys.exit(main())
