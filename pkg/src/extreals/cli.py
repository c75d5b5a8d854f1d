"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

import argparse
import sys
from pathlib import Path

from . import extreal as er
from .convexfn import TableFormatError, from_csv, inf_convolution, to_csv
from .cutmodel import GridWindow
from .expr import ExprSyntaxError, evaluate, parse
from .extreal import NEG_INF, POS_INF, Mode, fin
from .oracle import LAWS, broken_law, run_oracle
from .qnum import InvalidRational, parse_rational
from .scalarize import example_setfn, scalarization

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# tables


def _operand(x, paren):
    return f"({x})" if paren and not x.is_finite else str(x)


def _row(mode, op, a, b, paren):
    fn = er.add if op == "+" else er.diff
    return f"{_operand(a, paren)} {op} {_operand(b, paren)} = {fn(mode, a, b)}"


def tables_text():
    """Sum/difference table for both arithmetics, computed from the operations."""
    width = 34
    five = fin(5)
    sections = [
        ("Sum:", [("+", POS_INF, NEG_INF, True)]),
        (
            "Differences:",
            [("-", a, b, True) for a in (POS_INF, NEG_INF) for b in (POS_INF, NEG_INF)],
        ),
        (
            "Mixed:",
            [
                ("-", five, POS_INF, False),
                ("-", five, NEG_INF, False),
                ("-", POS_INF, five, False),
                ("-", NEG_INF, five, False),
                ("+", five, POS_INF, False),
                ("+", five, NEG_INF, False),
            ],
        ),
    ]
    lines = [f"{'':14}{'L-case (sup-addition)':{width}}U-case (inf-addition)"]
    for title, rows in sections:
        for i, (op, a, b, paren) in enumerate(rows):
            left = _row(Mode.SUP, op, a, b, paren)
            right = _row(Mode.INF, op, a, b, paren)
            label = title if i == 0 else ""
            lines.append(f"{label:14}{left:{width}}{right}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument helpers


def _grid_spec(text):
    try:
        lo, hi, step = (parse_rational(p) for p in text.split(":"))
    except (ValueError, InvalidRational):
        raise UsageError(f"bad grid spec {text!r}, expected lo:hi:step") from None
    if step <= 0 or hi < lo:
        raise UsageError(f"bad grid spec {text!r}")
    n = (hi - lo) / step
    if n.denominator != 1:
        raise UsageError(f"grid step does not divide {lo}..{hi}")
    return [lo + k * step for k in range(int(n) + 1)]


def _vector(text):
    try:
        return tuple(parse_rational(c) for c in text.split(","))
    except (ValueError, InvalidRational):
        raise UsageError(f"bad direction {text!r}, expected a,b") from None


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, newline="\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args):
    try:
        value = evaluate(parse(args.expr), Mode(args.mode))
    except ExprSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(value)
    return EXIT_OK


def cmd_tables(args):
    sys.stdout.write(tables_text())
    return EXIT_OK


def cmd_oracle(args):
    try:
        bound = parse_rational(args.bound)
        window = GridWindow(bound, args.denom)
    except (ValueError, InvalidRational) as exc:
        raise UsageError(f"invalid window: {exc}") from None
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    laws = dict(LAWS)
    if args.inject_failure:
        laws["broken"] = broken_law
    report = run_oracle(args.trials, args.seed, window, laws)
    for line in report.lines():
        print(line)
    print("all laws pass" if report.ok else "FAILURES")
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_infconv(args):
    tables = []
    for path in (args.f1, args.f2):
        try:
            tables.append(from_csv(Path(path).read_text()))
        except OSError as exc:
            raise UsageError(f"{path}: {exc.strerror}") from None
        except TableFormatError as exc:
            raise UsageError(f"{path}: {exc}") from None
    _write(to_csv(inf_convolution(*tables)), args.out)
    return EXIT_OK


def cmd_scalarize(args):
    w = _vector(args.w)
    if len(w) != 2:
        raise UsageError("direction must have two components")
    grid = _grid_spec(args.grid)
    if 0 not in grid:
        raise UsageError("grid must contain 0")
    _write(to_csv(scalarization(example_setfn(grid), w)), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="extreals", description="Extended real arithmetic from Dedekind cuts.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("--mode", required=True, choices=["sup", "inf"])
    e.add_argument("expr")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("tables", help="print the infinity sum/difference tables")
    t.set_defaults(func=cmd_tables)

    o = sub.add_parser("oracle", help="run randomized law and oracle checks")
    o.add_argument("--trials", type=int, default=200)
    o.add_argument("--seed", type=int, default=42)
    o.add_argument("--bound", default="4")
    o.add_argument("--denom", type=int, default=8)
    o.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("infconv", help="infimal convolution of two CSV tables")
    c.add_argument("--f1", required=True)
    c.add_argument("--f2", required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_infconv)

    s = sub.add_parser("scalarize", help="scalarize the example set-valued function")
    s.add_argument("--w", required=True)
    s.add_argument("--grid", default="-2:2:1")
    s.add_argument("--out")
    s.set_defaults(func=cmd_scalarize)
    return p


_VALUE_OPTIONS = ("--w", "--grid", "--bound")


def _join_negative_values(argv):
    # argparse reads "-1:1:1" after --grid as an option flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
