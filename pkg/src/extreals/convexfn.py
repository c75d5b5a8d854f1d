"""Extended-real-valued functions on finite rational grids.

Convexity is checked two ways: Jensen's inequality evaluated with a
chosen addition, and convexity of a sampled epigraph.  With
inf-addition the two agree even for improper functions; with
sup-addition they do not (see :func:`counterexample_fn`).

Checks only visit triples ``(x, y, alpha)`` whose combination
``alpha*x + (1-alpha)*y`` is itself a grid point; the rest are counted
as skipped.
"""

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from .extreal import (
    NEG_INF,
    POS_INF,
    Mode,
    add,
    ext,
    fin,
    fold_inf,
    inf_add,
    parse_extreal,
    scalar_mul,
)
from .qnum import as_rational, format_rational, parse_rational

DEFAULT_ALPHAS = tuple(Fraction(n, d) for n, d in ((1, 4), (1, 3), (1, 2), (2, 3), (3, 4)))


class EmptyDomain(ValueError):
    pass


class DomainMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ExtFn:
    """A table ``x -> f(x)`` over a strictly increasing rational grid."""

    grid: tuple
    values: tuple

    def __post_init__(self):
        grid = tuple(as_rational(x) for x in self.grid)
        values = tuple(ext(v) for v in self.values)
        if len(grid) != len(values):
            raise ValueError("grid and values differ in length")
        if any(a >= b for a, b in zip(grid, grid[1:])):
            raise ValueError("grid must be strictly increasing")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_table", dict(zip(grid, values)))

    @classmethod
    def from_callable(cls, grid, fn):
        grid = [as_rational(x) for x in grid]
        return cls(tuple(grid), tuple(ext(fn(x)) for x in grid))

    @classmethod
    def from_mapping(cls, mapping):
        items = sorted((as_rational(k), ext(v)) for k, v in mapping.items())
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items))

    def __call__(self, x):
        return self._table[x]

    def __contains__(self, x):
        return x in self._table

    def items(self):
        return zip(self.grid, self.values)


@dataclass
class JensenReport:
    holds: bool
    violations: list = field(default_factory=list)
    skipped: int = 0


@dataclass
class EpiReport:
    holds: bool
    witness: tuple = None
    skipped: int = 0

    def __bool__(self):
        return self.holds


def _require_nonempty(f):
    if not f.grid:
        raise EmptyDomain("function has an empty grid")


def _jensen(f, alphas, mode):
    _require_nonempty(f)
    report = JensenReport(holds=True)
    for x in f.grid:
        for y in f.grid:
            if x == y:
                continue
            for alpha in alphas:
                z = alpha * x + (1 - alpha) * y
                if z not in f:
                    report.skipped += 1
                    continue
                lhs = f(z)
                rhs = add(mode, scalar_mul(mode, alpha, f(x)), scalar_mul(mode, 1 - alpha, f(y)))
                if not lhs <= rhs:
                    report.violations.append((x, y, alpha, lhs, rhs))
    report.holds = not report.violations
    return report


def jensen_inf_check(f, alphas=DEFAULT_ALPHAS):
    """Jensen's inequality with inf-addition on every grid-closed triple."""
    return _jensen(f, [as_rational(a) for a in alphas], Mode.INF)


def jensen_sup_check(f, alphas=DEFAULT_ALPHAS):
    """Same as :func:`jensen_inf_check` but with sup-addition."""
    return _jensen(f, [as_rational(a) for a in alphas], Mode.SUP)


def default_r_levels(f, alphas=DEFAULT_ALPHAS):
    """Epigraph heights that make the sampled epigraph test sharp.

    The finite values of ``f`` plus one level low enough that pairing it
    with a ``-inf`` point drags any convex combination under every
    finite value of ``f``.
    """
    finite = sorted({v.value for v in f.values if v.is_finite})
    if not finite:
        return [Fraction(0)]
    lo, hi = finite[0], finite[-1]
    a_min = min(as_rational(a) for a in alphas)
    a_min = min(a_min, 1 - max(as_rational(a) for a in alphas))
    floor = lo - (1 - a_min) / a_min * (hi - lo) - 1
    return [floor] + finite


def epi_convex_sampled(f, r_levels=None, alphas=DEFAULT_ALPHAS):
    """Check that the sampled epigraph of ``f`` is closed under convex combinations.

    Returns an :class:`EpiReport`; on failure ``witness`` is the first
    ``((x, r), (y, s), alpha)`` whose combination leaves the epigraph.

    Only the lowest sampled height above each ``f(x)`` is paired: if a
    combination of two epigraph points fails, it also fails after
    lowering either height, so higher levels cannot add a failure.
    """
    _require_nonempty(f)
    alphas = [as_rational(a) for a in alphas]
    if r_levels is None:
        r_levels = default_r_levels(f, alphas)
    levels = sorted(as_rational(r) for r in r_levels)
    epi = []
    for x in f.grid:
        r = next((r for r in levels if f(x) <= fin(r)), None)
        if r is not None:
            epi.append((x, r))
    skipped = 0
    for x, r in epi:
        for y, s in epi:
            if x == y:
                continue
            for alpha in alphas:
                z = alpha * x + (1 - alpha) * y
                if z not in f:
                    skipped += 1
                    continue
                if not f(z) <= fin(alpha * r + (1 - alpha) * s):
                    return EpiReport(False, ((x, r), (y, s), alpha), skipped)
    return EpiReport(True, None, skipped)


def pointwise_inf_sum(f1, f2):
    if f1.grid != f2.grid:
        raise DomainMismatch("pointwise sum needs identical grids")
    return ExtFn(f1.grid, tuple(inf_add(a, b) for a, b in zip(f1.values, f2.values)))


def inf_convolution(f1, f2, grid=None):
    """``x -> inf{f1(x1) +inf f2(x2) | x1 + x2 = x}`` over the grids.

    The output grid defaults to ``f1``'s grid.  A point without any split
    ``x1 + x2 = x`` (both on their grids) gets ``+inf``.
    """
    out_grid = f1.grid if grid is None else tuple(as_rational(x) for x in grid)
    values = []
    for x in out_grid:
        values.append(fold_inf(inf_add(f1(x1), f2(x - x1)) for x1 in f1.grid if (x - x1) in f2))
    return ExtFn(out_grid, tuple(values))


def counterexample_fn(grid):
    """``+inf`` left of 0, ``0`` at 0, ``-inf`` right of 0.

    Convex, but Jensen's inequality fails for it under sup-addition.
    """
    grid = [as_rational(x) for x in grid]
    if 0 not in grid:
        raise ValueError("grid must contain 0")
    return ExtFn.from_callable(grid, lambda x: POS_INF if x < 0 else (fin(0) if x == 0 else NEG_INF))


def is_proper(f):
    """Somewhere below ``+inf`` and nowhere ``-inf``."""
    return any(v != POS_INF for v in f.values) and all(v != NEG_INF for v in f.values)


# ---------------------------------------------------------------------------
# CSV tables: header ``x,value``, exact rationals, ``-inf``/``+inf`` tokens


class TableFormatError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


def to_csv(f):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "value"])
    for x, v in f.items():
        w.writerow([format_rational(x), str(v)])
    return buf.getvalue()


def from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["x", "value"]:
        raise TableFormatError("expected header 'x,value'", 1)
    table = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise TableFormatError(f"expected 2 fields, got {len(row)}", lineno)
        try:
            x = parse_rational(row[0])
            v = parse_extreal(row[1])
        except ValueError as exc:
            raise TableFormatError(str(exc), lineno) from None
        if x in table:
            raise TableFormatError(f"duplicate grid point {row[0].strip()}", lineno)
        table[x] = v
    return ExtFn.from_mapping(table)

