"""Polyhedral set-valued functions and their linear scalarizations.

Values are kept in generator form, ``conv(points) + cone(rays)``, so the
infimum of a linear functional is a finite minimum over the points plus
a sign test on the rays.  A value with no points is the empty set.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .convexfn import ExtFn
from .extreal import NEG_INF, POS_INF, fin
from .qnum import as_rational, format_rational, parse_rational


class DimensionMismatch(ValueError):
    pass


def _vec(v):
    return tuple(as_rational(c) for c in v)


def dot(w, z):
    if len(w) != len(z):
        raise DimensionMismatch(f"length {len(w)} vs {len(z)}")
    return sum((a * b for a, b in zip(w, z)), Fraction(0))


@dataclass(frozen=True)
class PolyVal:
    dim: int
    points: tuple = ()
    rays: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        points = tuple(_vec(p) for p in self.points)
        rays = tuple(_vec(r) for r in self.rays)
        for v in points + rays:
            if len(v) != self.dim:
                raise DimensionMismatch(f"generator {v} is not of length {self.dim}")
        if any(all(c == 0 for c in r) for r in rays):
            raise ValueError("rays must be nonzero")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "rays", rays)

    @property
    def is_empty(self):
        return not self.points

    def plus_cone(self, rays):
        """``self + cone(rays)``; the empty set stays empty."""
        if self.is_empty:
            return self
        extra = tuple(_vec(r) for r in rays if _vec(r) not in self.rays)
        return PolyVal(self.dim, self.points, self.rays + extra)

    def __str__(self):
        def fmt(vs):
            return ";".join("(" + ",".join(format_rational(c) for c in v) + ")" for v in vs)

        return f"points:[{fmt(self.points)}] rays:[{fmt(self.rays)}]"


_POLY_RE = re.compile(r"^\s*points:\[(.*?)\]\s*rays:\[(.*?)\]\s*$")


def parse_polyval(text, dim=None):
    """Inverse of ``str(PolyVal)``: ``points:[(a,b);...] rays:[(c,d);...]``.

    ``dim`` is required for a value without generators and checked otherwise.
    """
    m = _POLY_RE.match(text)
    if m is None:
        raise ValueError(f"malformed PolyVal: {text!r}")

    def vecs(body):
        body = body.strip()
        if not body:
            return []
        out = []
        for part in body.split(";"):
            part = part.strip()
            if not (part.startswith("(") and part.endswith(")")):
                raise ValueError(f"malformed vector {part!r}")
            out.append(tuple(parse_rational(c) for c in part[1:-1].split(",")))
        return out

    points, rays = vecs(m.group(1)), vecs(m.group(2))
    dims = {len(v) for v in points + rays}
    if dim is not None:
        dims.add(dim)
    if len(dims) != 1:
        raise ValueError("cannot infer a single dimension")
    return PolyVal(dims.pop(), tuple(points), tuple(rays))


@dataclass(frozen=True)
class SetFn:
    grid: tuple
    values: tuple

    def __post_init__(self):
        grid = tuple(as_rational(x) for x in self.grid)
        if len(grid) != len(self.values):
            raise ValueError("grid and values differ in length")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", tuple(self.values))

    def __call__(self, x):
        return self.values[self.grid.index(x)]

    def items(self):
        return zip(self.grid, self.values)


def support_inf(P, w):
    """``inf{w . z | z in P}`` as an extended real (``+inf`` on the empty set)."""
    w = _vec(w)
    if len(w) != P.dim:
        raise DimensionMismatch(f"direction of length {len(w)} for a {P.dim}-dim set")
    if P.is_empty:
        return POS_INF
    if any(dot(w, r) < 0 for r in P.rays):
        return NEG_INF
    return fin(min(dot(w, p) for p in P.points))


def triangle(f, cone_rays):
    """Attach the ordering cone ``C = cone(cone_rays)`` to every nonempty value."""
    return SetFn(f.grid, tuple(P.plus_cone(cone_rays) for P in f.values))


def scalarization(f, w, cone_rays=()):
    """The scalar function ``x -> inf{w . z | z in f(x) + C}``."""
    if cone_rays:
        f = triangle(f, cone_rays)
    return ExtFn(f.grid, tuple(support_inf(P, w) for P in f.values))


V = (Fraction(0), Fraction(1))


def example_setfn(grid):
    """The half-plane / cone / empty example with ``v = (0, 1)``, ``C = cone{v}``.

    ``{z | z2 >= 0}`` for ``x > 0``, ``C`` at ``x = 0`` and ``{}`` for ``x < 0``.
    """
    grid = sorted(as_rational(x) for x in grid)
    if 0 not in grid:
        raise ValueError("grid must contain 0")
    half_plane = PolyVal(2, ((0, 0),), ((1, 0), (-1, 0), V))
    cone = PolyVal(2, ((0, 0),), (V,))
    empty = PolyVal(2)
    return SetFn(tuple(grid), tuple(half_plane if x > 0 else cone if x == 0 else empty for x in grid))


def _rank(vectors):
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                k = rows[i][col] / rows[rank][col]
                rows[i] = [a - k * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _positive_multiple(r, s):
    # s = t * r for some t > 0
    t = None
    for a, b in zip(r, s):
        if a == 0 and b == 0:
            continue
        if a == 0 or b == 0:
            return False
        q = b / a
        if q <= 0 or (t is not None and q != t):
            return False
        t = q
    return t is not None


def cone_is_full_space(rays, dim):
    """Sufficient test for ``cone(rays) = Q^dim``.

    True when the rays whose negation is also a ray (up to positive
    scaling) span the whole space.  May miss full cones that need a
    genuinely positive combination, e.g. three rays at 120 degrees.
    """
    rays = [_vec(r) for r in rays]
    two_sided = [r for r in rays if any(_positive_multiple(tuple(-c for c in r), s) for s in rays)]
    return bool(two_sided) and _rank(two_sided) == dim


@dataclass(frozen=True)
class ProperReport:
    dom_nonempty: bool
    no_full_space_value: bool


def properness_report(f):
    dom = any(not P.is_empty for P in f.values)
    full = any(not P.is_empty and cone_is_full_space(P.rays, P.dim) for P in f.values)
    return ProperReport(dom_nonempty=dom, no_full_space_value=not full)


def direction_fan(n=16):
    """``n`` rational directions ``(1 - t^2, 2t)``, ``t = k/4``, sweeping ``w2 >= 0``.

    Exactly one of them, ``t = 1``, is collinear with ``v = (0, 1)``.
    """
    out = []
    for k in range(n):
        t = Fraction(k, 4)
        out.append((1 - t * t, 2 * t))
    return out
