"""Exact rational arithmetic.

Every cut boundary and every scalar in this package is a
:class:`fractions.Fraction`.  ``Fraction`` already keeps numerator and
denominator reduced with a positive denominator, so structural equality
is value equality; the helpers here only pin down the small surface the
rest of the package relies on (construction, ordering, textual form).
"""

import re
from enum import Enum
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class InvalidRational(ValueError):
    """Raised for a zero denominator or an unparseable rational literal."""


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def q_normalize(n, d=1):
    """Return ``n/d`` in canonical form (reduced, positive denominator)."""
    if d == 0:
        raise InvalidRational("zero denominator")
    return Fraction(int(n), int(d))


def as_rational(x):
    """Coerce ints, Fractions and ``p/q`` strings to :class:`Fraction`.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def q_add(a, b):
    return a + b


def q_sub(a, b):
    return a - b


def q_mul(a, b):
    return a * b


def q_cmp(a, b):
    if a < b:
        return Ordering.LT
    if a > b:
        return Ordering.GT
    return Ordering.EQ


def parse_rational(text):
    """Parse ``p`` or ``p/q`` with an optional sign on ``p``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InvalidRational(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    return q_normalize(int(num), int(den) if den is not None else 1)


def format_rational(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
