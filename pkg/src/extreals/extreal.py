"""Extended real numbers with sup-addition and inf-addition.

One value type, :class:`ExtReal`, carries the order.  The two
arithmetics differ only in how they treat ``+inf`` against ``-inf``, so
the arithmetic is picked per call through :class:`Mode` (or by calling
the ``sup_*``/``inf_*`` functions directly):

* ``Mode.SUP`` -- sup-addition, ``-inf`` absorbing, ``(+inf) + (-inf) = -inf``
* ``Mode.INF`` -- inf-addition, ``+inf`` absorbing, ``(+inf) + (-inf) = +inf``

``-`` is never a group inverse.  :func:`sup_diff` and :func:`inf_diff`
are the residuals of the respective additions, which makes them total.
"""

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import total_ordering

from . import cutmodel as cm
from .qnum import ZERO, as_rational, format_rational, parse_rational


class Mode(Enum):
    SUP = "sup"
    INF = "inf"


class InvalidMultiplier(cm.InvalidMultiplier):
    pass


class _Kind(IntEnum):
    NEG_INF = 0
    FIN = 1
    POS_INF = 2


@total_ordering
@dataclass(frozen=True, eq=True)
class ExtReal:
    """An element of ``{-inf} ∪ Q ∪ {+inf}``.

    Build finite values with :func:`fin`; the infinities are the module
    constants :data:`NEG_INF` and :data:`POS_INF`.
    """

    kind: _Kind
    value: Fraction = None

    def __post_init__(self):
        if self.kind is _Kind.FIN:
            object.__setattr__(self, "value", as_rational(self.value))
        elif self.value is not None:
            raise ValueError("infinite ExtReal carries no value")

    @property
    def is_finite(self):
        return self.kind is _Kind.FIN

    @property
    def is_pos_inf(self):
        return self.kind is _Kind.POS_INF

    @property
    def is_neg_inf(self):
        return self.kind is _Kind.NEG_INF

    def __lt__(self, other):
        if not isinstance(other, ExtReal):
            return NotImplemented
        if self.kind != other.kind:
            return self.kind < other.kind
        return self.kind is _Kind.FIN and self.value < other.value

    def __neg__(self):
        return neg(self)

    def __str__(self):
        if self.kind is _Kind.NEG_INF:
            return "-inf"
        if self.kind is _Kind.POS_INF:
            return "+inf"
        return format_rational(self.value)

    def __repr__(self):
        return f"ExtReal({self})"


NEG_INF = ExtReal(_Kind.NEG_INF)
POS_INF = ExtReal(_Kind.POS_INF)


def fin(q):
    return ExtReal(_Kind.FIN, as_rational(q))


def ext(x):
    """Coerce ints, Fractions, strings and ExtReals to :class:`ExtReal`."""
    if isinstance(x, ExtReal):
        return x
    if isinstance(x, str):
        return parse_extreal(x)
    return fin(x)


def parse_extreal(text):
    t = text.strip()
    if t in ("+inf", "inf"):
        return POS_INF
    if t == "-inf":
        return NEG_INF
    return fin(parse_rational(t))


# ---------------------------------------------------------------------------
# identification with lower / upper cut sets


def from_downset(A):
    """``{}`` is ``-inf``, ``{p < q}`` is ``q``, ``Q`` is ``+inf``."""
    if not isinstance(A, cm.DownSet) or not A.is_cut:
        raise cm.NotACut(f"{A} is not a lower cut set")
    if A.kind is cm.Kind.EMPTY:
        return NEG_INF
    if A.kind is cm.Kind.ALL:
        return POS_INF
    return fin(A.boundary)


def to_downset(x):
    if x.kind is _Kind.NEG_INF:
        return cm.EMPTY_DOWN
    if x.kind is _Kind.POS_INF:
        return cm.ALL_DOWN
    return cm.open_below(x.value)


def from_upset(B):
    """``Q`` is ``-inf``, ``{p > q}`` is ``q``, ``{}`` is ``+inf``."""
    if not isinstance(B, cm.UpSet) or not B.is_cut:
        raise cm.NotACut(f"{B} is not an upper cut set")
    if B.kind is cm.Kind.EMPTY:
        return POS_INF
    if B.kind is cm.Kind.ALL:
        return NEG_INF
    return fin(B.boundary)


def to_upset(x):
    if x.kind is _Kind.NEG_INF:
        return cm.ALL_UP
    if x.kind is _Kind.POS_INF:
        return cm.EMPTY_UP
    return cm.open_above(x.value)


# ---------------------------------------------------------------------------
# additions and pseudodifferences


def sup_add(a, b):
    if a.is_neg_inf or b.is_neg_inf:
        return NEG_INF
    if a.is_pos_inf or b.is_pos_inf:
        return POS_INF
    return fin(a.value + b.value)


def inf_add(a, b):
    if a.is_pos_inf or b.is_pos_inf:
        return POS_INF
    if a.is_neg_inf or b.is_neg_inf:
        return NEG_INF
    return fin(a.value + b.value)


def sup_diff(a, c):
    """Largest ``u`` with ``sup_add(c, u) <= a``."""
    if c.is_neg_inf or a.is_pos_inf:
        return POS_INF
    if a.is_neg_inf or c.is_pos_inf:
        return NEG_INF
    return fin(a.value - c.value)


def inf_diff(b, d):
    """Smallest ``x`` with ``b <= inf_add(d, x)``."""
    if d.is_pos_inf or b.is_neg_inf:
        return NEG_INF
    if b.is_pos_inf or d.is_neg_inf:
        return POS_INF
    return fin(b.value - d.value)


def add(mode, a, b):
    return sup_add(a, b) if mode is Mode.SUP else inf_add(a, b)


def diff(mode, a, c):
    return sup_diff(a, c) if mode is Mode.SUP else inf_diff(a, c)


def neg(x):
    if x.is_neg_inf:
        return POS_INF
    if x.is_pos_inf:
        return NEG_INF
    return fin(-x.value)


def scalar_mul(mode, s, x):
    """Multiply by a nonnegative rational; ``0 * (±inf) = 0`` in both modes.

    The closed form does not depend on ``mode``; the argument is kept so
    call sites state which conlinear space they work in.
    """
    s = as_rational(s)
    if s < 0:
        raise InvalidMultiplier(f"negative multiplier {s}")
    if s == 0:
        return fin(ZERO)
    if x.is_finite:
        return fin(s * x.value)
    return x


def fold_sup(xs):
    return max(xs, default=NEG_INF)


def fold_inf(xs):
    return min(xs, default=POS_INF)


# ---------------------------------------------------------------------------
# addition recomputed from proper (finite) elements only


def _proper_minorants(x, depth):
    """Finite probes ``u <= x`` and whether they are unbounded above."""
    if x.is_neg_inf:
        return [], False
    if x.is_pos_inf:
        return [fin(p) for p in range(1, depth + 1)], True
    return [fin(x.value - k) for k in range(depth)], False


def _proper_majorants(x, depth):
    if x.is_pos_inf:
        return [], False
    if x.is_neg_inf:
        return [fin(-p) for p in range(1, depth + 1)], True
    return [fin(x.value + k) for k in range(depth)], False


def characterize_add_by_proper(mode, a, b, probe_depth=8):
    """Recompute ``a + b`` from finite minorants (SUP) or majorants (INF).

    SUP: supremum over finite ``u <= a``, ``v <= b`` of ``u + v``.  No
    finite minorant of ``-inf`` exists, so that supremum runs over the
    empty set.  A ``+inf`` operand yields probes unbounded above, and the
    supremum is classified as ``+inf`` instead of being enumerated.
    INF is the mirror image with infima over majorants.
    """
    if probe_depth < 1:
        raise ValueError("probe_depth must be positive")
    if mode is Mode.SUP:
        us, u_unbounded = _proper_minorants(a, probe_depth)
        vs, v_unbounded = _proper_minorants(b, probe_depth)
        if not us or not vs:
            return NEG_INF
        if u_unbounded or v_unbounded:
            return POS_INF
        return fold_sup(fin(u.value + v.value) for u in us for v in vs)
    us, u_unbounded = _proper_majorants(a, probe_depth)
    vs, v_unbounded = _proper_majorants(b, probe_depth)
    if not us or not vs:
        return POS_INF
    if u_unbounded or v_unbounded:
        return NEG_INF
    return fold_inf(fin(u.value + v.value) for u in us for v in vs)
