"""Symbolic model of downward- and upward-closed subsets of Q.

A finite datum can denote exactly four kinds of down-closed set:
``{}``, ``{p | p < b}``, ``{p | p <= b}`` and ``Q``; dually for up-closed
sets.  The lower cut sets (no greatest element) are the ones that are
not ``CLOSED``; likewise for upper sets.  Everything here is exact and
is used as the ground truth for :mod:`extreals.extreal`.

Set-level operations that only make sense on cut sets raise
:class:`NotACut` when handed a closed variant.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce

from .qnum import ZERO, ONE, as_rational, format_rational, parse_rational


class NotACut(ValueError):
    """Operand is down/up-closed but has a greatest/least element."""


class InvalidMultiplier(ValueError):
    """Multiplier outside the admissible set ``OpenBelow(s)``, ``s >= 0``."""


class Kind(Enum):
    EMPTY = "empty"
    OPEN = "open"
    CLOSED = "closed"
    ALL = "all"


def _check_variant(kind, boundary):
    if kind in (Kind.OPEN, Kind.CLOSED):
        if boundary is None:
            raise ValueError(f"{kind.name} variant needs a boundary")
        return as_rational(boundary)
    if boundary is not None:
        raise ValueError(f"{kind.name} variant takes no boundary")
    return None


@dataclass(frozen=True)
class DownSet:
    """A downward-closed subset of Q.

    ``OPEN`` with boundary ``b`` is ``{p | p < b}``, ``CLOSED`` is
    ``{p | p <= b}``.
    """

    kind: Kind
    boundary: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "boundary", _check_variant(self.kind, self.boundary))

    def __contains__(self, q):
        return member_down(self, q)

    @property
    def is_cut(self):
        """True iff the set belongs to the lower cut sets (no greatest element)."""
        return self.kind is not Kind.CLOSED

    def __str__(self):
        if self.kind is Kind.EMPTY:
            return "{}"
        if self.kind is Kind.ALL:
            return "QQ"
        op = "<" if self.kind is Kind.OPEN else "<="
        return f"({op}, {format_rational(self.boundary)})"


@dataclass(frozen=True)
class UpSet:
    """An upward-closed subset of Q.

    ``OPEN`` with boundary ``b`` is ``{p | p > b}``, ``CLOSED`` is
    ``{p | p >= b}``.
    """

    kind: Kind
    boundary: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "boundary", _check_variant(self.kind, self.boundary))

    def __contains__(self, q):
        return member_up(self, q)

    @property
    def is_cut(self):
        return self.kind is not Kind.CLOSED

    def __str__(self):
        if self.kind is Kind.EMPTY:
            return "{}"
        if self.kind is Kind.ALL:
            return "QQ"
        op = ">" if self.kind is Kind.OPEN else ">="
        return f"({op}, {format_rational(self.boundary)})"


def open_below(b):
    return DownSet(Kind.OPEN, b)


def closed_below(b):
    return DownSet(Kind.CLOSED, b)


def open_above(b):
    return UpSet(Kind.OPEN, b)


def closed_above(b):
    return UpSet(Kind.CLOSED, b)


EMPTY_DOWN = DownSet(Kind.EMPTY)
ALL_DOWN = DownSet(Kind.ALL)
EMPTY_UP = UpSet(Kind.EMPTY)
ALL_UP = UpSet(Kind.ALL)

# neutral elements and the cut generated by 1
N_L = open_below(ZERO)
O_L = open_below(ONE)
N_U = open_above(ZERO)
O_U = open_above(ONE)


@dataclass(frozen=True)
class CutPair:
    lower: DownSet
    upper: UpSet


class CutStatus(Enum):
    ORDINARY = "valid-ordinary"
    NON_ORDINARY = "valid-non-ordinary"
    INVALID = "invalid"


@dataclass(frozen=True)
class CutValidity:
    status: CutStatus
    reason: str = ""

    @property
    def valid(self):
        return self.status is not CutStatus.INVALID


@dataclass(frozen=True)
class GridWindow:
    """Finite sample grid ``{k/denominator : |k/denominator| <= bound}``."""

    bound: Fraction
    denominator: int

    def __post_init__(self):
        bound = as_rational(self.bound)
        if bound <= 0:
            raise ValueError("window bound must be positive")
        if int(self.denominator) < 1:
            raise ValueError("window denominator must be >= 1")
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "denominator", int(self.denominator))

    def points(self, refine=1, limit=None):
        """Grid points with spacing ``1/(denominator*refine)`` and ``|q| <= limit``."""
        d = self.denominator * refine
        lim = self.bound if limit is None else limit
        kmax = (lim * d).numerator // (lim * d).denominator
        return [Fraction(k, d) for k in range(-kmax, kmax + 1)]

    def shrunken(self):
        return self.points(limit=self.bound / 2)


# ---------------------------------------------------------------------------
# membership, order, elementary set algebra


def member_down(S, q):
    if S.kind is Kind.EMPTY:
        return False
    if S.kind is Kind.ALL:
        return True
    if S.kind is Kind.OPEN:
        return q < S.boundary
    return q <= S.boundary


def member_up(T, q):
    if T.kind is Kind.EMPTY:
        return False
    if T.kind is Kind.ALL:
        return True
    if T.kind is Kind.OPEN:
        return q > T.boundary
    return q >= T.boundary


# Position of a down-set in the inclusion chain: (rank, boundary, closedness).
def _down_key(S):
    if S.kind is Kind.EMPTY:
        return (0, ZERO, 0)
    if S.kind is Kind.ALL:
        return (2, ZERO, 0)
    return (1, S.boundary, 1 if S.kind is Kind.CLOSED else 0)


# Up-sets grow as the boundary decreases, so the key negates it.
def _up_key(T):
    if T.kind is Kind.EMPTY:
        return (0, ZERO, 0)
    if T.kind is Kind.ALL:
        return (2, ZERO, 0)
    return (1, -T.boundary, 1 if T.kind is Kind.CLOSED else 0)


def subset_down(A, A2):
    """Exact inclusion ``A ⊆ A2`` of down-closed sets."""
    return _down_key(A) <= _down_key(A2)


def subset_up(B, B2):
    return _up_key(B) <= _up_key(B2)


def le_down(A, A2):
    """Order of the lower-set lattice: inclusion."""
    return subset_down(A, A2)


def le_up(B, B2):
    """Order of the upper-set lattice: reverse inclusion."""
    return subset_up(B2, B)


def union_down(A, A2):
    return A if subset_down(A2, A) else A2


def intersect_down(A, A2):
    return A if subset_down(A, A2) else A2


def union_up(B, B2):
    return B if subset_up(B2, B) else B2


def intersect_up(B, B2):
    return B if subset_up(B, B2) else B2


def complement_down(A):
    """``Q \\ A`` as an up-closed set."""
    if A.kind is Kind.EMPTY:
        return ALL_UP
    if A.kind is Kind.ALL:
        return EMPTY_UP
    if A.kind is Kind.OPEN:
        return closed_above(A.boundary)
    return open_above(A.boundary)


def complement_up(B):
    """``Q \\ B`` as a down-closed set."""
    if B.kind is Kind.EMPTY:
        return ALL_DOWN
    if B.kind is Kind.ALL:
        return EMPTY_DOWN
    if B.kind is Kind.OPEN:
        return closed_below(B.boundary)
    return open_below(B.boundary)


def negate_down(A):
    """Element-wise ``(-1)A``; maps down-closed sets to up-closed ones."""
    if A.kind in (Kind.EMPTY, Kind.ALL):
        return UpSet(A.kind)
    return UpSet(A.kind, -A.boundary)


def negate_up(B):
    if B.kind in (Kind.EMPTY, Kind.ALL):
        return DownSet(B.kind)
    return DownSet(B.kind, -B.boundary)


def interior_I(S):
    """Drop the greatest element, if there is one."""
    if S.kind is Kind.CLOSED:
        return open_below(S.boundary)
    return S


def interior_J(T):
    """Drop the least element, if there is one."""
    if T.kind is Kind.CLOSED:
        return open_above(T.boundary)
    return T


def _require_lower(*sets):
    for S in sets:
        if not isinstance(S, DownSet) or not S.is_cut:
            raise NotACut(f"{S} is not a lower cut set")


def _require_upper(*sets):
    for T in sets:
        if not isinstance(T, UpSet) or not T.is_cut:
            raise NotACut(f"{T} is not an upper cut set")


# ---------------------------------------------------------------------------
# cuts


def _witness_points(lower, upper):
    pts = {ZERO}
    for b in (lower.boundary, upper.boundary):
        if b is not None:
            pts.update((b - 1, b, b + 1))
    return sorted(pts)


def validate_cut(c, variant="DL"):
    """Classify ``c`` as an ordinary, non-ordinary or invalid cut.

    ``variant`` selects the third axiom: ``"DL"`` (lower set has no
    greatest element) or ``"DU"`` (upper set has no least element).
    """
    A, B = c.lower, c.upper
    if variant not in ("DL", "DU"):
        raise ValueError(f"unknown cut variant {variant!r}")
    if complement_down(A) != B:
        for q in _witness_points(A, B):
            in_a, in_b = member_down(A, q), member_up(B, q)
            if in_a == in_b:
                where = "both sets" if in_a else "neither set"
                return CutValidity(
                    CutStatus.INVALID, f"(D1) fails at q = {format_rational(q)}: in {where}"
                )
        return CutValidity(CutStatus.INVALID, "(D1) fails")
    # complementary down/up pair: (D2) reduces to disjointness, already implied
    if variant == "DL" and A.kind is Kind.CLOSED:
        return CutValidity(CutStatus.INVALID, f"(DL3) fails: {format_rational(A.boundary)} is greatest in A")
    if variant == "DU" and B.kind is Kind.CLOSED:
        return CutValidity(CutStatus.INVALID, f"(DU3) fails: {format_rational(B.boundary)} is least in B")
    if A.kind in (Kind.EMPTY, Kind.ALL):
        return CutValidity(CutStatus.NON_ORDINARY)
    return CutValidity(CutStatus.ORDINARY)


def to_upper(A):
    """Upper set ``J(Q \\ A)`` of the cut whose lower set is ``A``."""
    _require_lower(A)
    return interior_J(complement_down(A))


def to_lower(B):
    """Lower set ``I(Q \\ B)`` of the cut whose upper set is ``B``."""
    _require_upper(B)
    return interior_I(complement_up(B))


# ---------------------------------------------------------------------------
# Minkowski addition with the empty set absorbing


def minkowski_down(A, A2):
    _require_lower(A, A2)
    if A.kind is Kind.EMPTY or A2.kind is Kind.EMPTY:
        return EMPTY_DOWN
    if A.kind is Kind.ALL or A2.kind is Kind.ALL:
        return ALL_DOWN
    return open_below(A.boundary + A2.boundary)


def minkowski_up(B, B2):
    _require_upper(B, B2)
    if B.kind is Kind.EMPTY or B2.kind is Kind.EMPTY:
        return EMPTY_UP
    if B.kind is Kind.ALL or B2.kind is Kind.ALL:
        return ALL_UP
    return open_above(B.boundary + B2.boundary)


def grid_oracle_sum(A, A2, window):
    """Brute-force check of :func:`minkowski_down` on a sample grid.

    For every point ``q`` of the shrunken window, membership in the
    symbolic sum is compared with the literal definition: ``q = a + a2``
    for some ``a`` in ``A`` and ``a2`` in ``A2``.  Witnesses ``a`` range
    over the window refined to half the spacing, which is what it takes
    to split a grid point lying one step below a grid boundary.
    Boundaries of the operands should sit on the window's grid.
    """
    _require_lower(A, A2)
    total = minkowski_down(A, A2)
    witnesses = window.points(refine=2)
    for q in window.shrunken():
        brute = any(member_down(A, a) and member_down(A2, q - a) for a in witnesses)
        if brute != member_down(total, q):
            return False
    return True


# ---------------------------------------------------------------------------
# complete-lattice operations


def lattice_sup_down(family):
    """Union; the supremum of the empty family is ``{}``."""
    family = list(family)
    _require_lower(*family)
    return reduce(union_down, family, EMPTY_DOWN)


def lattice_inf_down(family):
    """Interior of the intersection; the infimum of the empty family is ``Q``."""
    family = list(family)
    _require_lower(*family)
    return interior_I(reduce(intersect_down, family, ALL_DOWN))


def lattice_sup_up(family):
    """Supremum w.r.t. reverse inclusion: intersection, ``Q`` for the empty family."""
    family = list(family)
    _require_upper(*family)
    return reduce(intersect_up, family, ALL_UP)


def lattice_inf_up(family):
    family = list(family)
    _require_upper(*family)
    return interior_J(reduce(union_up, family, EMPTY_UP))


# ---------------------------------------------------------------------------
# additive inverses


def star_down(A):
    """``I(-(Q \\ A))``: the additive inverse of an ordinary lower set."""
    _require_lower(A)
    return interior_I(negate_up(complement_down(A)))


def star_up(B):
    """``J(-(Q \\ B))``."""
    _require_upper(B)
    return interior_J(negate_down(complement_up(B)))


# ---------------------------------------------------------------------------
# multiplication by nonnegative cuts


def _require_lower_multiplier(S):
    if not (isinstance(S, DownSet) and S.kind is Kind.OPEN and S.boundary >= 0):
        raise InvalidMultiplier(f"{S} is not an admissible lower multiplier")


def _require_upper_multiplier(T):
    if not (isinstance(T, UpSet) and T.kind is Kind.OPEN and T.boundary >= 0):
        raise InvalidMultiplier(f"{T} is not an admissible upper multiplier")


def in_lower_plus(A):
    """``N_L ⊆ A`` for a lower set ``A``."""
    return A.is_cut and subset_down(N_L, A)


def in_upper_plus(B):
    """``B ⊆ N_U`` for an upper set ``B``."""
    return B.is_cut and subset_up(B, N_U)


def _mul_lower_direct(S, A):
    # S = {s < sigma}, sigma >= 0; A in L_+.  The sigma = 0 branch is
    # N_L . A = N_L; the comprehension alone would give {} for N_L . N_L.
    sigma = S.boundary
    if sigma == 0:
        return N_L
    if A.kind is Kind.ALL:
        return ALL_DOWN
    return open_below(sigma * A.boundary)


def _mul_upper_direct(T, B):
    tau = T.boundary
    if B.kind is Kind.EMPTY:
        return N_U if T == N_U else EMPTY_UP
    if tau == 0:
        return N_U
    return open_above(tau * B.boundary)


def mul_lower(S, A):
    """Product of ``S = {s < sigma}`` (``sigma >= 0``) with a lower set ``A``.

    Outside ``L_+`` the product is ``I(-(Q \\ (S . I(-(Q \\ A)))))``,
    computed by composing the set operations rather than by sign rules.
    """
    _require_lower_multiplier(S)
    _require_lower(A)
    if in_lower_plus(A):
        return _mul_lower_direct(S, A)
    if A.kind is Kind.EMPTY:
        return N_L if S == N_L else EMPTY_DOWN
    return star_down(_mul_lower_direct(S, star_down(A)))


def mul_upper(T, B):
    """Product of ``T = {t > tau}`` (``tau >= 0``) with an upper set ``B``."""
    _require_upper_multiplier(T)
    _require_upper(B)
    if in_upper_plus(B):
        return _mul_upper_direct(T, B)
    return star_up(_mul_upper_direct(T, star_up(B)))


def product_tolerance(S, A, window):
    scale = max(ONE, S.boundary, A.boundary if A.kind is Kind.OPEN else ONE)
    return 2 * scale / window.denominator


def grid_oracle_product(S, A, window):
    """Compare :func:`mul_lower` with the sampled product-set comprehension.

    ``S`` must be an admissible multiplier and ``A`` must lie in ``L_+``.
    Admissible grid products are ``s*a`` with ``s`` in ``S``, ``a`` in
    ``A`` and ``s, a >= 0`` or ``s*a < 0``.  For an open result with
    boundary ``r`` every product must stay below ``r`` and the largest
    must come within ``2*max(1, sigma, alpha)/denominator`` of it.  For
    a ``Q`` result the products must run to the window edge, i.e. reach
    ``s_max * bound`` with ``s_max`` the largest positive grid point of
    ``S`` (so ``S`` must contain one).
    """
    _require_lower_multiplier(S)
    if not in_lower_plus(A):
        raise NotACut(f"{A} is not in L_+")
    result = mul_lower(S, A)
    pts = window.points()
    products = [
        s * a
        for s in pts
        if member_down(S, s)
        for a in pts
        if member_down(A, a) and ((s >= 0 and a >= 0) or s * a < 0)
    ]
    if not products:
        return result.kind is Kind.EMPTY
    top = max(products)
    if result.kind is Kind.ALL:
        s_max = max((s for s in pts if member_down(S, s)), default=ZERO)
        return s_max > 0 and top == s_max * window.bound
    if result.kind is not Kind.OPEN:
        return False
    return top < result.boundary and result.boundary - top <= product_tolerance(S, A, window)


# ---------------------------------------------------------------------------
# textual forms


def parse_downset(text):
    """Parse ``{}``, ``QQ``, ``(<, q)`` or ``(<=, q)``."""
    t = text.strip()
    if t == "{}":
        return EMPTY_DOWN
    if t == "QQ":
        return ALL_DOWN
    op, q = _split_form(t)
    if op == "<":
        return open_below(q)
    if op == "<=":
        return closed_below(q)
    raise ValueError(f"not a down-set form: {text!r}")


def parse_upset(text):
    t = text.strip()
    if t == "{}":
        return EMPTY_UP
    if t == "QQ":
        return ALL_UP
    op, q = _split_form(t)
    if op == ">":
        return open_above(q)
    if op == ">=":
        return closed_above(q)
    raise ValueError(f"not an up-set form: {text!r}")


def _split_form(t):
    if not (t.startswith("(") and t.endswith(")")) or "," not in t:
        raise ValueError(f"malformed set form: {t!r}")
    op, q = t[1:-1].split(",", 1)
    return op.strip(), parse_rational(q)
