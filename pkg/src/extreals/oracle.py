"""Randomized law and oracle checks behind the ``oracle`` subcommand.

Each law is a function ``law(rng, window) -> (instance, witness)``.  It
draws one random instance and returns a ``witness`` describing the
failure, or ``None`` when the law held.  Instances are drawn from a
seeded :class:`random.Random`, so a seed replays the same run.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import cutmodel as cm
from . import extreal as er
from .extreal import Mode

MODES = (Mode.SUP, Mode.INF)


def grid_rational(rng, window, limit=None):
    """A point of the window's grid with ``|q| <= limit`` (default: bound/4)."""
    lim = window.bound / 4 if limit is None else limit
    kmax = int(lim * window.denominator)
    return Fraction(rng.randint(-kmax, kmax), window.denominator)


def random_rational(rng, span=50, max_den=12):
    return Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))


def random_extreal(rng):
    r = rng.random()
    if r < 0.15:
        return er.NEG_INF
    if r < 0.3:
        return er.POS_INF
    return er.fin(random_rational(rng))


def random_scalar(rng):
    if rng.random() < 0.15:
        return Fraction(0)
    return Fraction(rng.randint(0, 60), rng.randint(1, 10))


def random_lower(rng, window):
    r = rng.random()
    if r < 0.15:
        return cm.EMPTY_DOWN
    if r < 0.3:
        return cm.ALL_DOWN
    return cm.open_below(grid_rational(rng, window))


def random_downset(rng, window):
    r = rng.random()
    if r < 0.5:
        return random_lower(rng, window)
    return cm.closed_below(grid_rational(rng, window))


# ---------------------------------------------------------------------------
# laws


def law_grid_sum(rng, window):
    A, A2 = random_lower(rng, window), random_lower(rng, window)
    ok = cm.grid_oracle_sum(A, A2, window)
    return (str(A), str(A2)), None if ok else f"grid disagrees with {cm.minkowski_down(A, A2)}"


def law_monoid(rng, window):
    mode = rng.choice(MODES)
    a, b, c = (random_extreal(rng) for _ in range(3))
    add = lambda x, y: er.add(mode, x, y)  # noqa: E731
    absorbing = er.NEG_INF if mode is Mode.SUP else er.POS_INF
    inst = (mode.value, str(a), str(b), str(c))
    if add(add(a, b), c) != add(a, add(b, c)):
        return inst, "associativity"
    if add(a, b) != add(b, a):
        return inst, "commutativity"
    if add(a, er.fin(0)) != a:
        return inst, "neutral element"
    if add(absorbing, a) != absorbing:
        return inst, "absorption"
    return inst, None


def law_homomorphism(rng, window):
    a, b = random_extreal(rng), random_extreal(rng)
    inst = (str(a), str(b))
    if er.to_downset(er.sup_add(a, b)) != cm.minkowski_down(er.to_downset(a), er.to_downset(b)):
        return inst, "sup_add vs lower Minkowski sum"
    if er.to_upset(er.inf_add(a, b)) != cm.minkowski_up(er.to_upset(a), er.to_upset(b)):
        return inst, "inf_add vs upper Minkowski sum"
    return inst, None


def law_residuation(rng, window):
    a, c, u = (random_extreal(rng) for _ in range(3))
    inst = (str(a), str(c), str(u))
    if (er.sup_add(c, u) <= a) != (u <= er.sup_diff(a, c)):
        return inst, "lower adjunction"
    if (er.inf_diff(a, c) <= u) != (a <= er.inf_add(c, u)):
        return inst, "upper adjunction"
    return inst, None


def law_interior(rng, window):
    S, S2 = random_downset(rng, window), random_downset(rng, window)
    inst = (str(S), str(S2))
    I = cm.interior_I
    if not (cm.subset_down(I(S), S) and I(I(S)) == I(S) and I(S).is_cut):
        return inst, "intensive/idempotent"
    if I(cm.intersect_down(S, S2)) != cm.intersect_down(I(S), I(S2)):
        return inst, "binary intersections"
    return inst, None


def law_round_trip(rng, window):
    A = random_lower(rng, window)
    B = cm.negate_down(random_lower(rng, window))
    inst = (str(A), str(B))
    if cm.to_lower(cm.to_upper(A)) != A or cm.to_upper(cm.to_lower(B)) != B:
        return inst, "round trip"
    return inst, None


def law_negation(rng, window):
    A, A2 = random_lower(rng, window), random_lower(rng, window)
    inst = (str(A), str(A2))
    if cm.negate_down(cm.minkowski_down(A, A2)) != cm.minkowski_up(cm.negate_down(A), cm.negate_down(A2)):
        return inst, "additive homomorphism"
    if cm.le_down(A, A2) != cm.le_up(cm.negate_down(A2), cm.negate_down(A)):
        return inst, "order reversal"
    return inst, None


def law_inverse(rng, window):
    A = random_lower(rng, window)
    inst = (str(A),)
    star = cm.star_down(A)
    if A.kind is cm.Kind.OPEN and cm.minkowski_down(A, star) != cm.N_L:
        return inst, "A + A* != N_L"
    return inst, None


def law_conlinear(rng, window):
    mode = rng.choice(MODES)
    s, t = random_scalar(rng), random_scalar(rng)
    a, b = random_extreal(rng), random_extreal(rng)
    mul = lambda k, x: er.scalar_mul(mode, k, x)  # noqa: E731
    inst = (mode.value, str(s), str(t), str(a), str(b))
    if mul(s, er.add(mode, a, b)) != er.add(mode, mul(s, a), mul(s, b)):
        return inst, "distributivity"
    if mul(s * t, a) != mul(s, mul(t, a)):
        return inst, "associativity of scaling"
    if mul(1, a) != a or mul(0, a) != er.fin(0):
        return inst, "unit / zero"
    if a <= b and not mul(s, a) <= mul(s, b):
        return inst, "monotonicity"
    return inst, None


def law_product_vs_cuts(rng, window):
    s = random_scalar(rng)
    x = random_extreal(rng)
    inst = (str(s), str(x))
    if er.to_downset(er.scalar_mul(Mode.SUP, s, x)) != cm.mul_lower(cm.open_below(s), er.to_downset(x)):
        return inst, "scalar_mul vs lower product"
    if er.to_upset(er.scalar_mul(Mode.INF, s, x)) != cm.mul_upper(cm.open_above(s), er.to_upset(x)):
        return inst, "scalar_mul vs upper product"
    return inst, None


LAWS = {
    "grid-sum": law_grid_sum,
    "monoid": law_monoid,
    "homomorphism": law_homomorphism,
    "residuation": law_residuation,
    "interior": law_interior,
    "round-trip": law_round_trip,
    "negation": law_negation,
    "inverse": law_inverse,
    "conlinear": law_conlinear,
    "product": law_product_vs_cuts,
}


@dataclass
class LawResult:
    name: str
    passed: int = 0
    failed: int = 0
    witness: tuple = None


@dataclass
class OracleReport:
    results: list = field(default_factory=list)
    instances: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.failed == 0 for r in self.results)

    def lines(self):
        out = []
        for r in self.results:
            total = r.passed + r.failed
            status = "ok" if r.failed == 0 else "FAIL"
            line = f"{r.name}: {r.passed}/{total} passed [{status}]"
            if r.witness is not None:
                inst, why = r.witness
                line += f"  witness: {why} at {', '.join(inst)}"
            out.append(line)
        return out


def run_oracle(trials=200, seed=42, window=None, laws=None):
    if window is None:
        window = cm.GridWindow(Fraction(4), 8)
    laws = LAWS if laws is None else laws
    rng = random.Random(seed)
    report = OracleReport()
    for name, law in laws.items():
        res = LawResult(name)
        for _ in range(trials):
            inst, witness = law(rng, window)
            report.instances.append((name, inst))
            if witness is None:
                res.passed += 1
            else:
                res.failed += 1
                if res.witness is None:
                    res.witness = (inst, witness)
        report.results.append(res)
    return report


def broken_law(rng, window):
    """Deliberately false: claims ``(+inf) + (-inf) = 0`` under sup-addition."""
    a = random_extreal(rng)
    inst = (str(a),)
    if er.sup_add(er.POS_INF, er.NEG_INF) != er.fin(0):
        return inst, "(+inf) + (-inf) != 0"
    return inst, None
