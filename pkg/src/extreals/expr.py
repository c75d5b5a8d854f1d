"""Expression language over extended reals.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | '+inf' | '-inf' | 'neg' factor | '(' expr ')'
              | ('sup' | 'inf') '(' expr (',' expr)* ')'
    rational := ['-'] digits ['/' digits]

``-`` is the pseudodifference of the chosen mode and ``neg`` is unary
negation.  In a product one side must be a nonnegative rational literal.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import extreal as er
from .qnum import format_rational, q_normalize


class ExprSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Literal:
    value: er.ExtReal


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Diff:
    left: object
    right: object


@dataclass(frozen=True)
class Scale:
    coeff: Fraction
    arg: object

    def __post_init__(self):
        if self.coeff < 0:
            raise ValueError("scale coefficient must be nonnegative")


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Sup:
    args: tuple


@dataclass(frozen=True)
class Inf:
    args: tuple


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise ExprSyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        self.skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s):
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def keyword(self, word):
        # word followed by a non-identifier character
        self.skip()
        end = self.pos + len(word)
        if self.text.startswith(word, self.pos) and not (end < len(self.text) and self.text[end].isalnum()):
            self.pos = end
            return True
        return False

    def parse(self):
        e = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return e

    def expr(self):
        e = self.term()
        while True:
            if self.eat("+"):
                e = Add(e, self.term())
            elif self.eat("-"):
                e = Diff(e, self.term())
            else:
                return e

    def term(self):
        start = self.pos
        e = self.factor()
        while self.eat("*"):
            at = self.pos
            rhs = self.factor()
            e = self._scale(e, rhs, start, at)
        return e

    def _scale(self, lhs, rhs, lpos, rpos):
        for coeff, arg, pos in ((lhs, rhs, lpos), (rhs, lhs, rpos)):
            if isinstance(coeff, Literal) and coeff.value.is_finite:
                if coeff.value.value < 0:
                    self.error("negative scale coefficient", pos)
                return Scale(coeff.value.value, arg)
        self.error("product needs a nonnegative rational coefficient", lpos)

    def number(self):
        self.skip()
        start = self.pos
        neg = self.text.startswith("-", self.pos)
        if neg:
            self.pos += 1
            self.skip()
        digits = self._digits()
        if digits is None:
            self.error("expected digits", self.pos)
        den = 1
        if self.eat("/"):
            self.skip()
            d = self._digits()
            if d is None:
                self.error("expected denominator digits")
            if d == 0:
                self.error("zero denominator", start)
            den = d
        return Literal(er.fin(q_normalize(-digits if neg else digits, den)))

    def _digits(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start:self.pos])

    def factor(self):
        self.skip()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        if self.eat("+inf"):
            return Literal(er.POS_INF)
        if self.eat("-inf"):
            return Literal(er.NEG_INF)
        if self.keyword("neg"):
            return Neg(self.factor())
        for word, node in (("sup", Sup), ("inf", Inf)):
            if self.keyword(word):
                self.expect("(")
                args = [self.expr()]
                while self.eat(","):
                    args.append(self.expr())
                self.expect(")")
                return node(tuple(args))
        if self.eat("("):
            e = self.expr()
            self.expect(")")
            return e
        ch = self.text[self.pos]
        if ch.isdigit() or ch == "-":
            return self.number()
        self.error(f"unexpected character {ch!r}")


def parse(text):
    """Parse an expression; raises :class:`ExprSyntaxError` with a position."""
    return _Parser(text).parse()


def to_text(e):
    """Print ``e`` so that ``parse(to_text(e)) == e``."""

    def wrap(x):
        return to_text(x) if isinstance(x, (Literal, Sup, Inf)) else f"({to_text(x)})"

    if isinstance(e, Literal):
        return str(e.value)
    if isinstance(e, Add):
        return f"{wrap(e.left)} + {wrap(e.right)}"
    if isinstance(e, Diff):
        return f"{wrap(e.left)} - {wrap(e.right)}"
    if isinstance(e, Scale):
        return f"{format_rational(e.coeff)} * {wrap(e.arg)}"
    if isinstance(e, Neg):
        return f"neg {wrap(e.arg)}"
    if isinstance(e, (Sup, Inf)):
        name = "sup" if isinstance(e, Sup) else "inf"
        return f"{name}({', '.join(to_text(a) for a in e.args)})"
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(e, mode):
    if isinstance(e, Literal):
        return e.value
    if isinstance(e, Add):
        return er.add(mode, evaluate(e.left, mode), evaluate(e.right, mode))
    if isinstance(e, Diff):
        return er.diff(mode, evaluate(e.left, mode), evaluate(e.right, mode))
    if isinstance(e, Scale):
        return er.scalar_mul(mode, e.coeff, evaluate(e.arg, mode))
    if isinstance(e, Neg):
        return er.neg(evaluate(e.arg, mode))
    if isinstance(e, Sup):
        return er.fold_sup(evaluate(a, mode) for a in e.args)
    if isinstance(e, Inf):
        return er.fold_inf(evaluate(a, mode) for a in e.args)
    raise TypeError(f"not an expression node: {e!r}")
