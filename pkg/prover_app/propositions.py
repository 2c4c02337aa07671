"""Numerical propositions: ``e1 REL e2`` and ``e in [a, b]``."""

from dataclasses import dataclass
from typing import Mapping

from numerics_app.exceptions import DomainError, ExpressionSyntaxError
from numerics_app.expr import Expr, Parser, Sub, fold_rational, to_text
from numerics_app.interval import Interval, Rel


@dataclass(frozen=True)
class Relational:
    lhs: Expr
    rel: Rel
    rhs: Expr

    def expression(self) -> Expr:
        """The expression whose sign decides the proposition, ``lhs - rhs``."""
        return Sub(self.lhs, self.rhs)

    def __str__(self):
        return f"{to_text(self.lhs)} {self.rel.value} {to_text(self.rhs)}"


@dataclass(frozen=True)
class Membership:
    expr: Expr
    target: Interval

    def __post_init__(self):
        if self.target.empty:
            raise DomainError("Membership target must be a nonempty interval.")

    def expression(self) -> Expr:
        return self.expr

    def __str__(self):
        return f"{to_text(self.expr)} in {self.target}"


Proposition = Relational | Membership

RELATIONS = tuple(rel.value for rel in Rel)


def read_interval(parser: Parser) -> Interval:
    """Read ``[a, b]`` with constant endpoints folded to rationals."""
    start = parser.expect("[")
    lb = _constant(parser)
    parser.expect(",")
    ub = _constant(parser)
    parser.expect("]")
    if lb > ub:
        raise ExpressionSyntaxError(f"Interval [{lb}, {ub}] is empty", start.position)
    return Interval(lb, ub)


def _constant(parser: Parser):
    position = parser.current.position
    node = parser.expression()
    try:
        return fold_rational(node)
    except DomainError as exc:
        raise ExpressionSyntaxError(str(exc), position)


def read_proposition(parser: Parser) -> Proposition:
    lhs = parser.expression()
    if parser.current.kind == "ident" and parser.current.text == "in":
        parser.advance()
        return Membership(lhs, read_interval(parser))
    token = parser.accept(*RELATIONS)
    if token is None:
        parser.fail("Expected a comparison or 'in'")
    return Relational(lhs, Rel(token.text), parser.expression())


def parse_proposition(text: str, bindings: Mapping[str, Expr] | None = None) -> Proposition:
    """Parse a complete proposition such as ``2*x >= x`` or ``x*(1-x) in [0, 1/4]``."""
    parser = Parser(text, bindings)
    proposition = read_proposition(parser)
    parser.expect_end()
    return proposition
