"""Closed intervals with exact rational endpoints.

An interval with ``lb > ub`` is empty. Operations never raise on a
violated side condition (a divisor containing zero, for instance); they
return :data:`EMPTY` instead and every operation propagates it.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .exceptions import DomainError
from .rational import format_rational, parse_rational, round_dyadic


@dataclass(frozen=True)
class Interval:
    lb: Fraction
    ub: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lb", Fraction(self.lb))
        object.__setattr__(self, "ub", Fraction(self.ub))

    @property
    def empty(self) -> bool:
        return self.lb > self.ub

    @property
    def strictly_proper(self) -> bool:
        return self.lb < self.ub

    def __str__(self):
        if self.empty:
            return "empty"
        return f"[{format_rational(self.lb)}, {format_rational(self.ub)}]"

    def __add__(self, other):
        return add(self, _coerce(other))

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __mul__(self, other):
        return mul(self, _coerce(other))

    def __truediv__(self, other):
        return div(self, _coerce(other))

    def __neg__(self):
        return neg(self)

    def __pow__(self, n: int):
        return pow_i(self, n)

    def __contains__(self, x) -> bool:
        return contains(Fraction(x), self)


EMPTY = Interval(1, 0)


class Rel(str, Enum):
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="

    @property
    def negated(self) -> "Rel":
        return _NEGATIONS[self]

    def holds(self, a, b) -> bool:
        match self:
            case Rel.LT:
                return a < b
            case Rel.LE:
                return a <= b
            case Rel.GT:
                return a > b
            case Rel.GE:
                return a >= b


_NEGATIONS = {Rel.LT: Rel.GE, Rel.LE: Rel.GT, Rel.GT: Rel.LE, Rel.GE: Rel.LT}


def _coerce(value) -> Interval:
    if isinstance(value, Interval):
        return value
    return point(value)


def point(a) -> Interval:
    return Interval(a, a)


def is_empty(X: Interval) -> bool:
    return X.empty


def width(X: Interval) -> Fraction:
    if X.empty:
        raise DomainError("The empty interval has no width.")
    return X.ub - X.lb


def add(X: Interval, Y: Interval) -> Interval:
    if X.empty or Y.empty:
        return EMPTY
    return Interval(X.lb + Y.lb, X.ub + Y.ub)


def sub(X: Interval, Y: Interval) -> Interval:
    if X.empty or Y.empty:
        return EMPTY
    return Interval(X.lb - Y.ub, X.ub - Y.lb)


def neg(X: Interval) -> Interval:
    if X.empty:
        return EMPTY
    return Interval(-X.ub, -X.lb)


def mul(X: Interval, Y: Interval) -> Interval:
    """Product by case analysis on the signs of both operands.

    Equal to the min/max over the four endpoint products, with at most
    two multiplications outside the case where both operands straddle 0.
    """
    if X.empty or Y.empty:
        return EMPTY
    a, b, c, d = X.lb, X.ub, Y.lb, Y.ub
    if a >= 0:
        if c >= 0:
            return Interval(a * c, b * d)
        if d <= 0:
            return Interval(b * c, a * d)
        return Interval(b * c, b * d)
    if b <= 0:
        if c >= 0:
            return Interval(a * d, b * c)
        if d <= 0:
            return Interval(b * d, a * c)
        return Interval(a * d, a * c)
    if c >= 0:
        return Interval(a * d, b * d)
    if d <= 0:
        return Interval(b * c, a * c)
    return Interval(min(a * d, b * c), max(a * c, b * d))


def div(X: Interval, Y: Interval) -> Interval:
    """``X / Y``, or :data:`EMPTY` unless ``Y`` lies strictly on one side of 0."""
    if X.empty or Y.empty or Y.lb * Y.ub <= 0:
        return EMPTY
    return mul(X, Interval(1 / Y.ub, 1 / Y.lb))


def abs_i(X: Interval) -> Interval:
    if X.empty:
        return EMPTY
    low, high = abs(X.lb), abs(X.ub)
    if X.lb * X.ub >= 0:
        return Interval(min(low, high), max(low, high))
    return Interval(0, max(low, high))


def pow_i(X: Interval, n: int) -> Interval:
    if n < 0:
        raise DomainError("Interval powers take a natural exponent.")
    if X.empty:
        return EMPTY
    if n == 0:
        return Interval(1, 1)
    if X.lb >= 0 or n % 2:
        return Interval(X.lb ** n, X.ub ** n)
    if X.ub <= 0:
        return Interval(X.ub ** n, X.lb ** n)
    return Interval(0, max(X.lb ** n, X.ub ** n))


def union(X: Interval, Y: Interval) -> Interval:
    """Smallest interval containing both operands (their hull)."""
    if X.empty:
        return Y
    if Y.empty:
        return X
    return Interval(min(X.lb, Y.lb), max(X.ub, Y.ub))


def hull_all(intervals: Iterable[Interval]) -> Interval:
    result = EMPTY
    for X in intervals:
        result = union(result, X)
    return result


def rel_cmp(X: Interval, rel: Rel, a) -> bool:
    """Whether every point of ``X`` stands in ``rel`` to ``a``.

    The empty interval satisfies every comparison vacuously; callers that
    care (the prover does) check :attr:`Interval.empty` first.
    """
    if X.empty:
        return True
    rel = Rel(rel)
    if rel in (Rel.LT, Rel.LE):
        return rel.holds(X.ub, a)
    return rel.holds(X.lb, a)


def subset(X: Interval, Y: Interval) -> bool:
    if X.empty:
        return True
    if Y.empty:
        return False
    return Y.lb <= X.lb and X.ub <= Y.ub


def contains(x: Fraction, X: Interval) -> bool:
    return X.lb <= x <= X.ub


def intersects(X: Interval, Y: Interval) -> bool:
    if X.empty or Y.empty:
        return False
    return X.lb <= Y.ub and Y.lb <= X.ub


def disjoint(X: Interval, Y: Interval) -> bool:
    """Both operands nonempty and without a common point."""
    if X.empty or Y.empty:
        return False
    return not intersects(X, Y)


def split_even(X: Interval, k: int) -> list[Interval]:
    """Cut ``X`` into ``k`` closed tiles of equal width.

    Raises:
        DomainError: If ``X`` is empty or ``k < 1``.
    """
    if X.empty:
        raise DomainError("Cannot split the empty interval.")
    if k < 1:
        raise DomainError(f"Tile count must be at least 1, got {k}.")
    step = (X.ub - X.lb) / k
    cuts = [X.lb + i * step for i in range(k)] + [X.ub]
    return [Interval(cuts[i], cuts[i + 1]) for i in range(k)]


def midpoint(X: Interval) -> Fraction:
    if X.empty:
        raise DomainError("The empty interval has no midpoint.")
    return (X.lb + X.ub) / 2


def round_out(X: Interval, bits: int) -> Interval:
    """Widen ``X`` to dyadic endpoints with denominator ``2^bits``."""
    if X.empty:
        return X
    return Interval(round_dyadic(X.lb, bits, "down"), round_dyadic(X.ub, bits, "up"))


def to_json(X: Interval) -> dict:
    if X.empty:
        return {"empty": True}
    return {"lb": format_rational(X.lb), "ub": format_rational(X.ub)}


def from_json(data: dict) -> Interval:
    if data.get("empty"):
        return EMPTY
    try:
        return Interval(parse_rational(data["lb"]), parse_rational(data["ub"]))
    except KeyError as exc:
        raise DomainError(f"Interval JSON is missing '{exc.args[0]}'.")
