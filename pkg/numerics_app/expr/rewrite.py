"""Exact values of sine, cosine and tangent at notable multiples of pi."""

import logging
from fractions import Fraction

from .nodes import Binary, Const, Cos, Div, Expr, Mul, Neg, PowNat, Sin, Sqrt, Tan, Unary
from .simplify import pi_multiple

logger = logging.getLogger(__name__)

NOTABLE_DENOMINATORS = frozenset({1, 2, 3, 4, 6})

# Values are (a, s) standing for a * sqrt(s).
_SIN_FIRST_QUADRANT = {
    Fraction(0): (Fraction(0), 1),
    Fraction(1, 6): (Fraction(1, 2), 1),
    Fraction(1, 4): (Fraction(1, 2), 2),
    Fraction(1, 3): (Fraction(1, 2), 3),
    Fraction(1, 2): (Fraction(1), 1),
}

_TAN_HALF_TURN = {
    Fraction(0): (Fraction(0), 1),
    Fraction(1, 6): (Fraction(1, 3), 3),
    Fraction(1, 4): (Fraction(1), 1),
    Fraction(1, 3): (Fraction(1), 3),
    Fraction(2, 3): (Fraction(-1), 3),
    Fraction(3, 4): (Fraction(-1), 1),
    Fraction(5, 6): (Fraction(-1, 3), 3),
}


def _sin_value(r: Fraction) -> tuple[Fraction, int]:
    if r >= 1:
        a, s = _sin_value(r - 1)
        return -a, s
    if r > Fraction(1, 2):
        r = 1 - r
    return _SIN_FIRST_QUADRANT[r]


def _to_expr(a: Fraction, s: int) -> Expr:
    if s == 1 or a == 0:
        return Const(a)
    node: Expr = Sqrt(Const(s))
    if abs(a.numerator) != 1:
        node = Mul(Const(abs(a.numerator)), node)
    if a.denominator != 1:
        node = Div(node, Const(a.denominator))
    return Neg(node) if a < 0 else node


def _exact_value(e: Expr) -> Expr | None:
    k = pi_multiple(e.arg)
    if k is None:
        return None
    r = k % 2
    if r.denominator not in NOTABLE_DENOMINATORS:
        return None
    match e:
        case Sin():
            return _to_expr(*_sin_value(r))
        case Cos():
            return _to_expr(*_sin_value((r + Fraction(1, 2)) % 2))
        case Tan():
            t = r % 1
            if t not in _TAN_HALF_TURN:
                return None
            return _to_expr(*_TAN_HALF_TURN[t])
    return None


def rewrite_exact(e: Expr) -> Expr:
    """Replace ``sin``/``cos``/``tan`` of notable angles ``k*pi`` by exact values.

    Angles whose reduced multiple of pi has denominator 1, 2, 3, 4 or 6
    are rewritten; ``tan(pi/2)`` and everything else is left as is.
    """
    match e:
        case Binary(left, right):
            return type(e)(rewrite_exact(left), rewrite_exact(right))
        case PowNat(base, exponent):
            return PowNat(rewrite_exact(base), exponent)
        case Sin() | Cos() | Tan():
            rewritten = type(e)(rewrite_exact(e.arg))
            value = _exact_value(rewritten)
            if value is not None:
                logger.debug("Rewrote %s to %s.", rewritten, value)
                return value
            return rewritten
        case Unary(arg):
            return type(e)(rewrite_exact(arg))
    return e
