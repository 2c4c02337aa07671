"""Render expressions as text that :func:`~numerics_app.expr.parser.parse` reads back."""

from fractions import Fraction

from .nodes import Add, Binary, Const, Div, Expr, Mul, Neg, Pi, PowNat, Sub, Unary, Var

ATOM = 5

PRECEDENCE = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, PowNat: 4}


def precedence(e: Expr) -> int:
    return PRECEDENCE.get(type(e), ATOM)


def _const_text(value: Fraction) -> str:
    if value.denominator == 1 and value >= 0:
        return str(value.numerator)
    return f"({value})"


def _is_plain_integer(e: Expr) -> bool:
    return isinstance(e, Const) and e.value.denominator == 1 and e.value >= 0


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def to_text(e: Expr) -> str:
    match e:
        case Const(value):
            return _const_text(value)
        case Var(name):
            return name
        case Pi():
            return "pi"
        case Neg(arg):
            needed = precedence(arg) <= precedence(e) or _is_plain_integer(arg)
            return "-" + _wrap(to_text(arg), needed)
        case Unary(arg):
            return f"{e.function}({to_text(arg)})"
        case PowNat(base, exponent):
            return f"{_wrap(to_text(base), precedence(base) < ATOM)}^{exponent}"
        case Div(Const() as left, Const() as right) if _is_plain_integer(left) and _is_plain_integer(right):
            # a bare "6/3" would be read back as the single constant 2
            return f"({to_text(left)})/{to_text(right)}"
        case Binary(left, right):
            level = precedence(e)
            left_text = _wrap(to_text(left), precedence(left) < level)
            right_text = _wrap(to_text(right), precedence(right) <= level)
            return f"{left_text} {e.symbol} {right_text}"
    raise TypeError(f"Unknown expression node {e!r}.")
