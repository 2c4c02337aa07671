"""Interval evaluation of expressions over a ground context."""

import logging
from fractions import Fraction
from typing import Mapping

from .. import elementary
from ..exceptions import DomainError, UnboundVariableError
from ..interval import Interval, abs_i, add, div, is_empty, mul, neg, pow_i, round_out, sub
from .nodes import (
    Abs,
    Add,
    Atan,
    Const,
    Cos,
    Div,
    Exp,
    Expr,
    Ln,
    Mul,
    Neg,
    Pi,
    PowNat,
    Sin,
    Sqrt,
    Sub,
    Tan,
    Var,
)

logger = logging.getLogger(__name__)

Context = Mapping[str, Interval]

_BINARY = {Add: add, Sub: sub, Mul: mul, Div: div}
_UNARY = {
    Sqrt: elementary.sqrt_i,
    Sin: elementary.sin_i,
    Cos: elementary.cos_i,
    Tan: elementary.tan_i,
    Exp: elementary.exp_i,
    Ln: elementary.ln_i,
    Atan: elementary.atan_i,
}


def check_context(context: Context) -> dict[str, Interval]:
    """Return ``context`` as an ordered dict after checking every interval is nonempty."""
    checked = {}
    for name, X in context.items():
        if X.empty:
            raise DomainError(f"Variable '{name}' is bound to the empty interval.")
        checked[name] = X
    return checked


def eval_interval(
    e: Expr, context: Context, n: int, round_bits: int | None = None
) -> Interval:
    """Enclose the value of ``e`` for every point of ``context``.

    Args:
        e: Expression to evaluate.
        context: Interval for each free variable.
        n: Approximation parameter passed to the elementary functions.
        round_bits: When set, every intermediate result is widened to
            dyadic endpoints with this many fractional bits.

    Returns:
        The enclosure, or the empty interval when a side condition
        (division, square root, logarithm, tangent) fails somewhere.

    Raises:
        UnboundVariableError: If a variable of ``e`` is missing from ``context``.
    """
    result = _eval(e, context, n, round_bits)
    if is_empty(result):
        logger.debug("Side condition violated while evaluating %s.", e)
    return result


def _eval(e: Expr, context: Context, n: int, round_bits: int | None) -> Interval:
    match e:
        case Const(value):
            result = Interval(value, value)
        case Var(name):
            if name not in context:
                raise UnboundVariableError(name)
            result = context[name]
        case Pi():
            result = elementary.pi_i(n)
        case Add() | Sub() | Mul() | Div():
            left = _eval(e.left, context, n, round_bits)
            right = _eval(e.right, context, n, round_bits)
            result = _BINARY[type(e)](left, right)
        case Neg(arg):
            result = neg(_eval(arg, context, n, round_bits))
        case Abs(arg):
            result = abs_i(_eval(arg, context, n, round_bits))
        case PowNat(base, exponent):
            result = pow_i(_eval(base, context, n, round_bits), exponent)
        case _:
            function = _UNARY[type(e)]
            result = function(_eval(e.arg, context, n, round_bits), n)
    if round_bits is not None:
        result = round_out(result, round_bits)
    return result


def is_rational_constant(e: Expr) -> bool:
    match e:
        case Const():
            return True
        case Add() | Sub() | Mul() | Div():
            return is_rational_constant(e.left) and is_rational_constant(e.right)
        case Neg(arg) | PowNat(arg, _) | Abs(arg):
            return is_rational_constant(arg)
        case _:
            return False


def fold_rational(e: Expr) -> Fraction:
    """Exact value of an expression built from rational constants only.

    Raises:
        DomainError: If ``e`` uses variables, pi or a transcendental
            function, or divides by zero.
    """
    if not is_rational_constant(e):
        raise DomainError(f"'{e}' is not a rational constant expression.")
    X = _eval(e, {}, 0, None)
    if X.empty:
        raise DomainError(f"'{e}' divides by zero.")
    return X.lb
