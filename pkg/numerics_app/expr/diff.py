"""Symbolic differentiation."""


from ..exceptions import UnsupportedDerivativeError
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
    PowNat,
    Sin,
    Sqrt,
    Sub,
    Tan,
    Var,
    depends_on,
)
from .simplify import simplify

ZERO = Const(0)
ONE = Const(1)


def _d(e: Expr, x: str) -> Expr:
    if not depends_on(e, x):
        return ZERO
    match e:
        case Var():
            return ONE
        case Add(u, v):
            return Add(_d(u, x), _d(v, x))
        case Sub(u, v):
            return Sub(_d(u, x), _d(v, x))
        case Neg(u):
            return Neg(_d(u, x))
        case Mul(u, v):
            return Add(Mul(_d(u, x), v), Mul(u, _d(v, x)))
        case Div(u, v):
            return Div(Sub(Mul(_d(u, x), v), Mul(u, _d(v, x))), PowNat(v, 2))
        case PowNat(u, i):
            return Mul(Mul(Const(i), PowNat(u, i - 1)), _d(u, x))
        case Sqrt(u):
            return Div(_d(u, x), Mul(Const(2), Sqrt(u)))
        case Sin(u):
            return Mul(Cos(u), _d(u, x))
        case Cos(u):
            return Neg(Mul(Sin(u), _d(u, x)))
        case Tan(u):
            return Mul(Add(ONE, PowNat(Tan(u), 2)), _d(u, x))
        case Exp(u):
            return Mul(Exp(u), _d(u, x))
        case Ln(u):
            return Div(_d(u, x), u)
        case Atan(u):
            return Div(_d(u, x), Add(ONE, PowNat(u, 2)))
        case Abs():
            raise UnsupportedDerivativeError(
                f"abs is not differentiable in general; '{e}' depends on '{x}'."
            )
    raise TypeError(f"Unknown expression node {e!r}.")


def diff(e: Expr, x: str) -> Expr:
    """Simplified derivative of ``e`` with respect to ``x``.

    Raises:
        UnsupportedDerivativeError: If an ``abs`` on the path to ``x`` is met.
    """
    return simplify(_d(e, x))


def derivatives(e: Expr, x: str, degree: int) -> list[Expr]:
    """``[e, e', ..., e^(degree)]``, each derivative simplified."""
    chain = [e]
    for _ in range(degree):
        chain.append(diff(chain[-1], x))
    return chain
