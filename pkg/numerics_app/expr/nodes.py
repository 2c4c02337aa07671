"""Expression trees.

Nodes are frozen dataclasses, so structurally equal trees compare and
hash equal. Python operators build trees; plain numbers are wrapped in
:class:`Const`.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from ..exceptions import ExpressionSyntaxError


class Expr:
    def __add__(self, other):
        return Add(self, as_expr(other))

    def __radd__(self, other):
        return Add(as_expr(other), self)

    def __sub__(self, other):
        return Sub(self, as_expr(other))

    def __rsub__(self, other):
        return Sub(as_expr(other), self)

    def __mul__(self, other):
        return Mul(self, as_expr(other))

    def __rmul__(self, other):
        return Mul(as_expr(other), self)

    def __truediv__(self, other):
        return Div(self, as_expr(other))

    def __rtruediv__(self, other):
        return Div(as_expr(other), self)

    def __neg__(self):
        return Neg(self)

    def __pow__(self, exponent: int):
        return PowNat(self, exponent)

    def __str__(self):
        from .printer import to_text

        return to_text(self)


def as_expr(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Const(Fraction(value))
    raise TypeError(f"Cannot use {value!r} in an expression.")


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Pi(Expr):
    pass


@dataclass(frozen=True)
class Binary(Expr):
    left: Expr
    right: Expr
    symbol: ClassVar[str] = ""


@dataclass(frozen=True)
class Add(Binary):
    symbol: ClassVar[str] = "+"


@dataclass(frozen=True)
class Sub(Binary):
    symbol: ClassVar[str] = "-"


@dataclass(frozen=True)
class Mul(Binary):
    symbol: ClassVar[str] = "*"


@dataclass(frozen=True)
class Div(Binary):
    symbol: ClassVar[str] = "/"


@dataclass(frozen=True)
class Unary(Expr):
    arg: Expr
    function: ClassVar[str] = ""


@dataclass(frozen=True)
class Neg(Unary):
    pass


@dataclass(frozen=True)
class Abs(Unary):
    function: ClassVar[str] = "abs"


@dataclass(frozen=True)
class Sqrt(Unary):
    function: ClassVar[str] = "sqrt"


@dataclass(frozen=True)
class Sin(Unary):
    function: ClassVar[str] = "sin"


@dataclass(frozen=True)
class Cos(Unary):
    function: ClassVar[str] = "cos"


@dataclass(frozen=True)
class Tan(Unary):
    function: ClassVar[str] = "tan"


@dataclass(frozen=True)
class Exp(Unary):
    function: ClassVar[str] = "exp"


@dataclass(frozen=True)
class Ln(Unary):
    function: ClassVar[str] = "ln"


@dataclass(frozen=True)
class Atan(Unary):
    function: ClassVar[str] = "atan"


@dataclass(frozen=True)
class PowNat(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if not isinstance(self.exponent, int) or self.exponent < 0:
            raise ExpressionSyntaxError(
                f"Exponent must be a natural number, got {self.exponent!r}."
            )


FUNCTIONS: dict[str, type[Unary]] = {
    cls.function: cls for cls in (Abs, Sqrt, Sin, Cos, Tan, Exp, Ln, Atan)
}


def free_vars(e: Expr) -> set[str]:
    match e:
        case Var(name):
            return {name}
        case Binary(left, right):
            return free_vars(left) | free_vars(right)
        case Unary(arg) | PowNat(arg, _):
            return free_vars(arg)
        case _:
            return set()


def depends_on(e: Expr, name: str) -> bool:
    return name in free_vars(e)
