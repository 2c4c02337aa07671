from .diff import derivatives, diff
from .evaluate import Context, check_context, eval_interval, fold_rational, is_rational_constant
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
    free_vars,
)
from .parser import Parser, parse
from .printer import to_text
from .rewrite import rewrite_exact
from .simplify import pi_multiple, simplify

__all__ = [
    "Abs",
    "Add",
    "Atan",
    "Const",
    "Context",
    "Cos",
    "Div",
    "Exp",
    "Expr",
    "Ln",
    "Mul",
    "Neg",
    "Parser",
    "Pi",
    "PowNat",
    "Sin",
    "Sqrt",
    "Sub",
    "Tan",
    "Var",
    "check_context",
    "derivatives",
    "diff",
    "eval_interval",
    "fold_rational",
    "free_vars",
    "is_rational_constant",
    "parse",
    "pi_multiple",
    "rewrite_exact",
    "simplify",
    "to_text",
]
