"""Interval Taylor forms of univariate expressions.

For ``f`` with derivatives up to order ``d`` on ``X`` and a center
``c`` in ``X``, every ``x`` in ``X`` satisfies

    f(x) in sum(X_i * (X - c)^i / i!  for i in 0..d)

where ``X_i`` encloses ``f^(i)(c)`` for ``i < d`` and ``X_d`` encloses
``f^(d)`` over the whole of ``X``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from numerics_app.exceptions import ConfigurationError, DomainError
from numerics_app.expr import Expr, derivatives, eval_interval, free_vars
from numerics_app.interval import (
    Interval,
    add,
    div,
    midpoint,
    mul,
    point,
    pow_i,
    round_out,
    sub,
    subset,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TaylorForm:
    var: str
    domain: Interval
    center: Fraction
    coeffs: tuple[Interval, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def derivative_chain(e: Expr, x: str, degree: int) -> tuple[Expr, ...]:
    """Check ``e`` is univariate in ``x`` and return ``e`` with its first ``degree`` derivatives.

    Raises:
        ConfigurationError: If ``degree < 1`` or ``e`` has another free variable.
        UnsupportedDerivativeError: If a derivative cannot be formed.
    """
    if degree < 1:
        raise ConfigurationError("Taylor degree must be at least 1.")
    others = free_vars(e) - {x}
    if others:
        raise ConfigurationError(
            f"Taylor forms need a univariate expression in '{x}', "
            f"found also {', '.join(sorted(others))}."
        )
    return tuple(derivatives(e, x, degree))


def taylor_form_from_derivatives(
    chain: Sequence[Expr],
    x: str,
    X: Interval,
    n: int,
    center: Fraction | None = None,
    round_bits: int | None = None,
) -> TaylorForm:
    """Build the form on ``X`` from an already computed derivative chain."""
    if not X.strictly_proper:
        raise DomainError(f"Taylor domain {X} must have lb < ub.")
    c = midpoint(X) if center is None else Fraction(center)
    if not X.lb <= c <= X.ub:
        raise DomainError(f"Taylor center {c} lies outside {X}.")
    at_center = {x: point(c)}
    coeffs = [eval_interval(f, at_center, n, round_bits) for f in chain[:-1]]
    coeffs.append(eval_interval(chain[-1], {x: X}, n, round_bits))
    return TaylorForm(x, X, c, tuple(coeffs))


def build_taylor_form(
    e: Expr,
    x: str,
    X: Interval,
    degree: int,
    n: int,
    center: Fraction | None = None,
    round_bits: int | None = None,
) -> TaylorForm:
    """Taylor form of ``e`` in ``x`` over ``X``, centered at ``center`` or the midpoint.

    Raises:
        ConfigurationError: On a degree below 1 or a multivariate expression.
        DomainError: If ``X`` is not strictly proper or the center is outside it.
    """
    chain = derivative_chain(e, x, degree)
    return taylor_form_from_derivatives(chain, x, X, n, center, round_bits)


def eval_taylor_form(T: TaylorForm, tile: Interval, round_bits: int | None = None) -> Interval:
    """Evaluate the form on a sub-interval ``tile`` of its domain.

    Raises:
        DomainError: If ``tile`` is not inside ``T.domain``.
    """
    if not subset(tile, T.domain):
        raise DomainError(f"Tile {tile} is outside the Taylor domain {T.domain}.")
    offset = sub(tile, point(T.center))
    total = T.coeffs[0]
    for i, coeff in enumerate(T.coeffs[1:], start=1):
        total = add(total, div(mul(coeff, pow_i(offset, i)), point(factorial(i))))
    if round_bits is not None:
        total = round_out(total, round_bits)
    return total
