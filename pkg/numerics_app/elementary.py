"""Interval extensions of the elementary functions.

Monotone functions take the lower bound function at ``lb`` and the upper
bound function at ``ub``. Sine and cosine are split into cases by
quadrant, with the case guards built from the pi bounds at the same
approximation parameter. Arguments outside a function's domain give
:data:`~numerics_app.interval.EMPTY`.
"""

import logging

from . import bounds
from .interval import EMPTY, Interval, div, neg, subset

logger = logging.getLogger(__name__)

UNIT = Interval(-1, 1)

# Tangent evaluates sine and cosine this many steps deeper so that the
# cosine bounds stay positive up to the guard.
TAN_EXTRA_APPROX = 5


def sqrt_i(X: Interval, n: int) -> Interval:
    if X.empty or X.lb < 0:
        return EMPTY
    return Interval(bounds.sqrt_bounds(X.lb, n)[0], bounds.sqrt_bounds(X.ub, n)[1])


def atan_i(X: Interval, n: int) -> Interval:
    if X.empty:
        return EMPTY
    return Interval(bounds.atan_bounds(X.lb, n)[0], bounds.atan_bounds(X.ub, n)[1])


def exp_i(X: Interval, n: int) -> Interval:
    if X.empty:
        return EMPTY
    return Interval(bounds.exp_bounds(X.lb, n)[0], bounds.exp_bounds(X.ub, n)[1])


def ln_i(X: Interval, n: int) -> Interval:
    if X.empty or X.lb <= 0:
        return EMPTY
    return Interval(bounds.ln_bounds(X.lb, n)[0], bounds.ln_bounds(X.ub, n)[1])


def pi_i(n: int) -> Interval:
    return Interval(*bounds.pi_bounds(n))


def sin_i(X: Interval, n: int) -> Interval:
    """Sine enclosure by quadrant.

    Cases, tried in order: increasing on ``[-pi/2, pi/2]``, decreasing on
    ``[pi/2, pi]``, the maximum inside ``[0, pi]``, odd reflection of
    ``[-pi, 0]``, and ``[-1, 1]`` for everything else.
    """
    if X.empty:
        return EMPTY
    pi_lb, pi_ub = bounds.pi_bounds(n)
    if subset(X, Interval(-pi_lb / 2, pi_lb / 2)):
        return Interval(bounds.sin_bounds(X.lb, n)[0], bounds.sin_bounds(X.ub, n)[1])
    if subset(X, Interval(pi_ub / 2, pi_lb)):
        return Interval(bounds.sin_bounds(X.ub, n)[0], bounds.sin_bounds(X.lb, n)[1])
    if subset(X, Interval(0, pi_lb)):
        low = min(bounds.sin_bounds(X.lb, n)[0], bounds.sin_bounds(X.ub, n)[0])
        return Interval(low, 1)
    if subset(X, Interval(-pi_lb, 0)):
        return neg(sin_i(neg(X), n))
    return UNIT


def cos_i(X: Interval, n: int) -> Interval:
    """Cosine enclosure: decreasing on ``[0, pi]``, even, maximum at 0."""
    if X.empty:
        return EMPTY
    pi_lb, _ = bounds.pi_bounds(n)
    if subset(X, Interval(0, pi_lb)):
        return Interval(bounds.cos_bounds(X.ub, n)[0], bounds.cos_bounds(X.lb, n)[1])
    if subset(X, Interval(-pi_lb, 0)):
        return cos_i(neg(X), n)
    if subset(X, Interval(-pi_lb / 2, pi_lb / 2)):
        low = min(bounds.cos_bounds(X.lb, n)[0], bounds.cos_bounds(X.ub, n)[0])
        return Interval(low, 1)
    return UNIT


def _tan_quotient(x, n: int) -> Interval:
    sine = Interval(*bounds.sin_bounds(x, n))
    cosine = Interval(*bounds.cos_bounds(x, n))
    if cosine.lb <= 0:
        return EMPTY
    return div(sine, cosine)


def tan_i(X: Interval, n: int) -> Interval:
    """Tangent on ``[-pi/2, pi/2]`` from endpoint sine over cosine.

    Each endpoint quotient is an interval division, so the bound is
    valid whatever the sign of the endpoint.
    """
    if X.empty:
        return EMPTY
    m = n + TAN_EXTRA_APPROX
    pi_lb, _ = bounds.pi_bounds(m)
    if not subset(X, Interval(-pi_lb / 2, pi_lb / 2)):
        logger.debug("tan argument %s outside the principal branch.", X)
        return EMPTY
    low = _tan_quotient(X.lb, m)
    high = _tan_quotient(X.ub, m)
    if low.empty or high.empty:
        return EMPTY
    return Interval(low.lb, high.ub)
