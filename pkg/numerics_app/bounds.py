"""Rational lower and upper bound functions for elementary functions.

For each supported function ``f`` this module provides ``f_bounds(x, n)``
returning a pair ``(lb, ub)`` with ``lb <= f(x) <= ub``. Increasing the
approximation parameter ``n`` never loosens either bound, and both bounds
converge to ``f(x)`` as ``n`` grows.

All arithmetic is exact. Large ``n`` is expensive for ``sqrt_bounds``:
the Newton iterate roughly doubles its denominator size each step.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, floor

from .exceptions import DomainError
from .rational import ONE, ZERO

Bounds = tuple[Fraction, Fraction]


def _check_param(n: int) -> None:
    if n < 0:
        raise DomainError("Approximation parameter must be a natural number.")


def sqrt_bounds(x: Fraction, n: int) -> Bounds:
    """Newton bounds for the square root.

    The upper bound starts at ``x + 1`` and follows ``(y + x/y) / 2``;
    the lower bound is ``x`` divided by the upper bound.

    Raises:
        DomainError: If ``x`` is negative.
    """
    _check_param(n)
    x = Fraction(x)
    if x < 0:
        raise DomainError(f"sqrt is undefined for {x}.")
    ub = x + 1
    for _ in range(n):
        ub = (ub + x / ub) / 2
    return x / ub, ub


def _sin_partial(x: Fraction, terms: int) -> Fraction:
    total = ZERO
    power = x
    square = x * x
    for i in range(1, terms + 1):
        term = power / factorial(2 * i - 1)
        total += term if i % 2 else -term
        power *= square
    return total


def _cos_partial(x: Fraction, terms: int) -> Fraction:
    total = ONE
    square = x * x
    power = square
    for i in range(1, terms + 1):
        term = power / factorial(2 * i)
        total += -term if i % 2 else term
        power *= square
    return total


def sin_bounds(x: Fraction, n: int) -> Bounds:
    """Maclaurin partial sums of sine.

    For ``x >= 0`` a sum with an even number of terms lies below ``sin(x)``
    and one with an odd number lies above it. Negative arguments use odd
    symmetry.
    """
    _check_param(n)
    x = Fraction(x)
    if x < 0:
        lb, ub = sin_bounds(-x, n)
        return -ub, -lb
    return _sin_partial(x, 2 * n + 2), _sin_partial(x, 2 * n + 1)


def cos_bounds(x: Fraction, n: int) -> Bounds:
    """Maclaurin partial sums of cosine, even in ``x``."""
    _check_param(n)
    x = abs(Fraction(x))
    return _cos_partial(x, 2 * n + 1), _cos_partial(x, 2 * n + 2)


def _atan_partial(x: Fraction, last: int) -> Fraction:
    """Sum of ``(-1)^i x^(2i+1) / (2i+1)`` for ``i`` in ``0..last``."""
    total = ZERO
    power = x
    square = x * x
    for i in range(last + 1):
        term = power / (2 * i + 1)
        total += -term if i % 2 else term
        power *= square
    return total


def _atan_unit_bounds(x: Fraction, n: int) -> Bounds:
    # 0 < x <= 1: terms decrease, so the alternating sums bracket atan(x).
    return _atan_partial(x, 2 * n + 1), _atan_partial(x, 2 * n)


@lru_cache(maxsize=None)
def pi_bounds(n: int) -> Bounds:
    """Bounds on pi from Machin's formula ``pi/4 = 4 atan(1/5) - atan(1/239)``."""
    _check_param(n)
    lb_fifth, ub_fifth = _atan_unit_bounds(Fraction(1, 5), n)
    lb_239, ub_239 = _atan_unit_bounds(Fraction(1, 239), n)
    return 4 * (4 * lb_fifth - ub_239), 4 * (4 * ub_fifth - lb_239)


def atan_bounds(x: Fraction, n: int) -> Bounds:
    """Arctangent bounds over the whole real line.

    Arguments above 1 go through ``atan(x) = pi/2 - atan(1/x)``; negative
    ones through odd symmetry.
    """
    _check_param(n)
    x = Fraction(x)
    if x == 0:
        return ZERO, ZERO
    if x < 0:
        lb, ub = atan_bounds(-x, n)
        return -ub, -lb
    if x <= 1:
        return _atan_unit_bounds(x, n)
    pi_lb, pi_ub = pi_bounds(n)
    lb_inv, ub_inv = _atan_unit_bounds(1 / x, n)
    return pi_lb / 2 - ub_inv, pi_ub / 2 - lb_inv


def _exp_partial(x: Fraction, last: int) -> Fraction:
    total = ZERO
    term = ONE
    for i in range(last + 1):
        if i:
            term = term * x / i
        total += term
    return total


def exp_bounds(x: Fraction, n: int) -> Bounds:
    """Exponential bounds, strictly positive for every argument.

    The series is only summed on ``[-1, 0)``. Below -1 the argument is
    divided by ``-floor(x)`` and the bounds raised back to that power;
    positive arguments use reciprocals of the bounds at ``-x``.
    """
    _check_param(n)
    x = Fraction(x)
    if x == 0:
        return ONE, ONE
    if x > 0:
        lb, ub = exp_bounds(-x, n)
        return 1 / ub, 1 / lb
    if x >= -1:
        return _exp_partial(x, 2 * (n + 1) + 1), _exp_partial(x, 2 * (n + 1))
    k = -floor(x)
    lb, ub = exp_bounds(x / k, n)
    return lb ** k, ub ** k


def lnnat(x: Fraction, k: int) -> tuple[int, Fraction]:
    """Split ``x`` as ``k^m * y`` with ``k^m <= x < k^(m+1)`` and ``y < k``.

    Raises:
        DomainError: If ``x < 1`` or ``k <= 1``.
    """
    x = Fraction(x)
    if x < 1 or k <= 1:
        raise DomainError(f"lnnat needs x >= 1 and k > 1, got x={x}, k={k}.")
    m = 0
    while x >= k:
        x /= k
        m += 1
    return m, x


def _ln_partial(x: Fraction, terms: int) -> Fraction:
    """Sum of ``(-1)^(i+1) (x-1)^i / i`` for ``i`` in ``1..terms``."""
    total = ZERO
    shifted = x - 1
    power = shifted
    for i in range(1, terms + 1):
        term = power / i
        total += term if i % 2 else -term
        power *= shifted
    return total


def ln_bounds(x: Fraction, n: int) -> Bounds:
    """Natural logarithm bounds for ``x > 0``.

    The alternating series covers ``(1, 2]``. Arguments below 1 negate the
    bounds at ``1/x`` (swapping them); arguments above 2 are reduced with
    :func:`lnnat` to ``m ln 2 + ln y``.

    Raises:
        DomainError: If ``x <= 0``.
    """
    _check_param(n)
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"ln is undefined for {x}.")
    if x == 1:
        return ZERO, ZERO
    if x < 1:
        lb, ub = ln_bounds(1 / x, n)
        return -ub, -lb
    if x <= 2:
        return _ln_partial(x, 2 * n), _ln_partial(x, 2 * n + 1)
    m, y = lnnat(x, 2)
    lb_two, ub_two = ln_bounds(Fraction(2), n)
    lb_y, ub_y = ln_bounds(y, n)
    return m * lb_two + lb_y, m * ub_two + ub_y
