"""Exact rational scalars.

Every enclosure in the engine is built from :class:`fractions.Fraction`
values. ``Fraction`` already keeps the canonical form (positive
denominator, reduced by the gcd) after every operation, so this module
only adds the helpers the interval layers need on top of it.
"""

import math
import operator
from fractions import Fraction
from typing import Literal

from .exceptions import ExpressionSyntaxError, ZeroDenominatorError

Rational = Fraction
Direction = Literal["down", "up"]

ZERO = Fraction(0)
ONE = Fraction(1)

add = operator.add
sub = operator.sub
mul = operator.mul
neg = operator.neg
absolute = operator.abs


def make(num: int, den: int = 1) -> Fraction:
    """Build the canonical rational ``num/den``.

    Raises:
        ZeroDenominatorError: If ``den`` is zero.
    """
    if den == 0:
        raise ZeroDenominatorError(f"Zero denominator in {num}/{den}.")
    return Fraction(num, den)


def div(p: Fraction, q: Fraction) -> Fraction:
    if q == 0:
        raise ZeroDenominatorError("Division by zero.")
    return Fraction(p) / q


def compare(p: Fraction, q: Fraction) -> int:
    """Return -1, 0 or 1 as ``p`` is less than, equal to or greater than ``q``."""
    return (p > q) - (p < q)


def pow_nat(q: Fraction, i: int) -> Fraction:
    """Raise ``q`` to a natural power; ``0^0`` is 1."""
    if i < 0:
        raise ValueError("Exponent must be a natural number.")
    return Fraction(q) ** i


def floor(q: Fraction) -> int:
    return math.floor(q)


def round_dyadic(q: Fraction, bits: int, direction: Direction) -> Fraction:
    """Round ``q`` to a multiple of ``2^-bits`` towards ``direction``.

    The result equals ``q`` when ``q`` is already representable.
    """
    if bits < 1:
        raise ValueError("bits must be at least 1.")
    scale = 1 << bits
    scaled = Fraction(q) * scale
    rounded = math.floor(scaled) if direction == "down" else math.ceil(scaled)
    return Fraction(rounded, scale)


def parse_rational(text: str) -> Fraction:
    """Read an integer, ``p/q`` or decimal literal exactly.

    ``"0.5828"`` is 1457/2500, never a binary float.
    """
    try:
        return Fraction(str(text).strip())
    except ZeroDivisionError:
        raise ZeroDenominatorError(f"Zero denominator in '{text}'.")
    except ValueError:
        raise ExpressionSyntaxError(f"Invalid rational literal '{text}'.")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def to_decimal(q: Fraction, digits: int = 12, direction: Direction = "down") -> str:
    """Render ``q`` with ``digits`` fractional digits, rounded towards ``direction``.

    Rounding down never prints a number above ``q`` and rounding up never
    prints one below it, so a printed pair of endpoints stays outward.
    """
    scale = 10 ** digits
    scaled = Fraction(q) * scale
    rounded = math.floor(scaled) if direction == "down" else math.ceil(scaled)
    sign = "-" if rounded < 0 else ""
    whole, fraction = divmod(abs(rounded), scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{fraction:0{digits}d}"
