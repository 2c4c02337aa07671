"""Utility helper functions for the proof API."""

from numerics_app.exceptions import DomainError
from numerics_app.expr import fold_rational, parse
from numerics_app.interval import Interval
from numerics_app.rational import format_rational, to_decimal


def parse_endpoint(text: str):
    """Fold a constant endpoint such as ``"1/30"``, ``"-2^-14"`` or ``"0.5828"``."""
    return fold_rational(parse(str(text)))


def parse_context(raw: dict) -> dict[str, Interval]:
    """Turn ``{"x": ["0", "1"]}`` into an ordered context of intervals.

    Raises:
        DomainError: If an interval is empty or an endpoint is not rational.
    """
    context = {}
    for name, (lb, ub) in raw.items():
        X = Interval(parse_endpoint(lb), parse_endpoint(ub))
        if X.empty:
            raise DomainError(f"Interval for '{name}' is empty.")
        context[name] = X
    return context


def interval_payload(X: Interval, digits: int = 12) -> dict:
    """Exact endpoints plus outward-rounded decimal renderings."""
    if X.empty:
        return {"lb": None, "ub": None, "lb_decimal": None, "ub_decimal": None, "empty": True}
    return {
        "lb": format_rational(X.lb),
        "ub": format_rational(X.ub),
        "lb_decimal": to_decimal(X.lb, digits, "down"),
        "ub_decimal": to_decimal(X.ub, digits, "up"),
        "empty": False,
    }
