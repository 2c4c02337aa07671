"""Constant folding and like-term collection.

An expression is read as a weighted sum of three kinds of terms: a
rational constant, univariate polynomials keyed by variable, and opaque
atoms (function applications, products that are not monomial, ...).
Rebuilding writes each polynomial in nested Horner form, so
``x - x^2`` becomes ``x*(1 - x)``. Products of two sums are never
distributed.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .nodes import (
    Abs,
    Add,
    Const,
    Div,
    Expr,
    Mul,
    Neg,
    Pi,
    PowNat,
    Sub,
    Unary,
    Var,
)

Poly = dict[int, Fraction]


@dataclass
class _Sum:
    const: Fraction = Fraction(0)
    polys: dict[str, Poly] = field(default_factory=dict)
    opaque: dict[Expr, Fraction] = field(default_factory=dict)

    @property
    def is_constant(self) -> bool:
        return not self.polys and not self.opaque

    def monomial(self) -> tuple[str, int, Fraction] | None:
        """``(var, exponent, coeff)`` when the sum is a single monomial."""
        if self.const or self.opaque or len(self.polys) != 1:
            return None
        (var, poly), = self.polys.items()
        if len(poly) != 1:
            return None
        (exponent, coeff), = poly.items()
        return var, exponent, coeff

    def univariate(self) -> str | None:
        if self.opaque or len(self.polys) != 1:
            return None
        return next(iter(self.polys))

    def scaled(self, factor: Fraction) -> "_Sum":
        if factor == 0:
            return _Sum()
        return _Sum(
            self.const * factor,
            {v: {k: c * factor for k, c in p.items()} for v, p in self.polys.items()},
            {atom: c * factor for atom, c in self.opaque.items()},
        )

    def merge(self, other: "_Sum", sign: int = 1) -> "_Sum":
        result = self.scaled(Fraction(1))
        result.const += sign * other.const
        for var, poly in other.polys.items():
            target = result.polys.setdefault(var, {})
            for exponent, coeff in poly.items():
                target[exponent] = target.get(exponent, Fraction(0)) + sign * coeff
        for atom, coeff in other.opaque.items():
            result.opaque[atom] = result.opaque.get(atom, Fraction(0)) + sign * coeff
        return result.pruned()

    def pruned(self) -> "_Sum":
        polys = {}
        for var, poly in self.polys.items():
            kept = {k: c for k, c in poly.items() if c}
            if kept:
                polys[var] = kept
        opaque = {atom: c for atom, c in self.opaque.items() if c}
        return _Sum(self.const, polys, opaque)


def _atom(e: Expr) -> _Sum:
    return _Sum(opaque={e: Fraction(1)})


def _times_monomial(s: _Sum, var: str, exponent: int, coeff: Fraction) -> _Sum:
    poly: Poly = {exponent: s.const * coeff} if s.const else {}
    for k, c in s.polys[var].items():
        poly[k + exponent] = poly.get(k + exponent, Fraction(0)) + c * coeff
    return _Sum(polys={var: poly}).pruned()


def _collect(e: Expr) -> _Sum:
    match e:
        case Const(value):
            return _Sum(const=value)
        case Var(name):
            return _Sum(polys={name: {1: Fraction(1)}})
        case Add(left, right):
            return _collect(left).merge(_collect(right))
        case Sub(left, right):
            return _collect(left).merge(_collect(right), sign=-1)
        case Neg(arg):
            return _collect(arg).scaled(Fraction(-1))
        case Mul(left, right):
            return _collect_product(_collect(left), _collect(right))
        case Div(left, right):
            numerator, denominator = _collect(left), _collect(right)
            if denominator.is_constant and denominator.const != 0:
                return numerator.scaled(1 / denominator.const)
            return _atom(Div(_rebuild(numerator), _rebuild(denominator)))
        case PowNat(base, exponent):
            return _collect_power(_collect(base), exponent)
        case Abs(arg):
            inner = _collect(arg)
            if inner.is_constant:
                return _Sum(const=abs(inner.const))
            return _atom(Abs(_rebuild(inner)))
        case Unary(arg):
            return _atom(type(e)(simplify(arg)))
        case _:
            return _atom(e)


def _collect_product(left: _Sum, right: _Sum) -> _Sum:
    if left.is_constant:
        return right.scaled(left.const)
    if right.is_constant:
        return left.scaled(right.const)
    var = left.univariate()
    if var is not None and var == right.univariate():
        if (mono := left.monomial()) is not None:
            return _times_monomial(right, *mono)
        if (mono := right.monomial()) is not None:
            return _times_monomial(left, *mono)
    return _atom(Mul(_rebuild(left), _rebuild(right)))


def _collect_power(base: _Sum, exponent: int) -> _Sum:
    if exponent == 0:
        return _Sum(const=Fraction(1))
    if exponent == 1:
        return base
    if base.is_constant:
        return _Sum(const=base.const ** exponent)
    if (mono := base.monomial()) is not None:
        var, k, coeff = mono
        return _Sum(polys={var: {k * exponent: coeff ** exponent}})
    return _atom(PowNat(_rebuild(base), exponent))


# A signed term: (negative, magnitude).
Term = tuple[bool, Expr]


def _power(var: str, exponent: int) -> Expr:
    return Var(var) if exponent == 1 else PowNat(Var(var), exponent)


def _scaled_term(coeff: Fraction, e: Expr) -> Term:
    magnitude = abs(coeff)
    return coeff < 0, e if magnitude == 1 else Mul(Const(magnitude), e)


def _horner(var: str, items: list[tuple[int, Fraction]], base: int = 0) -> list[Term]:
    """Signed terms summing to ``sum(c * var^(k - base))`` over ``items``."""
    first, coeff = items[0]
    shift = first - base
    if len(items) == 1:
        if shift == 0:
            return [(coeff < 0, Const(abs(coeff)))]
        return [_scaled_term(coeff, _power(var, shift))]
    inner = [(coeff < 0, Const(abs(coeff)))] + _horner(var, items[1:], base=first)
    if shift == 0:
        return inner
    return [(False, Mul(_power(var, shift), _fold(inner)))]


def _fold(terms: list[Term]) -> Expr:
    if not terms:
        return Const(0)
    lead = next((i for i, (negative, _) in enumerate(terms) if not negative), None)
    if lead is None:
        return Neg(_fold([(False, magnitude) for _, magnitude in terms]))
    node = terms[lead][1]
    for i, (negative, magnitude) in enumerate(terms):
        if i != lead:
            node = Sub(node, magnitude) if negative else Add(node, magnitude)
    return node


def _rebuild(s: _Sum) -> Expr:
    if s.is_constant:
        return Const(s.const)
    terms = [_scaled_term(coeff, atom) for atom, coeff in s.opaque.items()]
    fold_const = len(s.polys) == 1
    for var, poly in s.polys.items():
        items = sorted(poly.items())
        if fold_const and s.const:
            items = [(0, s.const)] + items
        terms.extend(_horner(var, items))
    if s.const and not fold_const:
        terms.append((s.const < 0, Const(abs(s.const))))
    return _fold(terms)


def simplify(e: Expr) -> Expr:
    """Fold constants, collect like terms and factor polynomials.

    The result has the same value as ``e`` at every point where ``e`` is
    defined.
    """
    return _rebuild(_collect(e))


def pi_multiple(e: Expr) -> Fraction | None:
    """The rational ``k`` with ``e == k*pi``, or None if ``e`` is not of that shape."""
    s = _collect(e)
    if s.polys or s.const or set(s.opaque) - {Pi()}:
        return None
    return s.opaque.get(Pi(), Fraction(0))
