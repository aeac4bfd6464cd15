"""Algebraic 2-tangle expressions and their fraction arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from typing import Union

from .contfrac import ContinuedFraction
from .fraction import INFINITY, Fraction, IndeterminateError

__all__ = [
    "IntTangle",
    "Infinity",
    "Mirror",
    "Invert",
    "Rotate",
    "Sum",
    "Product",
    "TangleExpr",
    "eval_expr",
    "is_rational",
    "from_contfrac",
    "crossing_count",
]


@dataclass(frozen=True)
class IntTangle:
    """``[n]``: n horizontal half-twists."""

    n: int


@dataclass(frozen=True)
class Infinity:
    """``[∞]``: two vertical arcs."""


@dataclass(frozen=True)
class Mirror:
    operand: "TangleExpr"


@dataclass(frozen=True)
class Invert:
    operand: "TangleExpr"


@dataclass(frozen=True)
class Rotate:
    operand: "TangleExpr"


@dataclass(frozen=True)
class Sum:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Product:
    """``top * bottom``: ``top`` stacked above ``bottom``."""

    top: "TangleExpr"
    bottom: "TangleExpr"


TangleExpr = Union[IntTangle, Infinity, Mirror, Invert, Rotate, Sum, Product]


def from_contfrac(cf: ContinuedFraction) -> TangleExpr:
    """``[a1, ..., an]`` as the tree ``[a1] + 1/([a2] + ...)``."""
    if cf.is_infinity:
        return Infinity()
    terms = cf.terms
    node: TangleExpr = IntTangle(terms[-1])
    for a in reversed(terms[:-1]):
        node = Sum(IntTangle(a), Invert(node))
    return node


@singledispatch
def eval_expr(t) -> Fraction:
    """Fraction obtained by doing the tangle operations on the numbers.

    Exact for rational trees; for other algebraic tangles it is still the
    value of the isotopy-invariant fraction (see :func:`is_rational` for the
    flag).  Raises :class:`~tanglekit.fraction.IndeterminateError` when the
    arithmetic meets ``∞ + ∞``.
    """
    raise TypeError(f"not a tangle expression: {t!r}")


@eval_expr.register
def _(t: IntTangle) -> Fraction:
    return Fraction(t.n)


@eval_expr.register
def _(t: Infinity) -> Fraction:
    return INFINITY


@eval_expr.register
def _(t: Mirror) -> Fraction:
    return -eval_expr(t.operand)


@eval_expr.register
def _(t: Invert) -> Fraction:
    return eval_expr(t.operand).reciprocal()


@eval_expr.register
def _(t: Rotate) -> Fraction:
    return -eval_expr(t.operand).reciprocal()


@eval_expr.register
def _(t: Sum) -> Fraction:
    return eval_expr(t.left) + eval_expr(t.right)


@eval_expr.register
def _(t: Product) -> Fraction:
    return (eval_expr(t.top).reciprocal() + eval_expr(t.bottom).reciprocal()).reciprocal()


@eval_expr.register
def _(t: ContinuedFraction) -> Fraction:
    return eval_expr(from_contfrac(t))


def is_rational(t: TangleExpr) -> bool:
    """Whether the tree provably describes a rational tangle.

    Rational tangles are closed under mirror, inversion and rotation.  A sum
    stays rational when one summand is integral (fraction ``n/1``); a product
    stays rational when one factor is vertical (fraction ``1/n``, including
    ``[∞] = 1/[0]``).  These cover every continued-fraction shape.
    """
    if isinstance(t, (IntTangle, Infinity, ContinuedFraction)):
        return True
    if isinstance(t, (Mirror, Invert, Rotate)):
        return is_rational(t.operand)
    if isinstance(t, Sum):
        parts = (t.left, t.right)
        if not all(is_rational(x) for x in parts):
            return False
        return any(f is not None and f.is_integer for f in map(_value, parts))
    if isinstance(t, Product):
        parts = (t.top, t.bottom)
        if not all(is_rational(x) for x in parts):
            return False
        return any(f is not None and abs(f.p) == 1 for f in map(_value, parts))
    raise TypeError(f"not a tangle expression: {t!r}")


def _value(t) -> Fraction | None:
    try:
        return eval_expr(t)
    except IndeterminateError:
        return None


def crossing_count(t: TangleExpr) -> int:
    if isinstance(t, IntTangle):
        return abs(t.n)
    if isinstance(t, Infinity):
        return 0
    if isinstance(t, (Mirror, Invert, Rotate)):
        return crossing_count(t.operand)
    if isinstance(t, Sum):
        return crossing_count(t.left) + crossing_count(t.right)
    if isinstance(t, Product):
        return crossing_count(t.top) + crossing_count(t.bottom)
    if isinstance(t, ContinuedFraction):
        return t.crossings
    raise TypeError(f"not a tangle expression: {t!r}")
