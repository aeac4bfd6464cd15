"""Reduced rationals extended by the formal value ``1/0``.

Tangle fractions live in Q ∪ {∞}.  The standard library ``fractions.Fraction``
refuses a zero denominator, so this module carries its own small value type
with total arithmetic under the formal rules ``1/∞ = 0``, ``1/0 = ∞`` and
``a + ∞ = ∞``.  The single undefined combination ``∞ + ∞`` raises
:class:`IndeterminateError`.
"""

from __future__ import annotations

import fractions
import re
from dataclasses import dataclass
from math import gcd

__all__ = ["Fraction", "IndeterminateError", "INFINITY", "ZERO", "ONE"]


class IndeterminateError(ArithmeticError):
    """Raised for ``∞ + ∞`` and other ``0/0`` situations."""


_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+|inf))?\s*$")


@dataclass(frozen=True, init=False)
class Fraction:
    """A reduced fraction ``p/q`` with ``q >= 0``; ``1/0`` is infinity.

    The sign lives in ``p``.  ``-1/0`` normalizes to ``1/0`` because the
    mirror image of the ``[∞]`` tangle is ``[∞]`` again.
    """

    p: int
    q: int

    def __init__(self, p: int, q: int = 1):
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise IndeterminateError("0/0 is not a fraction")
        if q == 0:
            p = 1
        else:
            g = gcd(p, q)
            p, q = p // g, q // g
            if q < 0:
                p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def coerce(cls, value) -> "Fraction":
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return cls(value, 1)
        if isinstance(value, fractions.Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Fraction")

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Parse ``p/q``, ``p`` or ``inf`` (also ``1/inf`` style is rejected)."""
        if text.strip() in ("inf", "∞", "1/0"):
            return INFINITY
        m = _TEXT.match(text)
        if not m or m.group(2) == "inf":
            raise ValueError(f"not a fraction: {text!r}")
        q = int(m.group(2)) if m.group(2) is not None else 1
        return cls(int(m.group(1)), q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 1

    def to_fraction(self) -> fractions.Fraction:
        if self.is_infinite:
            raise OverflowError("infinity has no finite value")
        return fractions.Fraction(self.p, self.q)

    # arithmetic -----------------------------------------------------------

    def __neg__(self) -> "Fraction":
        return Fraction(-self.p, self.q)

    def reciprocal(self) -> "Fraction":
        return Fraction(self.q, self.p)

    def __add__(self, other) -> "Fraction":
        try:
            other = Fraction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_infinite and other.is_infinite:
            raise IndeterminateError("∞ + ∞ is undefined")
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return Fraction(self.p * other.q + other.p * self.q, self.q * other.q)

    __radd__ = __add__

    def __sub__(self, other) -> "Fraction":
        try:
            return self + (-Fraction.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> "Fraction":
        return Fraction.coerce(other) - self

    def __mul__(self, other) -> "Fraction":
        try:
            other = Fraction.coerce(other)
        except TypeError:
            return NotImplemented
        if (self.is_infinite and other.p == 0) or (other.is_infinite and self.p == 0):
            raise IndeterminateError("0 · ∞ is undefined")
        return Fraction(self.p * other.p, self.q * other.q)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Fraction":
        try:
            other = Fraction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> "Fraction":
        return Fraction.coerce(other) / self

    def __abs__(self) -> "Fraction":
        return Fraction(abs(self.p), self.q)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, fractions.Fraction)):
            other = Fraction.coerce(other)
        if not isinstance(other, Fraction):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"Fraction({self.p}, {self.q})"


INFINITY = Fraction(1, 0)
ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
