"""Exact Laurent polynomials in ``A`` and the ring Z[ζ] with ζ = e^{iπ/4}."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Mapping

__all__ = ["LaurentPoly", "Cyclotomic8", "ZETA", "I", "DELTA", "A", "eval_sqrt_i"]


class LaurentPoly:
    """Integer Laurent polynomial stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so structural equality is
    polynomial equality.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._c.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({e * k: c ** (-k)})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """``p(A^{-1})``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            parts.append(f"{c}*A^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: terms ``c*A^e`` joined by ``+``/``-``."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        pos = 0
        out: dict[int, int] = {}
        term = re.compile(r"([+-]?)(\d+)\*A\^(-?\d+)")
        while pos < len(text):
            m = term.match(text, pos)
            if not m:
                raise ValueError(f"bad polynomial term at offset {pos}")
            c = int(m.group(2)) * (-1 if m.group(1) == "-" else 1)
            e = int(m.group(3))
            out[e] = out.get(e, 0) + c
            pos = m.end()
        return cls(out)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._c.items())}


A = LaurentPoly.monomial(1)
DELTA = LaurentPoly({2: -1, -2: -1})


@dataclass(frozen=True)
class Cyclotomic8:
    """``c0 + c1 ζ + c2 ζ² + c3 ζ³`` with ``ζ⁴ = -1``."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        return Cyclotomic8(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclotomic8":
        return Cyclotomic8(*(-a for a in self.coeffs))

    def __sub__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        return self + (-other)

    def __mul__(self, other) -> "Cyclotomic8":
        if isinstance(other, int):
            return Cyclotomic8(*(a * other for a in self.coeffs))
        out = [0] * 8
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Cyclotomic8(out[0] - out[4], out[1] - out[5], out[2] - out[6], out[3])

    __rmul__ = __mul__

    def conj(self) -> "Cyclotomic8":
        # ζ̄ = ζ⁻¹ = -ζ³, ζ̄² = -ζ², ζ̄³ = -ζ
        return Cyclotomic8(self.c0, -self.c3, -self.c2, -self.c1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    @classmethod
    def zeta_power(cls, k: int) -> "Cyclotomic8":
        k %= 8
        sign = -1 if k >= 4 else 1
        c = [0, 0, 0, 0]
        c[k % 4] = sign
        return cls(*c)

    def unit_multiple(self) -> tuple[int, int] | None:
        """``(k, m)`` with ``self = m ζ^k`` and ``0 <= k < 4``, if such exist."""
        nz = [(k, c) for k, c in enumerate(self.coeffs) if c]
        if not nz:
            return (0, 0)
        if len(nz) != 1:
            return None
        return nz[0]

    def content(self) -> int:
        return gcd(*self.coeffs)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.coeffs)


ZETA = Cyclotomic8(0, 1, 0, 0)
I = Cyclotomic8(0, 0, 1, 0)


def eval_sqrt_i(p: LaurentPoly) -> Cyclotomic8:
    """Substitute ``A = ζ``; exact, since ``ζ`` has order 8."""
    c = [0, 0, 0, 0]
    for e, coef in p.coeffs.items():
        k = e % 8
        c[k % 4] += coef if k < 4 else -coef
    return Cyclotomic8(*c)
