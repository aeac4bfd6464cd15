"""Continued fraction forms of rational tangles.

A continued fraction ``[a1, a2, ..., an]`` stands for the tangle
``[a1] + 1/([a2] + 1/(... + 1/[an]))``.  Inner terms are nonzero; ``a1`` may
be zero.  The empty term sequence is reserved as the sentinel form of the
``[∞]`` tangle, which has no finite continued fraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .fraction import INFINITY, Fraction

__all__ = [
    "ContinuedFraction",
    "INFINITY_CF",
    "ParityClass",
    "ConnectivityType",
    "eval_contfrac",
    "expand_canonical",
    "expand_positive",
    "cf_add_one",
    "cf_invert",
    "cf_mirror",
    "bottom_twist",
    "palindrome",
    "parity",
    "connectivity",
    "component_count",
    "canonical_forms",
]


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def __init__(self, terms: Sequence[int] = ()):
        terms = tuple(int(a) for a in terms)
        for i, a in enumerate(terms[1:], start=2):
            if a == 0:
                raise ValueError(f"term a{i} is zero; only a1 may vanish")
        object.__setattr__(self, "terms", terms)

    @property
    def is_infinity(self) -> bool:
        return not self.terms

    @property
    def canonical(self) -> bool:
        """Odd length and alternating: every term shares one sign.

        A leading zero is allowed (tangles of fraction in (-1, 1)).
        """
        t = self.terms
        if len(t) % 2 == 0:
            return False
        if t == (0,):
            return True
        rest = t[1:] if t[0] == 0 else t
        if not rest:
            return False
        return all(a > 0 for a in rest) or all(a < 0 for a in rest)

    @property
    def crossings(self) -> int:
        return sum(abs(a) for a in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __str__(self) -> str:
        if self.is_infinity:
            return "[inf]"
        return "[" + ",".join(str(a) for a in self.terms) + "]"


INFINITY_CF = ContinuedFraction(())


def eval_contfrac(cf: ContinuedFraction | Sequence[int]) -> Fraction:
    """Exact value of ``a1 + 1/(a2 + ...)``.

    Uses the convergent recurrence, i.e. the product of the matrices
    ``[[a, 1], [1, 0]]``; the determinant is ±1 so the pair is already coprime
    and intermediate infinities need no special handling.
    """
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    if not terms:
        return INFINITY
    p, p_prev = 1, 0
    q, q_prev = 0, 1
    for a in terms:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return Fraction(p, q)


def expand_positive(p: int, q: int) -> list[int]:
    """Euclid's expansion of ``p/q`` for ``p >= 0, q > 0``."""
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def expand_canonical(f: Fraction) -> ContinuedFraction:
    f = Fraction.coerce(f)
    if f.is_infinite:
        return INFINITY_CF
    sign = -1 if f.p < 0 else 1
    terms = expand_positive(abs(f.p), f.q)
    if len(terms) % 2 == 0:
        # the last Euclid term is >= 2 whenever the length is >= 2
        terms[-1:] = [terms[-1] - 1, 1]
    return ContinuedFraction([sign * a for a in terms])


def cf_add_one(cf: ContinuedFraction, sign: int = 1) -> ContinuedFraction:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if cf.is_infinity:
        return cf
    return ContinuedFraction((cf.terms[0] + sign,) + cf.terms[1:])


def cf_invert(cf: ContinuedFraction) -> ContinuedFraction:
    t = cf.terms
    if not t:
        return ContinuedFraction((0,))
    if t == (0,):
        return INFINITY_CF
    if t[0] == 0:
        return ContinuedFraction(t[1:])
    return ContinuedFraction((0,) + t)


def cf_mirror(cf: ContinuedFraction) -> ContinuedFraction:
    return ContinuedFraction(-a for a in cf.terms)


def bottom_twist(f: Fraction, n: int) -> Fraction:
    """Fraction of ``T * 1/[n]`` given ``F(T) = p/q``: ``p/(np + q)``."""
    f = Fraction.coerce(f)
    return Fraction(f.p, n * f.p + f.q)


def palindrome(cf: ContinuedFraction) -> ContinuedFraction:
    if len(cf.terms) > 1 and cf.terms[0] == 0:
        raise ValueError("reversal would put the zero term inside")
    return ContinuedFraction(cf.terms[::-1])


class ParityClass(str, enum.Enum):
    EVEN_ODD = "e/o"
    ODD_EVEN = "o/e"
    ODD_ODD = "o/o"

    def __str__(self) -> str:
        return self.value


class ConnectivityType(str, enum.Enum):
    ZERO = "[0]"
    INFINITY = "[inf]"
    PLUS_ONE = "[+1]"

    def __str__(self) -> str:
        return self.value


def parity(f: Fraction) -> ParityClass:
    f = Fraction.coerce(f)
    if f.p % 2 == 0:
        return ParityClass.EVEN_ODD
    return ParityClass.ODD_EVEN if f.q % 2 == 0 else ParityClass.ODD_ODD


_CONNECTIVITY = {
    ParityClass.EVEN_ODD: ConnectivityType.ZERO,
    ParityClass.ODD_EVEN: ConnectivityType.INFINITY,
    ParityClass.ODD_ODD: ConnectivityType.PLUS_ONE,
}


def connectivity(f: Fraction) -> ConnectivityType:
    return _CONNECTIVITY[parity(f)]


def component_count(f: Fraction) -> int:
    """Number of components of the numerator closure."""
    return 2 if parity(f) is ParityClass.EVEN_ODD else 1


def canonical_forms(max_crossings: int, *, min_crossings: int = 0) -> Iterator[ContinuedFraction]:
    """Every canonical continued fraction with a bounded crossing total.

    Yields ``[0]``, the ``[∞]`` sentinel (both crossingless) and, for each
    total ``s``, all odd-length forms with positive (then negative) terms,
    including those with a leading zero.
    """

    def compositions(m: int, parts_parity: int):
        # compositions of m into positive parts, number of parts ≡ parity (mod 2)
        if m == 0:
            if parts_parity == 0:
                yield ()
            return
        for first in range(1, m + 1):
            for rest in compositions(m - first, 1 - parts_parity):
                yield (first,) + rest

    if min_crossings <= 0:
        yield ContinuedFraction((0,))
        yield INFINITY_CF
    for s in range(max(1, min_crossings), max_crossings + 1):
        forms = []
        for a1 in range(s, -1, -1):
            for rest in compositions(s - a1, 0):
                if a1 == 0 and not rest:
                    continue
                forms.append((a1,) + rest)
        for sign in (1, -1):
            for t in forms:
                yield ContinuedFraction(sign * a for a in t)
