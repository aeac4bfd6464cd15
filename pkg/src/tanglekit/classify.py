"""Arithmetic classification of rational knots and links.

The numerator closure of a rational tangle with fraction ``p/q`` is
determined up to isotopy by ``|p|`` and the residue of ``q`` modulo ``p``
up to inversion; with orientations, by ``q`` modulo ``2p`` for odd ``q``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator

from .contfrac import ContinuedFraction, expand_positive
from .fraction import Fraction

__all__ = [
    "KnotClass",
    "OrientedKnotClass",
    "ComponentError",
    "DegenerateClassError",
    "DegenerateCutWarning",
    "normalize_unoriented",
    "normalize_oriented",
    "unoriented_equiv",
    "oriented_equiv",
    "equivalence_witness",
    "is_achiral",
    "achiral_form",
    "is_strongly_invertible",
    "strong_form",
    "special_cut",
    "class_representatives",
]


class ComponentError(ValueError):
    """The closure has the wrong number of components for the question."""


class DegenerateClassError(ValueError):
    """Unknot or two-component unlink where a generic class is required."""


class DegenerateCutWarning(UserWarning):
    pass


def _pq(f) -> tuple[int, int]:
    """``(P, Q)`` with ``P = |p| >= 0`` and the sign moved onto ``Q``."""
    f = Fraction.coerce(f)
    if f.p < 0:
        return -f.p, -f.q
    return f.p, f.q


def _inverse(q: int, m: int) -> int:
    return pow(q, -1, m)


@dataclass(frozen=True)
class KnotClass:
    """Unoriented class: ``p = 0`` is the 2-component unlink, ``p = 1`` the
    unknot, otherwise ``qclass`` is the least of ``q`` and ``q⁻¹`` mod p."""

    p: int
    qclass: int

    @property
    def kind(self) -> str:
        return {0: "unlink2", 1: "unknot"}.get(self.p, "generic")

    def __str__(self) -> str:
        if self.p <= 1:
            return self.kind
        return f"K({self.p}; {self.qclass})"


@dataclass(frozen=True)
class OrientedKnotClass:
    p: int
    qclass2: int

    @property
    def kind(self) -> str:
        return {0: "unlink2", 1: "unknot"}.get(self.p, "generic")

    def __str__(self) -> str:
        if self.p <= 1:
            return self.kind
        return f"K⃗({self.p}; {self.qclass2} mod {2 * self.p})"


def normalize_unoriented(f) -> KnotClass:
    P, Q = _pq(f)
    if P <= 1:
        return KnotClass(P, 0)
    q = Q % P
    return KnotClass(P, min(q, _inverse(q, P)))


def _odd_rep(P: int, Q: int) -> int:
    if P % 2 == 1 and Q % 2 == 0:
        return Q + P
    return Q


def normalize_oriented(f) -> OrientedKnotClass:
    P, Q = _pq(f)
    if P <= 1:
        return OrientedKnotClass(P, 0)
    q = _odd_rep(P, Q) % (2 * P)
    return OrientedKnotClass(P, min(q, _inverse(q, 2 * P)))


def unoriented_equiv(f1, f2) -> bool:
    return normalize_unoriented(f1) == normalize_unoriented(f2)


def oriented_equiv(f1, f2) -> bool:
    return normalize_oriented(f1) == normalize_oriented(f2)


def equivalence_witness(f1, f2, *, oriented: bool = False) -> str | None:
    """The congruence certifying equivalence, or ``None`` if inequivalent."""
    (P1, Q1), (P2, Q2) = _pq(f1), _pq(f2)
    if P1 != P2:
        return None
    if P1 <= 1:
        return "unknot" if P1 == 1 else "unlink2"
    if oriented:
        Q1, Q2 = _odd_rep(P1, Q1), _odd_rep(P2, Q2)
        m = 2 * P1
    else:
        m = P1
    if (Q1 - Q2) % m == 0:
        return f"q ≡ q' mod {m}"
    if (Q1 * Q2 - 1) % m == 0:
        return f"qq' ≡ 1 mod {m}"
    return None


def is_achiral(f) -> bool:
    """Closure isotopic to its mirror image: ``q² ≡ -1 (mod p)``.

    The unknot and the unlink are achiral.
    """
    P, Q = _pq(f)
    if P <= 1:
        return True
    return (Q * Q + 1) % P == 0


def class_representatives(f) -> Iterator[int]:
    """Residues ``q'`` in ``(0, p)`` giving closures isotopic to ``N(p/q)``."""
    P, Q = _pq(f)
    if P <= 1:
        raise DegenerateClassError("unknot and unlink have no residue class")
    q = Q % P
    yield q
    qi = _inverse(q, P)
    if qi != q:
        yield qi


def _both_lengths(p: int, q: int) -> Iterator[ContinuedFraction]:
    terms = expand_positive(p, q)
    yield ContinuedFraction(terms)
    if terms[-1] > 1:
        yield ContinuedFraction(terms[:-1] + [terms[-1] - 1, 1])
    elif len(terms) > 1:
        yield ContinuedFraction(terms[:-2] + [terms[-2] + 1])


def _palindromic_form(f, even: bool) -> ContinuedFraction:
    P, _ = _pq(f)
    for q in class_representatives(f):
        for cf in _both_lengths(P, q):
            t = cf.terms
            if (len(t) % 2 == 0) == even and t == t[::-1]:
                return cf
    raise AssertionError(f"no palindromic form found for {f}")


def achiral_form(f) -> ContinuedFraction:
    """Even-length palindrome ``[a1,...,ak,ak,...,a1]`` with an equivalent
    closure; ``ValueError`` if the closure is chiral."""
    if _pq(f)[0] <= 1:
        raise DegenerateClassError("unknot and unlink have no palindromic form")
    if not is_achiral(f):
        raise ValueError(f"N({Fraction.coerce(f)}) is chiral")
    return _palindromic_form(f, even=True)


def is_strongly_invertible(f) -> bool:
    """For 2-component closures: ``q² = 1 + u p`` with ``u`` odd.

    Raises :class:`ComponentError` for knots (odd ``p``) and
    :class:`DegenerateClassError` for the unlink.
    """
    P, Q = _pq(f)
    if P % 2:
        raise ComponentError(f"N({Fraction.coerce(f)}) is a knot, not a 2-component link")
    if P == 0:
        raise DegenerateClassError("the 2-component unlink has no residue class")
    q = Q % P
    u, r = divmod(q * q - 1, P)
    return r == 0 and u % 2 == 1


def strong_form(f) -> ContinuedFraction:
    """Odd-length palindrome ``[a1,...,ak,α,ak,...,a1]`` with an equivalent
    closure."""
    if not is_strongly_invertible(f):
        raise ValueError(f"N({Fraction.coerce(f)}) is not strongly invertible")
    return _palindromic_form(f, even=False)


def special_cut(f) -> Fraction:
    """``F([-1] - 1/T) = (p + q)/(-p)`` for ``F(T) = p/q``.

    Its numerator closure is isotopic to that of ``[1] + T``.  When
    ``p + q = 0`` both closures are the unlink and a warning is issued.
    """
    f = Fraction.coerce(f)
    p, q = f.p, f.q
    if p + q == 0:
        warnings.warn("p + q = 0: [1] + T is [0], closure is the unlink", DegenerateCutWarning, stacklevel=2)
    return Fraction(p + q, -p)
