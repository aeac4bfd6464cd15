"""Bracket polynomial of tangles and links, its value at A = √i, and the
bracket definition of the tangle fraction.

A tangle's bracket is a combination ``d·<[0]> + n·<[∞]>``; the pair
``(d, n)`` is computed either by recursion over the tangle tree or by brute
force over all smoothings of a diagram.  The two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from .contfrac import ContinuedFraction
from .diagram import PlanarDiagram, crossing_signs, reverse_component, state_statistics
from .expr import Infinity, IntTangle, Invert, Mirror, Product, Rotate, Sum, TangleExpr, from_contfrac
from .fraction import INFINITY, ZERO, Fraction
from .laurent import DELTA, I, Cyclotomic8, LaurentPoly, eval_sqrt_i

__all__ = [
    "BracketPair",
    "BracketError",
    "ZERO_PAIR",
    "INFINITY_PAIR",
    "ONE_PAIR",
    "sum_formula",
    "product_formula",
    "rotate_pair",
    "mirror_pair",
    "invert_pair",
    "bracket_tangle",
    "bracket_tangle_oracle",
    "bracket_knot",
    "closure_bracket",
    "normalized_f",
    "orientation_variants",
    "determinant",
    "fraction_from_pair",
    "fraction_bracket",
]


class BracketError(ArithmeticError):
    """A bracket value lacks a structure the theory guarantees."""


@dataclass(frozen=True)
class BracketPair:
    """``<T> = d <[0]> + n <[∞]>``."""

    d: LaurentPoly
    n: LaurentPoly

    def __str__(self) -> str:
        return f"d = {self.d}; n = {self.n}"

    def to_json(self) -> dict:
        return {"d": self.d.to_json(), "n": self.n.to_json()}


_ONE = LaurentPoly.constant(1)
_NIL = LaurentPoly()
ZERO_PAIR = BracketPair(_ONE, _NIL)
INFINITY_PAIR = BracketPair(_NIL, _ONE)
ONE_PAIR = BracketPair(LaurentPoly.monomial(1), LaurentPoly.monomial(-1))


def sum_formula(t: BracketPair, s: BracketPair) -> BracketPair:
    """Bracket pair of ``T + S``.

    Expanding ``<T + S>`` bilinearly, the only term producing a loop is
    ``<[∞] + [∞]> = δ<[∞]>``, which carries the coefficient ``n_T n_S``.
    """
    return BracketPair(t.d * s.d, t.d * s.n + t.n * s.d + t.n * s.n * DELTA)


def product_formula(t: BracketPair, s: BracketPair) -> BracketPair:
    """Bracket pair of ``T * S``; here ``<[0] * [0]> = δ<[0]>``."""
    return BracketPair(t.d * s.n + t.n * s.d + t.d * s.d * DELTA, t.n * s.n)


def rotate_pair(t: BracketPair) -> BracketPair:
    return BracketPair(t.n, t.d)


def mirror_pair(t: BracketPair) -> BracketPair:
    return BracketPair(t.d.substitute_inverse(), t.n.substitute_inverse())


def invert_pair(t: BracketPair) -> BracketPair:
    return mirror_pair(rotate_pair(t))


@lru_cache(maxsize=256)
def _integer_pair(n: int) -> BracketPair:
    step = ONE_PAIR if n > 0 else mirror_pair(ONE_PAIR)
    out = ZERO_PAIR
    for _ in range(abs(n)):
        out = sum_formula(out, step)
    return out


def bracket_tangle(t: TangleExpr | ContinuedFraction) -> BracketPair:
    """Bracket pair by recursion over the tangle tree."""
    if isinstance(t, ContinuedFraction):
        t = from_contfrac(t)
    if isinstance(t, IntTangle):
        return _integer_pair(t.n)
    if isinstance(t, Infinity):
        return INFINITY_PAIR
    if isinstance(t, Mirror):
        return mirror_pair(bracket_tangle(t.operand))
    if isinstance(t, Rotate):
        return rotate_pair(bracket_tangle(t.operand))
    if isinstance(t, Invert):
        return invert_pair(bracket_tangle(t.operand))
    if isinstance(t, Sum):
        return sum_formula(bracket_tangle(t.left), bracket_tangle(t.right))
    if isinstance(t, Product):
        return product_formula(bracket_tangle(t.top), bracket_tangle(t.bottom))
    raise TypeError(f"not a tangle expression: {t!r}")


def _delta_power(k: int) -> LaurentPoly:
    return DELTA**k


def _state_sum(d: PlanarDiagram, loop_shift: int):
    by_residual: dict[int, dict[int, int]] = {}
    # regroup per residual as polynomial in A with δ-power collected
    terms: dict[tuple[int, int], dict[int, int]] = {}
    for (ex, loops, res), k in state_statistics(d).items():
        terms.setdefault((res, loops + loop_shift), {})
        bucket = terms[(res, loops + loop_shift)]
        bucket[ex] = bucket.get(ex, 0) + k
    for (res, power), coeffs in terms.items():
        if power < 0:
            raise ValueError("a closed diagram has at least one loop")
        poly = LaurentPoly(coeffs) * _delta_power(power)
        acc = by_residual.setdefault(res, {})
        for e, c in poly.coeffs.items():
            acc[e] = acc.get(e, 0) + c
    return {res: LaurentPoly(c) for res, c in by_residual.items()}


def bracket_tangle_oracle(d: PlanarDiagram) -> BracketPair:
    """Bracket pair by summing over all ``2^N`` states of a tangle diagram."""
    if d.is_closed:
        raise ValueError("expected a tangle diagram")
    parts = _state_sum(d, 0)
    return BracketPair(parts.get(0, _NIL), parts.get(1, _NIL))


def bracket_knot(d: PlanarDiagram) -> LaurentPoly:
    """State sum of a closed diagram, normalized so the trivial circle is 1."""
    if not d.is_closed:
        raise ValueError("bracket_knot needs a closed diagram")
    return _state_sum(d, -1).get(-1, _NIL)


def closure_bracket(bp: BracketPair, which: str) -> LaurentPoly:
    if which == "N":
        return bp.d * DELTA + bp.n
    if which == "D":
        return bp.d + bp.n * DELTA
    raise ValueError("closure must be 'N' or 'D'")


def normalized_f(d: PlanarDiagram) -> LaurentPoly:
    """``(-A^3)^{-w} <K>``: invariant under all Reidemeister moves."""
    if d.orientation is None:
        raise ValueError("normalized_f needs an oriented diagram")
    w = sum(crossing_signs(d))
    return LaurentPoly.monomial(-3 * w, (-1) ** (w % 2)) * bracket_knot(d)


def orientation_variants(d: PlanarDiagram):
    """All orientations of an oriented diagram, up to reversing everything."""
    if d.orientation is None:
        raise ValueError("diagram is not oriented")
    k = len(d.orientation)
    for flips in cartesian((False, True), repeat=max(k - 1, 0)):
        out = d
        for i, f in enumerate(flips, start=1):
            if f:
                out = reverse_component(out, i)
        yield out


def determinant(x: PlanarDiagram | LaurentPoly) -> int:
    """``|<K>(√i)|`` for a closed diagram or an already computed bracket."""
    poly = bracket_knot(x) if isinstance(x, PlanarDiagram) else x
    value = eval_sqrt_i(poly)
    um = value.unit_multiple()
    if um is None:
        raise BracketError(f"<K>(√i) = {value} is not a unit multiple of an integer")
    return abs(um[1])


def _real_parts(z: Cyclotomic8) -> tuple[int, int]:
    # a real element of Z[ζ] is x + y(ζ - ζ³) = x + y√2
    if z.c2 != 0 or z.c1 != -z.c3:
        raise BracketError(f"{z} is not real")
    return z.c0, z.c1


def fraction_from_pair(bp: BracketPair) -> Fraction:
    """``i n(√i) / d(√i)`` as an exact rational or ∞."""
    n = eval_sqrt_i(bp.n)
    d = eval_sqrt_i(bp.d)
    if d.is_zero() and n.is_zero():
        raise BracketError("n and d both vanish at √i; the fraction is undefined")
    if d.is_zero():
        return INFINITY
    if n.is_zero():
        return ZERO
    num = _real_parts(I * n * d.conj())
    den = _real_parts(d * d.conj())
    # num/den must be rational: num = r·den componentwise
    k = 0 if den[0] else 1
    value = Fraction(num[k], den[k])
    if num[0] * den[k] != num[k] * den[0] or num[1] * den[k] != num[k] * den[1]:
        raise BracketError(f"i·n/d = {num}/{den} is irrational")
    return value


def fraction_bracket(t: TangleExpr | ContinuedFraction | PlanarDiagram) -> Fraction:
    """Tangle fraction from the bracket; diagrams go through the oracle."""
    if isinstance(t, PlanarDiagram):
        return fraction_from_pair(bracket_tangle_oracle(t))
    return fraction_from_pair(bracket_tangle(t))
