"""Exact calculus of rational tangles, their closures and invariants."""

from .bracket import (
    BracketPair,
    bracket_knot,
    bracket_tangle,
    bracket_tangle_oracle,
    closure_bracket,
    determinant,
    fraction_bracket,
    normalized_f,
    sum_formula,
)
from .classify import (
    KnotClass,
    OrientedKnotClass,
    achiral_form,
    is_achiral,
    is_strongly_invertible,
    normalize_oriented,
    normalize_unoriented,
    oriented_equiv,
    special_cut,
    strong_form,
    unoriented_equiv,
)
from .coloring import ColorMatrix, color_closure_mod, color_standard, coloring_fraction
from .contfrac import (
    ContinuedFraction,
    bottom_twist,
    cf_add_one,
    cf_invert,
    cf_mirror,
    component_count,
    connectivity,
    eval_contfrac,
    expand_canonical,
    palindrome,
    parity,
)
from .diagram import PlanarDiagram, build_expr, build_standard, denominator, numerator, writhe
from .dna import Machine, Observation, Solution, generate, solve, threshold
from .expr import Infinity, IntTangle, Invert, Mirror, Product, Rotate, Sum, eval_expr, is_rational
from .fraction import INFINITY, Fraction, IndeterminateError
from .laurent import Cyclotomic8, LaurentPoly, eval_sqrt_i
from .notation import ParseError, parse, to_text

__version__ = "0.1.0"
