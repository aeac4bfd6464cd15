import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import algebraic_trees, cf_terms, rational_trees, small_cfs
from tanglekit.bracket import (
    INFINITY_PAIR,
    ONE_PAIR,
    ZERO_PAIR,
    BracketError,
    BracketPair,
    bracket_knot,
    bracket_tangle,
    bracket_tangle_oracle,
    closure_bracket,
    determinant,
    fraction_bracket,
    fraction_from_pair,
    invert_pair,
    mirror_pair,
    normalized_f,
    product_formula,
    rotate_pair,
    sum_formula,
)
from tanglekit.contfrac import ContinuedFraction, canonical_forms, eval_contfrac
from tanglekit.diagram import (
    add_curl,
    build_expr,
    build_standard,
    denominator,
    elementary,
    flip,
    mirror,
    numerator,
    tangle_sum,
)
from tanglekit.expr import Infinity, IntTangle, Sum, eval_expr
from tanglekit.fraction import INFINITY, Fraction
from tanglekit.laurent import A, DELTA, LaurentPoly, eval_sqrt_i

CF = ContinuedFraction


def _knot(terms):
    return numerator(build_standard(CF(terms)))


def test_elementary_pairs():
    assert bracket_tangle(IntTangle(0)) == ZERO_PAIR
    assert bracket_tangle(Infinity()) == INFINITY_PAIR
    assert bracket_tangle(IntTangle(1)) == ONE_PAIR == BracketPair(A, A**-1)
    assert bracket_tangle_oracle(elementary(1)) == ONE_PAIR


def test_trefoil_bracket():
    # right-handed trefoil: <K> = -A^5 - A^-3 + A^-7
    expected = LaurentPoly({5: -1, -3: -1, -7: 1})
    assert bracket_knot(_knot([3])) == expected
    assert closure_bracket(bracket_tangle(CF((3,))), "N") == expected


def test_unknot_and_unlink():
    assert bracket_knot(_knot([])) == 1
    assert bracket_knot(_knot([0])) == DELTA
    assert bracket_knot(_knot([1])) == -(A**3)
    assert bracket_knot(_knot([-1])) == -(A**-3)


def test_sum_formula_against_oracle():
    t, s = elementary(0), elementary("inf")
    expected = bracket_tangle_oracle(tangle_sum(t, s))
    assert sum_formula(ZERO_PAIR, INFINITY_PAIR) == expected == INFINITY_PAIR


def test_uncorrected_sum_formula_disagrees():
    # a δ coefficient of n_S alone (instead of n_T n_S) breaks [0] + [∞]
    def variant(t, s):
        return BracketPair(t.d * s.d, t.d * s.n + t.n * s.d + s.n * DELTA)

    oracle = bracket_tangle_oracle(tangle_sum(elementary(0), elementary("inf")))
    assert variant(ZERO_PAIR, INFINITY_PAIR) != oracle


def test_pair_operations():
    p = bracket_tangle(CF((2, 3)))
    assert rotate_pair(rotate_pair(p)) == p
    assert mirror_pair(mirror_pair(p)) == p
    assert invert_pair(p) == mirror_pair(rotate_pair(p))
    assert product_formula(p, ZERO_PAIR) == rotate_pair(sum_formula(rotate_pair(p), INFINITY_PAIR))


@settings(max_examples=500)
@given(algebraic_trees())
def test_recursion_matches_oracle_on_trees(t):
    assert bracket_tangle(t) == bracket_tangle_oracle(build_expr(t))


@given(small_cfs(max_crossings=10))
def test_recursion_matches_oracle_on_forms(cf):
    assert bracket_tangle(cf) == bracket_tangle_oracle(build_standard(cf))


@given(cf_terms(max_len=5, bound=4))
def test_fraction_agrees_with_continued_fraction(cf):
    assert fraction_bracket(cf) == eval_contfrac(cf)


@given(rational_trees())
def test_fraction_agrees_on_rational_trees(t):
    assert fraction_bracket(t) == eval_expr(t)


def test_fraction_undefined_for_closed_loop():
    with pytest.raises(BracketError):
        fraction_bracket(Sum(Infinity(), Infinity()))


def test_fraction_from_pair_examples():
    assert fraction_from_pair(ONE_PAIR) == Fraction(1)
    assert fraction_from_pair(INFINITY_PAIR) == INFINITY
    assert fraction_bracket(CF((2, 3, 4))) == Fraction(30, 13)
    assert fraction_bracket(build_standard(CF((2, 3, 4)))) == Fraction(30, 13)


@given(small_cfs(max_crossings=7))
def test_closure_formulas(cf):
    d = build_standard(cf)
    bp = bracket_tangle(cf)
    assert bracket_knot(numerator(d)) == closure_bracket(bp, "N")
    assert bracket_knot(denominator(d)) == closure_bracket(bp, "D")


@given(small_cfs(max_crossings=7))
def test_mirror_duality(cf):
    d = build_standard(cf)
    assert bracket_tangle_oracle(mirror(d)) == mirror_pair(bracket_tangle(cf))
    n = numerator(d)
    assert bracket_knot(mirror(n)) == bracket_knot(n).substitute_inverse()


@given(small_cfs())
def test_mirror_conjugates_value_at_sqrt_i(cf):
    bp = bracket_tangle(cf)
    m = mirror_pair(bp)
    assert eval_sqrt_i(m.d) == eval_sqrt_i(bp.d).conj()
    assert eval_sqrt_i(m.n) == eval_sqrt_i(bp.n).conj()
    assert fraction_from_pair(m) == -fraction_from_pair(bp)


@given(small_cfs(max_crossings=7), st.sampled_from([1, -1]))
def test_curl_factor(cf, sign):
    n = numerator(build_standard(cf))
    if not n.n_crossings:
        return
    curled = add_curl(n, n.crossings[0][1], sign)
    assert bracket_knot(curled) == -(A ** (3 * sign)) * bracket_knot(n)
    assert normalized_f(curled) == normalized_f(n)


@given(small_cfs(max_crossings=7), st.sampled_from("hv"))
def test_flip_preserves_fraction(cf, axis):
    assert fraction_bracket(flip(build_standard(cf), axis)) == eval_contfrac(cf)


def test_normalized_f_chirality():
    trefoil = normalized_f(_knot([3]))
    assert trefoil == LaurentPoly({-4: 1, -12: 1, -16: -1})
    assert trefoil != trefoil.substitute_inverse()
    eight = normalized_f(_knot([2, 2]))
    assert eight == eight.substitute_inverse()


def test_normalized_f_needs_orientation():
    from tanglekit.diagram import PlanarDiagram

    d = _knot([3])
    with pytest.raises(ValueError):
        normalized_f(PlanarDiagram(d.crossings))


def test_determinant_fixtures():
    assert determinant(_knot([2, 2, 3])) == 17
    assert determinant(_knot([3])) == 3
    assert determinant(_knot([0])) == 0
    assert determinant(closure_bracket(bracket_tangle(CF((2, 3, 4))), "N")) == 30


def test_determinant_ratio():
    for cf in canonical_forms(8):
        bp = bracket_tangle(cf)
        ratio = Fraction(determinant(closure_bracket(bp, "N")), determinant(closure_bracket(bp, "D")))
        assert ratio == abs(eval_contfrac(cf)), cf


def test_closure_bracket_rejects_unknown():
    with pytest.raises(ValueError):
        closure_bracket(ONE_PAIR, "X")
    with pytest.raises(ValueError):
        bracket_knot(elementary(1))
    with pytest.raises(ValueError):
        bracket_tangle_oracle(_knot([1]))
