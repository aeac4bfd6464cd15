import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cf_terms
from tanglekit.contfrac import (
    INFINITY_CF,
    ConnectivityType,
    ContinuedFraction,
    ParityClass,
    bottom_twist,
    canonical_forms,
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
from tanglekit.expr import IntTangle, Invert, Sum, eval_expr
from tanglekit.fraction import INFINITY, Fraction

CF = ContinuedFraction


@pytest.mark.parametrize("terms,value", [
    ((2, 3, 4), Fraction(30, 13)),
    ((0,), Fraction(0)),
    ((2, -3, 5), Fraction(23, 14)),
    ((4, 3, 2), Fraction(30, 7)),
    ((0, 5), Fraction(1, 5)),
])
def test_eval_examples(terms, value):
    assert eval_contfrac(CF(terms)) == value


def test_eval_divides_by_zero_formally():
    # 1 + 1/(-1 + 1/1) = 1 + 1/0 = ∞
    assert eval_contfrac(CF((1, -1, 1))) == INFINITY
    assert eval_contfrac(INFINITY_CF) == INFINITY


def test_inner_zero_rejected():
    with pytest.raises(ValueError, match="a2"):
        CF((2, 0, 3))


@pytest.mark.parametrize("f,terms", [
    (Fraction(23, 14), (1, 1, 1, 1, 4)),
    (Fraction(11, 7), (1, 1, 1, 2, 1)),
    (Fraction(0), (0,)),
    (Fraction(30, 13), (2, 3, 4)),
    (Fraction(-30, 13), (-2, -3, -4)),
    (Fraction(1, 2), (0, 1, 1)),
    (Fraction(2), (2,)),
])
def test_expand_canonical_examples(f, terms):
    cf = expand_canonical(f)
    assert cf.terms == terms
    assert cf.canonical


def test_expand_infinity_is_sentinel():
    assert expand_canonical(INFINITY) is INFINITY_CF or expand_canonical(INFINITY) == INFINITY_CF
    assert str(INFINITY_CF) == "[inf]"


def test_canonical_flag():
    assert CF((2, 3, 4)).canonical
    assert not CF((2, 3)).canonical
    assert not CF((2, -3, 5)).canonical
    assert CF((0, 1, 1)).canonical
    assert CF((0,)).canonical


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
def test_round_trip_fraction(p, q):
    if p == 0 and q == 0:
        return
    f = Fraction(p, q)
    cf = expand_canonical(f)
    assert eval_contfrac(cf) == f
    assert cf.is_infinity or cf.canonical


@given(cf_terms())
def test_round_trip_sequence(cf):
    f = eval_contfrac(cf)
    c = expand_canonical(f)
    assert c.is_infinity or c.canonical
    assert eval_contfrac(c) == f


def test_uniqueness_of_canonical_forms():
    # all canonical forms up to 9 crossings evaluate to distinct fractions
    seen = {}
    for cf in canonical_forms(9):
        f = eval_contfrac(cf)
        assert f not in seen, (cf, seen.get(f))
        seen[f] = cf
        assert expand_canonical(f) == cf


def test_canonical_forms_are_canonical_and_counted():
    forms = list(canonical_forms(6))
    assert all(cf.is_infinity or cf.canonical for cf in forms)
    # every nonzero crossing total s contributes 2^s forms (both signs)
    assert len(forms) == 2 + sum(2 ** s for s in range(1, 7))


@given(cf_terms(), st.sampled_from([1, -1]))
def test_fraction_laws(cf, sign):
    f = eval_contfrac(cf)
    assert eval_contfrac(cf_add_one(cf, sign)) == f + sign
    assert eval_contfrac(cf_invert(cf)) == f.reciprocal()
    assert eval_contfrac(cf_mirror(cf)) == -f


@pytest.mark.parametrize("cf,sign,out", [((2, 3, 4), 1, (3, 3, 4)), ((0,), -1, (-1,))])
def test_add_one_examples(cf, sign, out):
    assert cf_add_one(CF(cf), sign).terms == out


def test_add_one_value():
    assert eval_contfrac(CF((3, 3, 4))) == eval_contfrac(CF((2, 3, 4))) + 1 == Fraction(43, 13)


def test_invert_examples():
    assert cf_invert(CF((2, 3, 4))).terms == (0, 2, 3, 4)
    assert eval_contfrac(CF((0, 2, 3, 4))) == Fraction(13, 30)
    assert cf_invert(CF((0, 5))).terms == (5,)
    assert cf_invert(CF((0,))) == INFINITY_CF
    assert cf_invert(INFINITY_CF).terms == (0,)


def test_mirror_examples():
    assert cf_mirror(CF((2, 3, 4))).terms == (-2, -3, -4)
    assert cf_mirror(CF((0,))).terms == (0,)
    assert eval_contfrac(CF((-2, -3, -4))) == Fraction(-30, 13)


def test_bottom_twist_examples():
    assert bottom_twist(Fraction(30, 13), 1) == Fraction(30, 43)
    assert bottom_twist(Fraction(5, 7), 0) == Fraction(5, 7)
    assert all(bottom_twist(Fraction(-1, 3), n).p in (-1, 1) for n in range(-5, 6))


@given(cf_terms(), st.integers(-5, 5).filter(bool))
def test_bottom_twist_matches_tree(cf, n):
    # T * 1/[n] = 1/([n] + 1/T)
    tree = Invert(Sum(IntTangle(n), Invert(cf)))
    try:
        expected = eval_expr(tree)
    except ArithmeticError:
        return
    assert bottom_twist(eval_contfrac(cf), n) == expected


def test_palindrome_examples():
    assert palindrome(CF((2, 3, 4))).terms == (4, 3, 2)
    assert palindrome(CF((7,))).terms == (7,)
    P, Q = 30, 13
    Qp = eval_contfrac(CF((4, 3, 2))).q
    assert Q * Qp % P == 1


@given(st.lists(st.integers(-9, 9).filter(bool), min_size=1, max_size=8))
def test_reversal_congruence(terms):
    a = eval_contfrac(CF(terms))
    b = eval_contfrac(CF(terms[::-1]))
    assert abs(a.p) == abs(b.p)
    P = abs(a.p)
    if P > 1 and not a.is_infinite:
        n = len(terms)
        # the unreduced pairs have equal numerators; reduction may flip both signs
        assert (a.q * b.q * (1 if a.p * b.p > 0 else -1) - (-1) ** (n + 1)) % P == 0


def test_palindrome_rejects_leading_zero():
    with pytest.raises(ValueError):
        palindrome(CF((0, 2, 3)))


@pytest.mark.parametrize("f,par,conn,comps", [
    (Fraction(2, 3), ParityClass.EVEN_ODD, ConnectivityType.ZERO, 2),
    (INFINITY, ParityClass.ODD_EVEN, ConnectivityType.INFINITY, 1),
    (Fraction(1), ParityClass.ODD_ODD, ConnectivityType.PLUS_ONE, 1),
    (Fraction(8, 3), ParityClass.EVEN_ODD, ConnectivityType.ZERO, 2),
    (Fraction(3), ParityClass.ODD_ODD, ConnectivityType.PLUS_ONE, 1),
])
def test_parity_connectivity(f, par, conn, comps):
    assert parity(f) is par
    assert connectivity(f) is conn
    assert component_count(f) == comps
    assert str(par) in ("e/o", "o/e", "o/o")


def test_parity_never_even_even():
    for p, q in itertools.product(range(-12, 13), repeat=2):
        if p or q:
            assert parity(Fraction(p, q)) in set(ParityClass)
