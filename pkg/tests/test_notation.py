import pytest
from hypothesis import given

from conftest import algebraic_trees, cf_terms, rational_trees
from tanglekit.contfrac import ContinuedFraction
from tanglekit.expr import Infinity, IntTangle, Invert, Mirror, Product, Rotate, Sum, eval_expr
from tanglekit.fraction import INFINITY, Fraction
from tanglekit.notation import Closure, ParseError, as_tangle, parse, to_text

CF = ContinuedFraction


def test_atoms():
    assert parse("[3]") == IntTangle(3)
    assert parse("[-2]") == IntTangle(-2)
    assert parse("[inf]") == Infinity()
    assert parse("[2,3,4]") == CF((2, 3, 4))
    assert parse("[0,-1,2]") == CF((0, -1, 2))
    assert parse("30/13") == Fraction(30, 13)
    assert parse("-1/3") == Fraction(-1, 3)
    assert parse("inf") == INFINITY
    assert parse("∞") == INFINITY
    assert parse("7") == Fraction(7)


def test_precedence():
    a, b, c = IntTangle(1), IntTangle(2), IntTangle(3)
    assert parse("[1] + [2] * [3]") == Sum(a, Product(b, c))
    assert parse("([1] + [2]) * [3]") == Product(Sum(a, b), c)
    assert parse("[1] + [2] + [3]") == Sum(Sum(a, b), c)
    assert parse("-[1] + [2]") == Sum(Mirror(a), b)
    assert parse("1/[2]") == Invert(b)
    assert parse("inv([2]) * rot([3])") == Product(Invert(b), Rotate(c))


def test_closures():
    assert parse("N([2,2,3])") == Closure("N", CF((2, 2, 3)))
    assert parse("D([1] + [1])") == Closure("D", Sum(IntTangle(1), IntTangle(1)))
    assert parse("N(3/2)") == Closure("N", CF((1, 1, 1)))
    with pytest.raises(ValueError):
        as_tangle(parse("N([1])"))


def test_fraction_operands_become_tangles():
    t = parse("1/2 + [1]")
    assert eval_expr(t) == Fraction(3, 2)
    assert parse("inf + [1]") == Sum(Infinity(), IntTangle(1))


@pytest.mark.parametrize(
    "text, offset",
    [
        ("[1,0]", 3),
        ("[1] + ", 6),
        ("[1] $ [2]", 4),
        ("∞ + x", 6),
        ("N([1]) + [1]", 7),
        ("[1] + N([1])", 6),
        ("0/0", 0),
        ("2/[3]", 0),
        ("[1", 2),
        ("rot[1]", 3),
    ],
)
def test_errors_report_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset


def test_error_message_mentions_offset():
    with pytest.raises(ParseError, match="byte 3"):
        parse("[1,0]")


@given(algebraic_trees())
def test_round_trip_trees(t):
    assert parse(to_text(t)) == t


@given(rational_trees())
def test_round_trip_rational_trees(t):
    assert parse(to_text(t)) == t


@given(cf_terms())
def test_round_trip_forms(cf):
    node = parse(to_text(cf))
    if len(cf) == 1:
        assert node == IntTangle(cf.terms[0])
    elif cf.is_infinity:
        assert node == Infinity()
    else:
        assert node == cf


def test_printing():
    assert to_text(parse("-([1] + [2])")) == "-([1] + [2])"
    assert to_text(parse("[1] * ([2] + [3])")) == "[1] * ([2] + [3])"
    assert to_text(Closure("N", CF((2, 3)))) == "N([2,3])"
    assert to_text(Fraction(-1, 3)) == "-1/3"
