from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from folcremona import CycNumber, MultiPoly, ParseError, RationalFunction, parse_expression, parse_polynomial, parse_scalar
from folcremona.parsing import parse_point, split_top_level


def test_polynomial_syntax():
    p = parse_polynomial("3*x^2*y - (x - 1)^2 + 1/2*z")
    assert p == MultiPoly.parse("3*x^2*y - x^2 + 2*x - 1 + z/2")
    assert parse_polynomial("2x y") == parse_polynomial("2*x*y")     # implicit products


def test_rational_expressions():
    f = parse_expression("(x^2 - 1)/(x - 1)")
    assert isinstance(f, MultiPoly) and f == MultiPoly.parse("x + 1")
    g = parse_expression("1/(x*y) + y")
    assert isinstance(g, RationalFunction)


def test_scalars():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("j^3") == 1
    assert parse_scalar("i^2") == -1
    assert parse_scalar("zeta(7)^7", 84) == 1
    with pytest.raises(ParseError):
        parse_scalar("x + 1")


@pytest.mark.parametrize("text", ["x +", "x ^ y", "(x", "2*/x", "q + 1", "x^^2", ""])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        parse_expression(text)


def test_negative_exponents_give_rational_functions():
    assert parse_expression("x^-2*y") == parse_expression("y/x^2")


def test_conductor_errors():
    with pytest.raises(ParseError):
        parse_expression("j*x", 4)
    with pytest.raises(ParseError):
        parse_expression("i*x", 3)
    with pytest.raises(ParseError):
        parse_expression("zeta(7)", 12)


def test_division_by_zero_is_reported():
    with pytest.raises((ParseError, ZeroDivisionError)):
        parse_expression("x/(y - y)")


def test_points_and_splitting():
    assert parse_point("(1/2, 3/4)") == (Fraction(1, 2), Fraction(3, 4))
    assert parse_point("(1 : j : 0)") == (1, CycNumber.j(), 0)
    assert split_top_level("f(a, b), c", ",") == ["f(a, b)", "c"]


coeff = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(coeff, st.integers(0, 4), st.integers(0, 4), st.integers(0, 2)), max_size=6),
       st.sampled_from(["", "j", "i", "i*j"]))
def test_print_parse_round_trip(terms, unit):
    u = parse_scalar(unit) if unit else CycNumber(1)
    p = MultiPoly.const(0)
    for c, a, b, d in terms:
        p = p + MultiPoly.parse(f"x^{a}*y^{b}*z^{d}") * (u * c)
    assert MultiPoly.parse(str(p)) == p
