"""Expression grammar: acceptance of the spec'd forms, positioned rejection."""
from __future__ import annotations

import random

import pytest

from kropinaflat import MultiPoly, ParseError, parse, to_text
from test_poly import random_poly


def test_three_term_cubic():
    p = parse("y1^3 + y1*y2^2 + y2^3", 2)
    assert len(p.terms) == 3
    assert p.homogeneous_y_degree() == 3


def test_distribution():
    p = parse("(1+x1)*y1^3", 2)
    assert p == parse("y1^3 + x1*y1^3", 2)
    assert len(p.terms) == 2


def test_rational_literals():
    assert parse("1/3*y1 + 2", 2) == parse("2 + 1/3*y1", 2)
    assert parse("5/10", 2) == parse("1/2", 2)


def test_precedence_and_unary_minus():
    assert parse("-y1^2", 2) == -(parse("y1", 2) ** 2)
    assert parse("2*y1^2 + 1", 2) == parse("1 + 2*y1^2", 2)
    assert parse("(1 + y1)^2", 2) == parse("1 + 2*y1 + y1^2", 2)
    assert parse("- -y1", 2) == parse("y1", 2)


def test_zero():
    assert parse("0", 2).is_zero()
    assert to_text(MultiPoly.zero(2)) == "0"


def test_fractional_exponent_rejected():
    with pytest.raises(ParseError) as err:
        parse("y1^(1/2)", 2)
    assert "fractional exponent" in str(err.value)
    assert err.value.position > 0


def test_negative_exponent_rejected():
    for text in ("y1^-2", "y1^(-2)"):
        with pytest.raises(ParseError) as err:
            parse(text, 2)
        assert "negative exponent" in str(err.value)


def test_unknown_variable_rejected():
    for text, fragment in (("x3 + y1", "x3"), ("z1", "z1"), ("foo*y1", "foo")):
        with pytest.raises(ParseError) as err:
            parse(text, 2)
        assert "unknown variable" in str(err.value)
        assert fragment in str(err.value)


def test_syntax_errors_have_positions():
    cases = ["y1 +", "(y1", "y1/3", "3/y1", "y1 y2", "*y1", "y1^(2"]
    for text in cases:
        with pytest.raises(ParseError) as err:
            parse(text, 2)
        assert err.value.position >= 1


def test_integer_exponent_in_parens_allowed():
    assert parse("y1^(2)", 2) == parse("y1^2", 2)
    assert parse("y1^(4/2)", 2) == parse("y1^2", 2)


def test_parse_print_roundtrip_random():
    rng = random.Random(29)
    for _ in range(120):
        n = rng.choice([2, 3])
        p = random_poly(rng, n)
        assert parse(to_text(p), n) == p
