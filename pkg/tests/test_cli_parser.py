from fractions import Fraction

import pytest

from conftest import poly
from padyn.cli.parser import (parse_int_list, parse_map, parse_point, parse_polynomial,
                              parse_rational, tokenize)
from padyn.config import config
from padyn.core.errors import (DegenerateMapError, ExpressionSyntaxError, InputError,
                               ResourceLimitError)
from padyn.core.ratmap import POINT_AT_INFINITY, Finite

ROUND_TRIP_CORPUS = [
    "x^2", "x^2+1", "x^2-1", "x^2-2", "(x^2-x)/6", "(x^2-x)/10", "(x^2-x)/30",
    "x^3", "x^3-x+1", "2*x^2+3", "-x^2+x", "x^2/2", "1/2*x^2-1/3", "3/4*x^3+x",
    "(x^4-8*x)/(4*x^3+4)", "1/x^2", "1/x", "(x+1)/(x-1)", "(2*x+1)/(x^2+1)", "x+1/x",
    "(x^2+1)/x", "(x^3-x)/(x^2+2)", "7*x^5-x", "x^5+x^4+x^3+x^2+x+1", "x^2-x-18",
    "-x", "2x", "x - 3", " ( x^2 - 1 ) / ( 3x + 2 ) ", "x^2+x+1/4*x", "5*x^2-5",
    "(6*x^2)/(4*x+2)", "x^2/(-3)", "-1/2*x^2+x", "x^7", "(x^3+1)/(x^3-1+x)",
    "x^2-3/2", "(100*x^2+1)/(7)", "x^4-2*x^3-5*x^2+6*x", "4*x^3+4*x", "x^3+2*x^2+x+1",
    "(x-2)/(x^2+x+1)", "x^2+0*x", "0*x^3+x^2+1", "x^2-x+1/6", "(x^2+x)/(2)",
    "12*x^2-7", "(x^2)/(x+1)", "x^9-x^8", "(-x^2+3)/(-2)",
]


def test_corpus_size():
    assert len(ROUND_TRIP_CORPUS) == 50


@pytest.mark.parametrize("text", ROUND_TRIP_CORPUS)
def test_round_trip(text):
    f = parse_map(text)
    assert parse_map(str(f)) == f


def test_parse_examples():
    f = parse_map("(x^2-x)/6")
    assert (f.g, f.h, f.d) == (poly(0, -1, 1), poly(6), 2)
    g = parse_map("x^2")
    assert (g.g, g.h) == (poly(0, 0, 1), poly(1))
    h = parse_map("1/2*x^2-1/3")
    # the trailing "/3" divides the whole numerator
    assert (h.g, h.h) == (poly(-2, 0, 1), poly(6))


def test_rational_coefficient_versus_denominator():
    assert parse_map("1/2*x^2").h == poly(2)
    assert parse_map("1/2x^2").h == poly(2)
    # a trailing "/ int" divides the whole numerator
    assert parse_map("x^2+1/2") == parse_map("(x^2+1)/2")


@pytest.mark.parametrize("text, offset", [
    ("x^", 2),
    ("x^2+", 4),
    ("(x^2", 4),
    ("x^2)", 3),
    ("x$2", 1),
    ("2*", 2),
    ("x/(", 3),
    ("", 0),
])
def test_syntax_errors(text, offset):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_map(text)
    assert info.value.offset == offset


def test_syntax_error_message():
    with pytest.raises(ExpressionSyntaxError, match="expected integer exponent, found end of input at offset 2"):
        parse_map("x^")


@pytest.mark.parametrize("text", ["3", "1/2", "x/0", "(x^2-x)/(x^2-1)", "0/x"])
def test_degenerate_maps(text):
    with pytest.raises(DegenerateMapError):
        parse_map(text)


def test_exponent_above_degree_cap(monkeypatch):
    monkeypatch.setattr(config, "MAX_DEGREE", 8)
    assert parse_map("x^8+1").d == 8
    with pytest.raises(ResourceLimitError) as info:
        parse_map("(x^9+1)/x")
    assert (info.value.attempted, info.value.limit) == (9, 8)
    with pytest.raises(ResourceLimitError):
        parse_polynomial("3*x^99999999999")


def test_tokenize():
    kinds = [t.kind for t in tokenize("2*x^3")]
    assert kinds == ["number", "symbol", "x", "symbol", "number", "end"]


def test_parse_polynomial():
    assert parse_polynomial("x^2-x-18") == poly(-18, -1, 1)
    assert parse_polynomial("1/2*x^2+1/3*x") == poly(0, 2, 3)
    with pytest.raises(InputError):
        parse_polynomial("0")


def test_parse_numbers_and_points():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(InputError):
        parse_rational("1/0")
    with pytest.raises(InputError):
        parse_rational("two")
    assert parse_point("Infinity") == POINT_AT_INFINITY
    assert parse_point("inf") == POINT_AT_INFINITY
    assert parse_point("2/3") == Finite(Fraction(2, 3))
    assert parse_int_list("2,3, 5") == [2, 3, 5]
    with pytest.raises(InputError):
        parse_int_list("2,x")
