"""Shared fixtures: the suite maps and a seeded random source"""

import random
from fractions import Fraction

import pytest

from padyn.analyzers.lattes import lattes_map
from padyn.cli.parser import parse_map
from padyn.core.poly import IntPolynomial


def poly(*coeffs) -> IntPolynomial:
    """Ascending coefficients"""
    return IntPolynomial(tuple(coeffs))


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """Uniform-ish rational p/q with |p|, q <= bound"""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


@pytest.fixture
def rng():
    return random.Random(20250101)


@pytest.fixture(scope="session")
def square_map():
    return parse_map("x^2")


@pytest.fixture(scope="session")
def shifted_square_map():
    return parse_map("x^2+1")


@pytest.fixture(scope="session")
def example_map():
    """(x^2 - x)/6: bad reduction exactly at 2 and 3"""
    return parse_map("(x^2-x)/6")


@pytest.fixture(scope="session")
def lattes_01():
    """Duplication on y^2 = x^3 + 1"""
    return lattes_map(0, 1)


@pytest.fixture(scope="session")
def suite_maps(square_map, shifted_square_map, example_map, lattes_01):
    return {
        "x^2": square_map,
        "x^2+1": shifted_square_map,
        "(x^2-x)/6": example_map,
        "lattes(0,1)": lattes_01,
    }
