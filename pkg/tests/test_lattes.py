from fractions import Fraction

import pytest

from conftest import random_rational
from padyn.analyzers.lattes import (WeierstrassCurve, double_point, doubling_x,
                                    elliptic_canonical_height, lattes_map)
from padyn.core.errors import PreconditionError, SingularCurveError
from padyn.core.heights import canonical_height
from padyn.core.poly import RatPolynomial
from padyn.core.ratmap import POINT_AT_INFINITY, Finite

X = RatPolynomial((Fraction(0), Fraction(1)))


def group_law_fraction(a, b):
    """((3x^2 + a)^2 - 8x(x^3 + ax + b), 4(x^3 + ax + b)) built from polynomial arithmetic"""
    cubic = X * X * X + X * a + RatPolynomial((Fraction(b),))
    tangent = X * X * 3 + RatPolynomial((Fraction(a),))
    return tangent * tangent - X * cubic * 8, cubic * 4


def random_curve(rng):
    while True:
        a, b = rng.randint(-20, 20), rng.randint(-20, 20)
        if 4 * a ** 3 + 27 * b ** 2 != 0:
            return a, b


def test_lattes_map_matches_group_law(rng):
    for _ in range(20):
        a, b = random_curve(rng)
        f = lattes_map(a, b)
        numerator, denominator = group_law_fraction(a, b)
        assert f.d == 4
        assert f.g.to_rational() * denominator == f.h.to_rational() * numerator


def test_lattes_map_commutes_with_doubling(rng):
    for _ in range(20):
        x0, y0, a = (random_rational(rng, 9) for _ in range(3))
        b = y0 * y0 - x0 ** 3 - a * x0
        if 4 * a ** 3 + 27 * b ** 2 == 0 or y0 == 0:
            continue
        doubled = double_point(a, b, (x0, y0))
        assert lattes_map(a, b)(x0) == Finite(doubled[0])
        assert doubling_x(a, b, x0) == doubled[0]


def test_point_of_order_six(lattes_01):
    assert lattes_01(2) == Finite(0)
    assert double_point(0, 1, (2, 3)) == (Fraction(0), Fraction(1))
    assert double_point(0, 1, (0, 1)) == (Fraction(0), Fraction(-1))


def test_two_torsion_goes_to_infinity():
    f = lattes_map(-1, 0)
    assert f(0) == POINT_AT_INFINITY
    assert doubling_x(-1, 0, 0) is None
    assert double_point(-1, 0, (1, 0)) is None
    assert f(POINT_AT_INFINITY) == POINT_AT_INFINITY


@pytest.mark.parametrize("a, b", [(0, 0), (-3, 2), (-12, 16)])
def test_singular_curves_rejected(a, b):
    with pytest.raises(SingularCurveError):
        lattes_map(a, b)


def test_point_off_curve_rejected():
    with pytest.raises(PreconditionError):
        double_point(0, 1, (1, 1))


def test_curve_helpers():
    curve = WeierstrassCurve.create(0, 1)
    assert curve.discriminant_factor == 27
    assert curve.contains((Fraction(2), Fraction(3)))
    assert not curve.contains((Fraction(1), Fraction(1)))


def test_elliptic_height_torsion_and_nontorsion():
    assert abs(elliptic_canonical_height(0, 1, 2, 1e-6).value) <= 1e-6
    # (3, 5) on y^2 = x^3 - 2 has infinite order
    height = elliptic_canonical_height(0, -2, 3, 1e-6)
    assert height.lower > 0
    full = canonical_height(lattes_map(0, -2), 3, 1e-6)
    assert abs(2 * height.value - full.value) <= 2 * height.error + full.error
