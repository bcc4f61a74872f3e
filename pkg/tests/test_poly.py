from fractions import Fraction

import pytest

from conftest import poly
from padyn.core.errors import PreconditionError
from padyn.core.poly import (IntPolynomial, RatPolynomial, discriminant, divides, exact_quotient,
                             format_polynomial, homogeneous_cofactors, homogeneous_resultant,
                             interpolate, is_irreducible, is_squarefree, poly_gcd, pseudo_remainder,
                             rational_roots, resultant, squarefree_part)


def test_construction_strips_and_reports_degree():
    assert poly(1, 2, 0, 0).coeffs == (1, 2)
    assert IntPolynomial().degree == -1
    assert IntPolynomial.constant(5).degree == 0
    assert IntPolynomial.monomial(3, 2) == poly(0, 0, 0, 2)
    assert IntPolynomial.from_roots([2, Fraction(1, 3)]) == poly(2, -7, 3)


def test_arithmetic():
    a, b = poly(1, 1), poly(-1, 1)
    assert a * b == poly(-1, 0, 1)
    assert a + b == poly(0, 2)
    assert a - b == poly(2)
    assert a ** 3 == poly(1, 3, 3, 1)
    assert 3 * a == poly(3, 3)
    assert (a * b)(5) == 24
    assert poly(1, 1)(Fraction(1, 2)) == Fraction(3, 2)


def test_kronecker_multiplication_matches_schoolbook():
    a = IntPolynomial(tuple((-1) ** i * (i * 7919 % 1013) for i in range(60)))
    b = IntPolynomial(tuple((i * i - 40) for i in range(55)))
    expected = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            expected[i + j] += x * y
    assert (a * b).coeffs == tuple(expected)


def test_homogeneous_evaluation_and_reversal():
    a = poly(-18, -1, 1)
    assert a.evaluate_homogeneous(3, 2) == 9 - 6 - 72
    assert a.evaluate_homogeneous(1, 0, 3) == 0
    assert poly(1, 2, 3).reverse() == poly(3, 2, 1)
    assert poly(1, 2).reverse(3) == poly(0, 0, 2, 1)
    assert poly(0, 0, 5).zero_root_multiplicity() == 2


def test_compose_and_shift():
    a = poly(0, -1, 1)
    assert a.compose(poly(1, 1)) == poly(0, 1, 1)
    assert poly(-2, 0, 1).shift_scale(0, 2) == poly(-2, 0, 4)


def test_content_and_primitive_part():
    a = poly(-6, 0, -4)
    assert a.content() == 2
    assert a.primitive_part() == poly(3, 0, 2)
    assert poly(3, -4).norm1() == 7
    assert poly(3, -4).height() == 4


@pytest.mark.parametrize("coeffs, expected", [
    ((-18, -1, 1), "x^2-x-18"),
    ((0, 0, 0, 2), "2*x^3"),
    ((1,), "1"),
    ((), "0"),
    ((0, -1), "-x"),
])
def test_format_polynomial(coeffs, expected):
    assert format_polynomial(coeffs) == expected


@pytest.mark.parametrize("a, b, expected", [
    (poly(0, -1, 1), poly(6), 36),
    (poly(1, 0, 1), poly(1), 1),
    (poly(-2, 1), poly(-3, 1), -1),
    (poly(1, 0, 1), poly(-1, 0, 1), 4),
])
def test_resultant(a, b, expected):
    assert resultant(a, b) == expected


def test_resultant_matches_root_product():
    roots_a = [1, -2, 5]
    a = IntPolynomial.from_roots(roots_a) * 3
    b = poly(7, -1, 2, 1)
    product = 3 ** b.degree
    for r in roots_a:
        product *= b(r)
    assert resultant(a, b) == product
    assert resultant(b, a) == (-1) ** (a.degree * b.degree) * product


def test_resultant_zero_inputs():
    assert resultant(poly(1, 1), IntPolynomial()) == 0
    with pytest.raises(PreconditionError):
        resultant(IntPolynomial(), IntPolynomial())


@pytest.mark.parametrize("a, expected", [
    (poly(0, 0, 1), poly(0, 1)),
    (poly(1, -1) * poly(1, -1) * poly(2, 1), poly(-1, 1) * poly(2, 1)),
    (poly(1, 0, 1), poly(1, 0, 1)),
])
def test_squarefree_part(a, expected):
    assert squarefree_part(a) == expected.primitive_part()


def test_squarefree_predicates():
    assert is_squarefree(poly(1, 0, 1))
    assert not is_squarefree(poly(1, 2, 1))
    with pytest.raises(PreconditionError):
        squarefree_part(IntPolynomial())


@pytest.mark.parametrize("a, expected", [
    (poly(-18, -1, 1), 73),
    (poly(1, 0, 1), -4),
    (poly(-5, 1), 1),
    (poly(1, -1, 0, 1), -23),
])
def test_discriminant(a, expected):
    assert discriminant(a) == expected


def test_discriminant_rejects_constants():
    with pytest.raises(PreconditionError):
        discriminant(poly(3))


def test_gcd_and_division():
    a = poly(-1, 1) * poly(2, 1) * poly(0, 3)
    b = poly(-1, 1) * poly(5, 0, 1)
    assert poly_gcd(a, b) == poly(-1, 1)
    assert exact_quotient(a, poly(-1, 1)) == poly(0, 6, 3).primitive_part()
    assert divides(poly(2, 1), a)
    assert not divides(poly(3, 1), a)
    with pytest.raises(PreconditionError):
        exact_quotient(a, poly(3, 1))
    assert pseudo_remainder(poly(1, 0, 1), poly(1, 2)) == poly(5)


def test_homogeneous_resultant_detects_degree_drop():
    # 2x^2 + x over 1: reduction mod 2 drops the degree
    assert homogeneous_resultant(poly(0, 1, 2), poly(1), 2) % 2 == 0
    assert homogeneous_resultant(poly(1, 0, 1), poly(1), 2) == 1
    assert abs(homogeneous_resultant(poly(0, -1, 1), poly(6), 2)) == 36
    # both forms vanish at infinity
    assert homogeneous_resultant(poly(0, 1), poly(1), 2) == 0


@pytest.mark.parametrize("g, h, d", [
    (poly(0, -1, 1), poly(6), 2),
    (poly(1, 0, 1), poly(1), 2),
    (poly(0, -8, 0, 0, 1), poly(4, 0, 0, 4), 4),
    (poly(3, 0, 1), poly(0, 2, 1), 2),
])
def test_homogeneous_cofactors_identity(g, h, d):
    res = homogeneous_resultant(g, h, d)
    a1, b1, a2, b2 = homogeneous_cofactors(g, h, d)
    # dehomogenized: A1 g + B1 h = Res x^(2d-1), A2 g + B2 h = Res
    assert a1 * g + b1 * h == IntPolynomial.monomial(2 * d - 1, res)
    assert a2 * g + b2 * h == IntPolynomial.constant(res)


def test_interpolate():
    samples = [(j, j * j - 3 * j + 1) for j in range(3)]
    assert interpolate(samples) == RatPolynomial((1, -3, 1))


def test_rational_polynomial_helpers():
    a = RatPolynomial((Fraction(1, 2), 0, Fraction(3, 4)))
    cleared, multiplier = a.clear_denominators()
    assert cleared == poly(2, 0, 3)
    assert multiplier == 4
    q, r = poly(1, 0, 1).to_rational().divmod(poly(1, 2).to_rational())
    assert q * RatPolynomial((1, 2)) + r == RatPolynomial((1, 0, 1))


def test_rational_roots():
    a = IntPolynomial.from_roots([Fraction(3, 2), -7, 0, 0]) * poly(1, 0, 1)
    assert rational_roots(a) == [Fraction(-7), Fraction(0), Fraction(3, 2)]
    assert rational_roots(poly(-2, 0, 1)) == []
    assert rational_roots(poly(5)) == []


def random_poly(rng, max_degree: int = 5, bound: int = 9) -> IntPolynomial:
    degree = rng.randint(1, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    return IntPolynomial(tuple(coeffs) + (rng.choice([-1, 1]) * rng.randint(1, bound),))


def test_resultant_is_multiplicative(rng):
    for _ in range(40):
        a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
        assert resultant(a * c, b) == resultant(a, b) * resultant(c, b)


def test_resultant_antisymmetry(rng):
    for _ in range(40):
        a, b = random_poly(rng), random_poly(rng)
        assert resultant(b, a) == (-1) ** (a.degree * b.degree) * resultant(a, b)


def test_resultant_vanishes_exactly_on_common_factors(rng):
    for trial in range(40):
        a, b = random_poly(rng, 4), random_poly(rng, 4)
        if trial % 2:
            shared = random_poly(rng, 2)
            a, b = a * shared, b * shared
        common = poly_gcd(a, b).degree >= 1
        assert (resultant(a, b) == 0) == common
        if trial % 2:
            assert common


def test_squarefree_part_invariants(rng):
    for _ in range(30):
        a = random_poly(rng, 3)
        a = a * a * random_poly(rng, 2)
        s = squarefree_part(a)
        assert divides(s, a)
        assert poly_gcd(s, s.derivative()).degree == 0
        assert divides(a, s ** a.degree)
        assert s.lc > 0 and s.content() == 1


@pytest.mark.parametrize("a, expected", [
    (poly(-2, 1), True),
    (poly(1, 0, 1), True),
    (poly(-1, 0, 1), False),
    (poly(1, 0, 0, 0, 1), True),
    (poly(4, 0, 0, 0, 1), False),        # (x^2+2x+2)(x^2-2x+2), no rational root
    (poly(-2, 0, 0, 0, 1), True),
    (poly(3, 0, 7, 0, 2), False),        # (2x^2+1)(x^2+3)
    (poly(-1, -1, 0, 0, 0, 1), True),    # x^5-x-1
    (poly(0, 1, 0, 1), False),
    (poly(1, 2, 1), False),
    (poly(7), False),
])
def test_is_irreducible(a, expected):
    assert is_irreducible(a) is expected


def test_products_are_reducible(rng):
    for _ in range(15):
        a, b = random_poly(rng, 3, 5), random_poly(rng, 3, 5)
        assert not is_irreducible(a * b)
