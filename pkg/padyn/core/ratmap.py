"""
Rational self-maps of the projective line over Q
Normalization, iteration, projective evaluation, reduction type and the p-adic chordal metric
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import List, Optional, Tuple, Union

from ..config import config
from ..utils.logger import Logger, PerformanceTimer
from .arith import (ExtendedInteger, as_rational, int_valuation, next_prime,
                    padic_abs, primes_up_to, require_prime)
from .errors import DegenerateMapError, OrbitThroughInfinityError, ResourceLimitError
from .poly import IntPolynomial, RatPolynomial, homogeneous_resultant, resultant

logger = Logger("padyn.ratmap")


@dataclass(frozen=True)
class Finite:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'value', as_rational(self.value))

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class Infinity:
    def __str__(self):
        return "Infinity"


POINT_AT_INFINITY = Infinity()
ProjPoint = Union[Finite, Infinity]


def as_point(value: Union[ProjPoint, int, str, Fraction, None]) -> ProjPoint:
    """Accepts points, rationals, and None / 'Infinity' / 'inf' for the point at infinity"""
    if isinstance(value, (Finite, Infinity)):
        return value
    if value is None or (isinstance(value, str) and value.strip().lower() in ("infinity", "inf", "oo")):
        return POINT_AT_INFINITY
    return Finite(as_rational(value))


def to_homogeneous(point: ProjPoint) -> Tuple[int, int]:
    """Primitive integer lift (x, y) with y >= 0; infinity is (1, 0)"""
    if isinstance(point, Infinity):
        return 1, 0
    return point.value.numerator, point.value.denominator


def from_homogeneous(x: int, y: int) -> ProjPoint:
    if y == 0:
        if x == 0:
            raise ArithmeticError("(0, 0) is not a projective point")
        return POINT_AT_INFINITY
    return Finite(Fraction(x, y))


@dataclass(frozen=True)
class RationalMap:
    """
    f = g/h with integer g, h of joint content 1, no common root, lc(h) > 0
    d = max(deg g, deg h); build instances with normalize()
    """
    g: IntPolynomial
    h: IntPolynomial
    d: int

    @property
    def degree(self) -> int:
        return self.d

    @property
    def is_polynomial(self) -> bool:
        return self.h.degree == 0

    @cached_property
    def resultant(self) -> int:
        """Resultant of the degree-d homogenisations of g and h"""
        return homogeneous_resultant(self.g, self.h, self.d)

    def __call__(self, point):
        return apply(self, as_point(point))

    def __str__(self) -> str:
        if self.is_polynomial and self.h.lc == 1:
            return str(self.g)
        return f"({self.g})/({self.h})"


@dataclass(frozen=True)
class ReductionReport:
    prime: int
    resultant_valuation: ExtendedInteger
    good: bool


def _as_rat_poly(poly: Union[IntPolynomial, RatPolynomial]) -> RatPolynomial:
    return poly.to_rational() if isinstance(poly, IntPolynomial) else poly


def normalize(g_raw: Union[IntPolynomial, RatPolynomial],
              h_raw: Union[IntPolynomial, RatPolynomial]) -> RationalMap:
    """
    Normalized map g_raw/h_raw

    Raises:
        DegenerateMapError: both zero, zero denominator, constant map, or a shared root
    """
    g_raw, h_raw = _as_rat_poly(g_raw), _as_rat_poly(h_raw)
    if g_raw.is_zero() and h_raw.is_zero():
        raise DegenerateMapError("numerator and denominator are both zero", g_raw, h_raw)
    if h_raw.is_zero():
        raise DegenerateMapError("denominator is zero", g_raw, h_raw)

    multiplier = reduce(math.lcm, (c.denominator for c in g_raw.coeffs + h_raw.coeffs), 1)
    g = IntPolynomial(tuple(int(c * multiplier) for c in g_raw.coeffs))
    h = IntPolynomial(tuple(int(c * multiplier) for c in h_raw.coeffs))
    content = math.gcd(g.content(), h.content())
    if h.lc < 0:
        content = -content
    g, h = g.scale_down(content), h.scale_down(content)

    d = max(g.degree, h.degree)
    if d < 1:
        raise DegenerateMapError("constant map has degree 0", g, h)
    if resultant(g, h) == 0:
        raise DegenerateMapError("numerator and denominator share a root", g, h)
    return RationalMap(g, h, d)


def identity_map() -> RationalMap:
    return RationalMap(IntPolynomial.x(), IntPolynomial.constant(1), 1)


def _substitute(outer: RationalMap, g: IntPolynomial, h: IntPolynomial) -> Tuple[IntPolynomial, IntPolynomial]:
    """(G(g, h), H(g, h)) for the degree-d forms G, H of outer"""
    d = outer.d
    g_powers = [IntPolynomial.constant(1)]
    h_powers = [IntPolynomial.constant(1)]
    for _ in range(d):
        g_powers.append(g_powers[-1] * g)
        h_powers.append(h_powers[-1] * h)
    num, den = IntPolynomial(), IntPolynomial()
    for i in range(d + 1):
        a, b = outer.g[i], outer.h[i]
        if a or b:
            term = g_powers[i] * h_powers[d - i]
            num = num + term * a
            den = den + term * b
    return num, den


def compose(outer: RationalMap, inner: RationalMap) -> RationalMap:
    """outer o inner"""
    num, den = _substitute(outer, inner.g, inner.h)
    return normalize(num, den)


@lru_cache(maxsize=256)
def _iterate_cached(f: RationalMap, n: int) -> RationalMap:
    if n == 0:
        return identity_map()
    if n == 1:
        return f
    previous = _iterate_cached(f, n - 1)
    num, den = _substitute(f, previous.g, previous.h)
    return normalize(num, den)


def iterate(f: RationalMap, n: int, max_degree: Optional[int] = None) -> RationalMap:
    """
    n-th iterate f^(n), normalized; n = 0 is the identity

    Raises:
        ResourceLimitError: d^n above the degree cap (PADYN_MAX_DEGREE)
    """
    if n < 0:
        raise ValueError("iterate count must be non-negative")
    limit = config.MAX_DEGREE if max_degree is None else max_degree
    attempted = f.d ** n
    if attempted > limit:
        raise ResourceLimitError(
            f"iterate {n} of a degree-{f.d} map has degree {attempted}, above the cap {limit}",
            attempted=attempted, limit=limit
        )
    if n >= 4:
        with PerformanceTimer(f"iterate n={n} (degree {attempted})", logger):
            return _iterate_cached(f, n)
    return _iterate_cached(f, n)


def apply_homogeneous(f: RationalMap, x: int, y: int) -> Tuple[int, int]:
    """(G(x, y), H(x, y)) without removing the common factor"""
    return f.g.evaluate_homogeneous(x, y, f.d), f.h.evaluate_homogeneous(x, y, f.d)


def apply(f: RationalMap, point: ProjPoint) -> ProjPoint:
    """f(P); a zero of h maps to infinity, infinity maps by leading coefficients"""
    x, y = to_homogeneous(point)
    X, Y = apply_homogeneous(f, x, y)
    if Y < 0:
        X, Y = -X, -Y
    e = math.gcd(X, Y)
    return from_homogeneous(X // e, Y // e)


def derivative_at(f: RationalMap, x: Union[int, Fraction]) -> Fraction:
    """f'(x) = (g'h - gh') / h^2 at a finite point with h(x) != 0"""
    x = as_rational(x)
    hx = f.h(x)
    if hx == 0:
        raise OrbitThroughInfinityError(f"{x} is a pole of {f}")
    return (f.g.derivative()(x) * hx - f.g(x) * f.h.derivative()(x)) / (hx * hx)


def good_reduction(f: RationalMap, p: int) -> ReductionReport:
    """Good reduction at p iff p does not divide the resultant of the homogenisations"""
    require_prime(p)
    v = int_valuation(f.resultant, p)
    return ReductionReport(prime=p, resultant_valuation=v, good=(v == 0))


def bad_primes(f: RationalMap, bound: int) -> List[int]:
    """Primes p <= bound at which f has bad reduction"""
    return [p for p in primes_up_to(bound) if f.resultant % p == 0]


def first_good_prime(f: RationalMap, start: int = 2) -> int:
    p = next_prime(start)
    while f.resultant % p == 0:
        p = next_prime(p + 1)
    return p


def chordal_distance(P: ProjPoint, Q: ProjPoint, p: int) -> Fraction:
    """
    p-adic chordal metric on P^1(Q)
        rho(x, y) = |x - y|_p / (max(1, |x|_p) max(1, |y|_p))
        rho(x, infinity) = 1 / max(1, |x|_p)
    """
    require_prime(p)
    if isinstance(P, Infinity) and isinstance(Q, Infinity):
        return Fraction(0)
    if isinstance(P, Infinity):
        P, Q = Q, P
    if isinstance(Q, Infinity):
        return 1 / max(Fraction(1), padic_abs(P.value, p))
    return padic_abs(P.value - Q.value, p) / (
        max(Fraction(1), padic_abs(P.value, p)) * max(Fraction(1), padic_abs(Q.value, p)))
