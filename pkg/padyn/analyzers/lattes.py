"""
Duplication Lattes maps
The x-coordinate of [2]P on y^2 = x^3 + a x + b is a degree-4 rational function of x(P)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..core.arith import as_rational
from ..core.errors import PreconditionError, SingularCurveError
from ..core.heights import HeightEstimate, canonical_height
from ..core.poly import RatPolynomial
from ..core.ratmap import RationalMap, normalize
from ..utils.logger import Logger

logger = Logger("padyn.lattes")

Number = Union[int, str, Fraction]
AffinePoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + a x + b over Q"""
    a: Fraction
    b: Fraction

    @classmethod
    def create(cls, a: Number, b: Number) -> 'WeierstrassCurve':
        curve = cls(as_rational(a), as_rational(b))
        if curve.discriminant_factor == 0:
            raise SingularCurveError(curve.a, curve.b)
        return curve

    @property
    def discriminant_factor(self) -> Fraction:
        """4a^3 + 27b^2; the discriminant is -16 times this"""
        return 4 * self.a ** 3 + 27 * self.b ** 2

    def contains(self, point: AffinePoint) -> bool:
        x, y = point
        return y * y == x ** 3 + self.a * x + self.b

    def doubling_numerator(self) -> RatPolynomial:
        """x^4 - 2a x^2 - 8b x + a^2"""
        a, b = self.a, self.b
        return RatPolynomial((a * a, -8 * b, -2 * a, Fraction(0), Fraction(1)))

    def doubling_denominator(self) -> RatPolynomial:
        """4(x^3 + a x + b)"""
        return RatPolynomial((4 * self.b, 4 * self.a, Fraction(0), Fraction(4)))


def lattes_map(a: Number, b: Number) -> RationalMap:
    """
    f with f(x(P)) = x([2]P) on y^2 = x^3 + a x + b

    Raises:
        SingularCurveError: 4a^3 + 27b^2 = 0
    """
    curve = WeierstrassCurve.create(a, b)
    f = normalize(curve.doubling_numerator(), curve.doubling_denominator())
    logger.debug(f"Lattes map for a={curve.a}, b={curve.b}: {f}")
    return f


def doubling_x(a: Number, b: Number, x: Number) -> Optional[Fraction]:
    """
    x([2]P) from x(P) by the group law: ((3x^2 + a)^2 - 8x(x^3 + ax + b)) / (4(x^3 + ax + b))
    None when P is 2-torsion ([2]P is the point at infinity)
    """
    curve = WeierstrassCurve.create(a, b)
    x = as_rational(x)
    rhs = x ** 3 + curve.a * x + curve.b
    if rhs == 0:
        return None
    return ((3 * x * x + curve.a) ** 2 - 8 * x * rhs) / (4 * rhs)


def double_point(a: Number, b: Number, point: AffinePoint) -> Optional[AffinePoint]:
    """
    [2]P by the tangent line, lambda = (3x^2 + a) / (2y)
    None when y = 0 ([2]P is the point at infinity)
    """
    curve = WeierstrassCurve.create(a, b)
    x, y = as_rational(point[0]), as_rational(point[1])
    if not curve.contains((x, y)):
        raise PreconditionError(f"({x}, {y}) is not on y^2 = x^3 + {curve.a}x + {curve.b}")
    if y == 0:
        return None
    lam = (3 * x * x + curve.a) / (2 * y)
    x3 = lam * lam - 2 * x
    y3 = lam * (x - x3) - y
    return x3, y3


def elliptic_canonical_height(a: Number, b: Number, x: Number, eps: float) -> HeightEstimate:
    """
    Neron-Tate height of a point with x-coordinate x: h_hat_f(x) = 2 h_hat_E(P) for the
    duplication map f, so a 2 eps bound on h_hat_f gives an eps bound here
    """
    f = lattes_map(a, b)
    return canonical_height(f, as_rational(x), 2 * eps).scaled(0.5)
