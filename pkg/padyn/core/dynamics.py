"""
Periodic and preperiodic points of rational maps over Q
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from ..utils.logger import Logger
from .arith import as_rational, padic_abs, require_prime
from .errors import NotPeriodicError, OrbitThroughInfinityError, PreconditionError
from .heights import height_bound_constant, weil_height
from .padic import splits_completely
from .poly import IntPolynomial, exact_quotient, poly_gcd, rational_roots, squarefree_part
from .ratmap import (Finite, Infinity, ProjPoint, RationalMap, apply, as_point,
                     derivative_at, iterate)

logger = Logger("padyn.dynamics")

# float comparisons against the preperiodic height cutoff
CUTOFF_MARGIN = 1e-12


class Classification(Enum):
    REPELLING = "repelling"
    INDIFFERENT = "indifferent"
    ATTRACTING = "attracting"


@dataclass(frozen=True)
class MultiplierReport:
    point: Fraction
    period: int
    multiplier: Fraction
    prime: int
    classification: Classification


@dataclass(frozen=True)
class BackwardOrbit:
    """
    levels[k - 1] vanishes exactly on the finite points of f^(-k)(base_point);
    splits[k - 1][p] says whether that level splits completely over Q_p
    """
    base_point: Fraction
    levels: Tuple[IntPolynomial, ...]
    splits: Tuple[Dict[int, bool], ...] = field(default_factory=tuple)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, k: int) -> IntPolynomial:
        return self.levels[k - 1]


def classify(multiplier: Fraction, p: int) -> Classification:
    size = padic_abs(multiplier, p)
    if size > 1:
        return Classification.REPELLING
    if size == 1:
        return Classification.INDIFFERENT
    return Classification.ATTRACTING


@lru_cache(maxsize=128)
def period_polynomial(f: RationalMap, n: int) -> IntPolynomial:
    """H_n = primitive part of g_n - x h_n: the finite points of period dividing n"""
    if n < 1:
        raise PreconditionError("period must be at least 1")
    fn = iterate(f, n)
    H = fn.g - IntPolynomial.x() * fn.h
    if H.is_zero():
        raise PreconditionError(f"f^{n} is the identity; every point is periodic")
    return H.primitive_part()


def _divisors(n: int) -> List[int]:
    return [m for m in range(1, n) if n % m == 0]


@lru_cache(maxsize=128)
def exact_period_points(f: RationalMap, n: int) -> IntPolynomial:
    """
    Squarefree polynomial Phi_n vanishing exactly on the finite points of exact period n
    (squarefree part of H_n with every divisor level removed by gcd)
    """
    phi = squarefree_part(period_polynomial(f, n))
    for m in _divisors(n):
        if phi.degree <= 0:
            break
        common = poly_gcd(phi, squarefree_part(period_polynomial(f, m)))
        if common.degree > 0:
            phi = exact_quotient(phi, common)
    return phi if phi.degree > 0 else IntPolynomial.constant(1)


def rational_periodic_points(f: RationalMap, n: int) -> List[Fraction]:
    """Rational points of exact period n, sorted"""
    return rational_roots(exact_period_points(f, n))


def orbit(f: RationalMap, point, steps: int) -> List[ProjPoint]:
    """[P, f(P), ..., f^steps(P)]"""
    current = as_point(point)
    out = [current]
    for _ in range(steps):
        current = apply(f, current)
        out.append(current)
    return out


def multiplier(f: RationalMap, alpha: Union[int, Fraction], n: int, p: int) -> MultiplierReport:
    """
    (f^n)'(alpha) by the chain rule, classified by its p-adic absolute value

    Raises:
        NotPeriodicError: H_n(alpha) != 0
        OrbitThroughInfinityError: the cycle contains infinity
    """
    require_prime(p)
    alpha = as_rational(alpha)
    if period_polynomial(f, n)(alpha) != 0:
        raise NotPeriodicError(f"{alpha} is not a point of period dividing {n} for {f}")

    lam = Fraction(1)
    current: ProjPoint = Finite(alpha)
    for _ in range(n):
        if isinstance(current, Infinity):
            raise OrbitThroughInfinityError(f"the orbit of {alpha} passes through infinity")
        lam *= derivative_at(f, current.value)
        current = apply(f, current)
    return MultiplierReport(point=alpha, period=n, multiplier=lam, prime=p,
                            classification=classify(lam, p))


def preimage_polynomial(f: RationalMap, alpha0: Union[int, Fraction], k: int) -> IntPolynomial:
    """Primitive part of q g_k - p h_k for alpha0 = p/q: the finite k-th preimages"""
    if k < 0:
        raise PreconditionError("preimage level must be non-negative")
    alpha0 = as_rational(alpha0)
    fk = iterate(f, k)
    return (fk.g * alpha0.denominator - fk.h * alpha0.numerator).primitive_part()


def backward_orbit(f: RationalMap, alpha0: Union[int, Fraction], depth: int,
                   primes: Sequence[int]) -> BackwardOrbit:
    """Preimage levels 1..depth with, per prime, whether the level splits over Q_p"""
    if depth < 1:
        raise PreconditionError("backward orbit depth must be at least 1")
    for p in primes:
        require_prime(p)
    alpha0 = as_rational(alpha0)
    levels, splits = [], []
    for k in range(1, depth + 1):
        level = squarefree_part(preimage_polynomial(f, alpha0, k))
        levels.append(level)
        splits.append({p: splits_completely(level, p, projective_degree=f.d ** k) for p in primes})
        logger.debug(f"backward level {k}: degree {level.degree}, splits {splits[-1]}")
    return BackwardOrbit(base_point=alpha0, levels=tuple(levels), splits=tuple(splits))


def is_preperiodic_rational(f: RationalMap, point) -> bool:
    """
    Walk the orbit: preperiodic on the first revisit, not preperiodic as soon as a point
    has Weil height above C_f/(d-1) (then h_hat > 0)
    """
    cutoff = height_bound_constant(f).canonical_gap
    cutoff = cutoff * (1 + CUTOFF_MARGIN) + CUTOFF_MARGIN
    seen = set()
    current = as_point(point)
    while current not in seen:
        if weil_height(current).value > cutoff:
            return False
        seen.add(current)
        current = apply(f, current)
    return True
