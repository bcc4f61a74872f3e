"""
padyn Core Module
Exact arithmetic over Q and Q_p, polynomials, rational maps, periodic points and heights
"""

from .arith import INFINITY, as_rational, is_prime, prime_factors, vp
from .errors import (ConvergenceError, DegenerateMapError, ExpressionSyntaxError, InputError,
                     NotPeriodicError, NotPrimeError, OrbitThroughInfinityError, PadynError,
                     PreconditionError, ResourceLimitError, SingularCurveError)
from .poly import IntPolynomial, RatPolynomial, discriminant, resultant, squarefree_part
from .ratmap import (POINT_AT_INFINITY, Finite, Infinity, RationalMap, apply, good_reduction,
                     iterate, normalize)
from .padic import NewtonPolygon, RootCount, count_qp_roots, newton_polygon, splits_completely
from .heights import (HeightEstimate, HeightMethod, canonical_height, height_bound_constant,
                      mahler_height, weil_height)
from .dynamics import (BackwardOrbit, MultiplierReport, backward_orbit, exact_period_points,
                       is_preperiodic_rational, multiplier, period_polynomial)

__all__ = [
    'INFINITY', 'as_rational', 'is_prime', 'prime_factors', 'vp',
    'PadynError', 'InputError', 'NotPrimeError', 'PreconditionError', 'DegenerateMapError',
    'SingularCurveError', 'ExpressionSyntaxError', 'NotPeriodicError',
    'OrbitThroughInfinityError', 'ResourceLimitError', 'ConvergenceError',
    'IntPolynomial', 'RatPolynomial', 'discriminant', 'resultant', 'squarefree_part',
    'POINT_AT_INFINITY', 'Finite', 'Infinity', 'RationalMap', 'apply', 'good_reduction',
    'iterate', 'normalize',
    'NewtonPolygon', 'RootCount', 'count_qp_roots', 'newton_polygon', 'splits_completely',
    'HeightEstimate', 'HeightMethod', 'canonical_height', 'height_bound_constant',
    'mahler_height', 'weil_height',
    'BackwardOrbit', 'MultiplierReport', 'backward_orbit', 'exact_period_points',
    'is_preperiodic_rational', 'multiplier', 'period_polynomial',
]
