"""
Height profile of a backward orbit
Level k of f^(-k)(alpha0) has average canonical height h_hat(alpha0)/d^k, so a
non-preperiodic alpha0 yields algebraic points of arbitrarily small positive height
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from ..core.arith import as_rational
from ..core.dynamics import is_preperiodic_rational, preimage_polynomial
from ..core.errors import PreconditionError
from ..core.heights import (HeightEstimate, canonical_height, height_bound_constant,
                            mahler_height)
from ..core.poly import IntPolynomial, squarefree_part
from ..core.ratmap import RationalMap
from ..utils.logger import Logger

logger = Logger("padyn.profile")

EXPECTED_EPSILON = 1e-8
PROFILE_TOLERANCE = 1e-6


@dataclass(frozen=True)
class ProfileRow:
    level: int
    polynomial: IntPolynomial
    measured: HeightEstimate
    expected: float

    @property
    def discrepancy(self) -> float:
        return abs(self.measured.value - self.expected)


def backward_orbit_height_profile(f: RationalMap, alpha0: Union[int, str, Fraction], depth: int,
                                  tolerance: Optional[float] = None) -> List[ProfileRow]:
    """
    Rows k = 0..depth: the Mahler height of the squarefree k-th preimage polynomial next to
    h_hat_f(alpha0)/d^k (all zeros for a preperiodic alpha0)

    Every measured value is within C_f/(d-1) + tolerance of the expected one.
    """
    if depth < 0:
        raise PreconditionError("profile depth must be non-negative")
    alpha0 = as_rational(alpha0)
    tolerance = PROFILE_TOLERANCE if tolerance is None else tolerance
    bound = height_bound_constant(f).canonical_gap + tolerance

    if is_preperiodic_rational(f, alpha0):
        base = 0.0
    else:
        base = canonical_height(f, alpha0, EXPECTED_EPSILON).value

    rows = []
    for k in range(depth + 1):
        level = squarefree_part(preimage_polynomial(f, alpha0, k))
        measured = mahler_height(level)
        row = ProfileRow(level=k, polynomial=level, measured=measured, expected=base / f.d ** k)
        if row.discrepancy > bound:
            logger.info(f"level {k}: discrepancy {row.discrepancy:.3g} above {bound:.3g}")
        rows.append(row)
    return rows
