"""
p-adic root machinery
Newton polygons, exact counting of Q_p-roots by residue recursion, splitting predicates
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..utils.logger import Logger
from .arith import INFINITY, int_valuation, require_prime
from .errors import PreconditionError
from .poly import IntPolynomial, discriminant, is_squarefree, squarefree_part

logger = Logger("padyn.padic")


@dataclass(frozen=True)
class NewtonPolygon:
    """
    Lower convex hull of (i, v_p(a_i)); a segment of slope -s and length l stands for
    l roots of valuation s in an algebraic closure of Q_p
    """
    segments: Tuple[Tuple[Fraction, int], ...]
    zero_root_multiplicity: int

    def root_valuations(self) -> List[Tuple[Fraction, int]]:
        """(valuation, multiplicity) pairs; a zero root is reported with valuation inf"""
        out = [(-slope, length) for slope, length in self.segments]
        if self.zero_root_multiplicity:
            out.append((INFINITY, self.zero_root_multiplicity))
        return out


@dataclass(frozen=True)
class RootCount:
    prime: int
    roots_in_Zp: int
    roots_outside_Zp: int

    @property
    def total(self) -> int:
        return self.roots_in_Zp + self.roots_outside_Zp


def newton_polygon(a: IntPolynomial, p: int) -> NewtonPolygon:
    require_prime(p)
    if a.is_zero():
        raise PreconditionError("Newton polygon of the zero polynomial")
    k = a.zero_root_multiplicity()
    points = [(i, int_valuation(c, p)) for i, c in enumerate(a.coeffs) if c != 0]

    hull: List[Tuple[int, int]] = []
    for x, y in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # middle point on or above the chord: not a vertex
            if (y2 - y1) * (x - x1) >= (y - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((x, y))

    segments = tuple(
        (Fraction(y2 - y1, x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    )
    return NewtonPolygon(segments=segments, zero_root_multiplicity=k)


def _strip_p_content(b: IntPolynomial, p: int) -> IntPolynomial:
    v = min(int_valuation(c, p) for c in b.coeffs if c != 0)
    return b.scale_down(p ** v) if v else b


def _residue_roots(b: IntPolynomial, p: int) -> List[int]:
    reduced = [c % p for c in b.coeffs]
    roots = []
    for r in range(p):
        acc = 0
        for c in reversed(reduced):
            acc = (acc * r + c) % p
        if acc == 0:
            roots.append(r)
    return roots


def _count_zp(b: IntPolynomial, p: int, depth: int, limit: int) -> int:
    """Roots of b in Z_p"""
    if depth > limit:
        raise PreconditionError(
            f"p-adic root recursion for p={p} exceeded depth {limit}; input is not squarefree"
        )
    b = _strip_p_content(b, p)
    if b.degree <= 0:
        return 0
    slope = b.derivative()
    count = 0
    for r in _residue_roots(b, p):
        if slope(r) % p != 0:
            count += 1  # Hensel lift is unique
        else:
            count += _count_zp(b.shift_scale(r, p), p, depth + 1, limit)
    return count


def count_qp_roots(a: IntPolynomial, p: int) -> RootCount:
    """
    Exact number of roots of a squarefree polynomial in Q_p

    Raises:
        PreconditionError: zero or non-squarefree input, or recursion depth exceeded
        NotPrimeError: p not prime
    """
    require_prime(p)
    if a.is_zero():
        raise PreconditionError("root count of the zero polynomial")
    if not is_squarefree(a):
        raise PreconditionError(f"count_qp_roots needs a squarefree polynomial, got {a}")
    a = a.primitive_part()
    if a.degree <= 0:
        return RootCount(prime=p, roots_in_Zp=0, roots_outside_Zp=0)

    in_zp = 0
    if a[0] == 0:
        in_zp += 1
        a = IntPolynomial(a.coeffs[1:])
    if a.degree <= 0:
        return RootCount(prime=p, roots_in_Zp=in_zp, roots_outside_Zp=0)

    disc = discriminant(a)
    limit = int_valuation(disc, p) + 1
    in_zp += _count_zp(a, p, 0, limit)
    # roots of negative valuation are reciprocals of roots of the reversal in pZ_p
    outside = _count_zp(a.reverse().shift_scale(0, p), p, 0, limit)
    logger.debug(f"count_qp_roots p={p} degree={a.degree}: {in_zp} in Z_p, {outside} outside")
    return RootCount(prime=p, roots_in_Zp=in_zp, roots_outside_Zp=outside)


def splits_completely(a: IntPolynomial, p: int, projective_degree: Optional[int] = None) -> bool:
    """
    Whether every root of a lies in Q_p
    With projective_degree, a is read as a binary form of that degree: the missing
    projective_degree - deg a roots sit at infinity, which is rational
    """
    require_prime(p)
    if a.is_zero():
        raise PreconditionError("splitting of the zero polynomial")
    at_infinity = 0
    if projective_degree is not None:
        if projective_degree < a.degree:
            raise PreconditionError(
                f"projective degree {projective_degree} is below the degree {a.degree} of {a}")
        at_infinity = projective_degree - a.degree
    s = squarefree_part(a)
    if s.degree <= 0:
        return True
    if at_infinity:
        logger.debug(f"{a}: {at_infinity} roots at infinity count as Q_{p}-rational")
    return count_qp_roots(s, p).total == s.degree


def is_totally_padic(minpoly: IntPolynomial, p: int) -> bool:
    """Roots of minpoly (all conjugates) lie in Q_p"""
    if minpoly.degree < 1:
        raise PreconditionError("a minimal polynomial has degree at least 1")
    if not is_squarefree(minpoly):
        raise PreconditionError(f"{minpoly} is not squarefree")
    return splits_completely(minpoly, p)
