"""
Complex root finding for integer polynomials
Simultaneous Aberth-Ehrlich iteration in mpmath, seeded on perturbed circles whose radii
come from the upper convex hull of (i, log|a_i|)
"""

import itertools
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath as mp
import numpy as np

from ..config import config
from ..utils.logger import Logger, PerformanceTimer
from .errors import ConvergenceError, PreconditionError

logger = Logger("padyn.roots")

# fixed seed: identical inputs give identical roots
SEED = 20170613
MIN_DPS = 30


def _upper_hull(points: Sequence[Tuple[int, float]]) -> List[Tuple[int, float]]:
    hull: List[Tuple[int, float]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or below the chord
            if (y2 - y1) * (pt[0] - x1) <= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def initial_approximations(coeffs: Sequence[int]) -> List[mp.mpc]:
    """
    Starting points for simultaneous iteration (ascending integer coefficients)
    Each hull edge from i to j contributes j - i points on a circle of radius
    (|a_i| / |a_j|)^(1/(j-i)); angles carry a deterministic random offset
    """
    points = [(i, math.log(abs(c))) for i, c in enumerate(coeffs) if c != 0]
    hull = _upper_hull(points)
    rng = np.random.default_rng(SEED)
    starts: List[mp.mpc] = []
    for (i, yi), (j, yj) in zip(hull, hull[1:]):
        count = j - i
        log_radius = (yi - yj) / count
        angles = 2 * np.pi * np.arange(count) / count + rng.uniform(0.1, 0.5)
        jitter = rng.uniform(-0.05, 0.05, count)
        for angle, wobble in zip(angles, jitter):
            radius = mp.exp(mp.mpf(log_radius) + mp.mpf(float(wobble)))
            starts.append(radius * mp.expj(mp.mpf(float(angle))))
    return starts


def _normalized_residual(desc: list, abs_desc: list, z: mp.mpc) -> mp.mpf:
    value = mp.polyval(desc, z)
    scale = mp.polyval(abs_desc, abs(z))
    return abs(value) / scale if scale else mp.mpf(0)


def complex_roots(coeffs: Sequence[int], tolerance: Optional[float] = None,
                  max_iterations: Optional[int] = None, dps: Optional[int] = None) -> List[mp.mpc]:
    """
    All complex roots, with multiplicity, of a polynomial with integer coefficients

    Args:
        coeffs: ascending coefficients, a_0 != 0 not required; leading coefficient nonzero
        tolerance: bound on |a(z)| / sum |a_i||z|^i at every returned root
        max_iterations: sweeps of the simultaneous iteration
        dps: working decimal precision (default grows with coefficient size)

    Returns:
        list of mpmath complex numbers (valid outside the precision context as plain values)

    Raises:
        ConvergenceError: residual tolerance not met within max_iterations
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise PreconditionError("root finding needs a polynomial of degree >= 1")

    tolerance = config.ROOT_TOLERANCE if tolerance is None else tolerance
    max_iterations = config.ROOT_MAX_ITERATIONS if max_iterations is None else max_iterations
    digits = max(len(str(abs(c))) for c in coeffs)
    dps = dps or max(MIN_DPS, 20 + digits // 4)

    zero_roots = 0
    while coeffs[zero_roots] == 0:
        zero_roots += 1
    coeffs = coeffs[zero_roots:]
    roots: List[mp.mpc] = [mp.mpc(0)] * zero_roots
    if len(coeffs) == 1:
        return roots

    with PerformanceTimer(f"Aberth iteration (degree {len(coeffs) - 1})", logger), mp.workdps(dps):
        desc = [mp.mpf(c) for c in reversed(coeffs)]
        abs_desc = [abs(c) for c in desc]
        tol = mp.mpf(tolerance)
        z = initial_approximations(coeffs)
        n = len(z)
        done = [False] * n
        worst = mp.inf

        for iteration in range(max_iterations):
            for k in range(n):
                if done[k]:
                    continue
                value, slope = mp.polyval(desc, z[k], derivative=True)
                if value == 0 or _normalized_residual(desc, abs_desc, z[k]) <= tol:
                    done[k] = True
                    continue
                repulsion = mp.mpc(0)
                for j in range(n):
                    if j != k:
                        gap = z[k] - z[j]
                        if gap == 0:
                            gap = mp.mpf(10) ** (-dps // 2) * (1 + abs(z[k]))
                        repulsion += 1 / gap
                if slope == 0:
                    z[k] += mp.mpf(10) ** (-dps // 3) * (1 + abs(z[k]))
                    continue
                ratio = value / slope
                z[k] -= ratio / (1 - ratio * repulsion)

            if all(done):
                worst = max(_normalized_residual(desc, abs_desc, r) for r in z)
                if worst <= tol:
                    logger.debug(f"Aberth converged: degree {n}, {iteration + 1} sweeps, dps {dps}")
                    return roots + list(z)
                done = [_normalized_residual(desc, abs_desc, r) <= tol for r in z]

        worst = max(_normalized_residual(desc, abs_desc, r) for r in z)
        raise ConvergenceError(
            f"root finder did not reach residual {tolerance:g} for degree {n} "
            f"in {max_iterations} sweeps",
            residual=float(worst)
        )


def log_mahler_measure_squarefree(coeffs: Sequence[int], tolerance: Optional[float] = None) -> float:
    """log|a_n| + sum log+|rho| over the complex roots of a squarefree polynomial"""
    coeffs = [c for c in coeffs]
    lead = abs(coeffs[-1])
    if len(coeffs) == 2:
        return math.log(max(abs(coeffs[0]), lead))
    roots = complex_roots(coeffs, tolerance=tolerance)
    total = mp.log(lead)
    for rho in roots:
        size = abs(rho)
        if size > 1:
            total += mp.log(size)
    return float(total)


def rational_roots(a) -> List[Fraction]:
    """
    Sorted distinct rational roots of a nonzero integer polynomial

    Complex roots of the squarefree part are computed at a precision fine enough to
    resolve multiples of 1/lc; every candidate k/lc is then checked exactly.
    """
    from .poly import squarefree_part

    if a.is_zero():
        raise PreconditionError("rational roots of the zero polynomial")
    if a.degree <= 0:
        return []
    s = squarefree_part(a)
    found = set()
    if s[0] == 0:
        found.add(Fraction(0))
        s = type(s)(s.coeffs[1:])
    if s.degree >= 1:
        lead = s.lc
        dps = MIN_DPS + len(str(s.height())) + len(str(lead))
        if s.degree == 1:
            found.add(Fraction(-s[0], s[1]))
        else:
            with mp.workdps(dps):
                desc = [mp.mpf(c) for c in reversed(s.coeffs)]
                for rho in complex_roots(s.coeffs, dps=dps):
                    if abs(mp.im(rho)) > mp.mpf("1e-6") * max(1, abs(rho)):
                        continue
                    x = mp.re(rho)
                    # Newton polish on the real axis before rounding
                    for _ in range(8):
                        value, slope = mp.polyval(desc, x, derivative=True)
                        if slope == 0:
                            break
                        x -= value / slope
                    k = int(mp.nint(x * lead))
                    for candidate in (k, k - 1, k + 1):
                        if s.evaluate_homogeneous(candidate, lead) == 0:
                            found.add(Fraction(candidate, lead))
    return sorted(found)


def _divisors(n: int) -> List[int]:
    small = [k for k in range(1, math.isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def proper_factor(a):
    """
    A factor of degree 1..deg(a)//2 of a primitive squarefree integer polynomial, or None
    when a is irreducible over Q

    An integer factor b is lc(b) times the product of (x - rho) over some of the roots of a,
    with lc(b) dividing lc(a). Each root subset and leading coefficient is rounded to integer
    coefficients and kept only if it divides a exactly.
    """
    from .poly import IntPolynomial, divides

    n = a.degree
    if n <= 1:
        return None
    if a[0] == 0:
        return IntPolynomial.x()
    if n <= 3:
        found = rational_roots(a)
        return IntPolynomial.from_roots(found[:1]) if found else None

    # coefficients of any factor stay below 2^n |a|_2
    bound = 2 ** n * (math.isqrt(sum(c * c for c in a.coeffs)) + 1)
    dps = MIN_DPS + 2 * len(str(bound))
    leads = _divisors(abs(a.lc))
    with mp.workdps(dps):
        roots = complex_roots(a.coeffs, tolerance=10.0 ** -(dps // 2), dps=dps)
        half = mp.mpf("0.25")
        for k in range(1, n // 2 + 1):
            for subset in itertools.combinations(roots, k):
                monic = [mp.mpc(1)]  # ascending
                for rho in subset:
                    monic = [-rho * monic[0]] + [monic[i - 1] - rho * monic[i]
                                                  for i in range(1, len(monic))] + [monic[-1]]
                for lead in leads:
                    coeffs = []
                    for z in monic:
                        w = lead * z
                        nearest = mp.nint(mp.re(w))
                        if abs(mp.im(w)) > half or abs(mp.re(w) - nearest) > half:
                            break
                        coeffs.append(int(nearest))
                    else:
                        b = IntPolynomial(tuple(coeffs))
                        if b.degree == k and divides(b, a):
                            return b.primitive_part()
    return None
