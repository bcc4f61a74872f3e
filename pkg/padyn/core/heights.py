"""
Heights for padyn
Weil heights, the height-comparison constant C_f, certified canonical heights of rational
points, and Mahler-measure heights of algebraic points given by integer polynomials
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

import mpmath as mp

from ..config import config
from ..utils.logger import Logger, PerformanceTimer
from .errors import OrbitThroughInfinityError, PreconditionError, ResourceLimitError
from .poly import (IntPolynomial, exact_quotient, homogeneous_cofactors, interpolate,
                   resultant, squarefree_part)
from .ratmap import (POINT_AT_INFINITY, Infinity, ProjPoint, RationalMap, apply,
                     apply_homogeneous, as_point,
                     to_homogeneous)
from .roots import log_mahler_measure_squarefree

logger = Logger("padyn.heights")

# working precision for the final logarithms
LOG_DPS = 40
# relative rounding allowance on values returned as floats
FLOAT_SLACK = 2.0 ** -50
MIN_SLACK = 2.0 ** -60
MAX_DYADIC_BITS = 1 << 22


class HeightMethod(Enum):
    EXACT = "exact"
    CERTIFIED_ITERATE = "certified_iterate"
    MAHLER_NUMERIC = "mahler_numeric"


@dataclass(frozen=True)
class HeightEstimate:
    """
    Natural-log height with an error radius
    For exact and certified_iterate the true value lies in [value - error, value + error];
    for mahler_numeric the error is a numerical tolerance, not a proof
    """
    value: float
    error: float
    method: HeightMethod

    @property
    def lower(self) -> float:
        return self.value - self.error

    @property
    def upper(self) -> float:
        return self.value + self.error

    @property
    def is_certified(self) -> bool:
        return self.method is not HeightMethod.MAHLER_NUMERIC

    def scaled(self, factor: float) -> 'HeightEstimate':
        return HeightEstimate(self.value * factor, self.error * abs(factor), self.method)

    def in_base(self, base: float) -> 'HeightEstimate':
        """Same height measured with log base `base`"""
        return self.scaled(1.0 / math.log(base))


@dataclass(frozen=True)
class HeightConstant:
    """
    |h(f(P)) - d h(P)| <= C for every P
    upper: h(f(P)) - d h(P) <= upper; lower: d h(P) - h(f(P)) <= lower
    """
    map: RationalMap
    C: float
    upper: float
    lower: float
    coefficient_norm: int
    cofactor_norm: int

    @property
    def canonical_gap(self) -> float:
        """Bound C/(d-1) on |h_hat - h|"""
        return self.C / (self.map.d - 1)


def weil_height(point: ProjPoint) -> HeightEstimate:
    """log max(|p|, |q|) for reduced p/q; 0 at infinity"""
    x, y = to_homogeneous(as_point(point))
    return HeightEstimate(math.log(max(abs(x), abs(y))), 0.0, HeightMethod.EXACT)


@lru_cache(maxsize=128)
def height_bound_constant(f: RationalMap) -> HeightConstant:
    """
    C_f from l1 norms of the forms G, H and of the resultant cofactors

    With M = max(|x|, |y|) for a primitive lift and e = gcd(G(x, y), H(x, y)), e | Res:
        max(|G|, |H|) <= max(|G|_1, |H|_1) M^d
        |Res| M^(2d-1) <= (|A_i|_1 + |B_i|_1) M^(d-1) max(|G|, |H|)

    Raises:
        PreconditionError: degree 1
    """
    if f.d < 2:
        raise PreconditionError("height constants need a map of degree >= 2")
    norm = max(f.g.norm1(), f.h.norm1())
    a1, b1, a2, b2 = homogeneous_cofactors(f.g, f.h, f.d)
    cofactor = max(a1.norm1() + b1.norm1(), a2.norm1() + b2.norm1())
    upper = math.log(norm)
    lower = math.log(cofactor)
    # absorb float rounding in the logarithms
    C = max(upper, lower, 0.0) * (1 + 1e-12)
    logger.debug(f"height constant for {f}: upper={upper:.6g} lower={lower:.6g} C={C:.6g}")
    return HeightConstant(map=f, C=C, upper=upper, lower=lower,
                          coefficient_norm=norm, cofactor_norm=cofactor)


def truncation_steps(constant: HeightConstant, tolerance: float) -> int:
    """Smallest N with C / (d^N (d - 1)) <= tolerance"""
    d, C = constant.map.d, constant.C
    if C == 0:
        return 0
    N = max(0, math.ceil(math.log(C / (tolerance * (d - 1))) / math.log(d)))
    while C / (d ** N * (d - 1)) > tolerance:
        N += 1
    return N


def _round_div(num: int, den: int) -> int:
    """num / den rounded to nearest (den > 0)"""
    return (2 * num + den) // (2 * den)


def _dyadic_orbit_log(f: RationalMap, constant: HeightConstant, x: int, y: int,
                      steps: int, bits: int) -> Optional[Tuple[mp.mpf, float]]:
    """
    log max(|x_N|, |y_N|) for the primitive lift after `steps` more iterations, tracked as
    2^s (U, V) with U, V of about `bits` bits and relative error delta; the gcd removed at
    every step is recovered exactly from residues modulo |Res|^(steps + 1).

    Returns (log value, absolute error of the log), or None when `bits` is too small.
    """
    d = f.d
    res = abs(f.resultant)
    modulus = res ** (steps + 1) if res > 1 else None
    xr, yr = (x % modulus, y % modulus) if modulus else (0, 0)

    shift = max(abs(x).bit_length(), abs(y).bit_length()) - bits
    if shift > 0:
        U, V, s, delta = _round_div(x, 1 << shift), _round_div(y, 1 << shift), shift, 2.0 ** -bits
    else:
        U, V, s, delta = x, y, 0, 0.0

    norm = constant.coefficient_norm
    for _ in range(steps):
        GU, HU = apply_homogeneous(f, U, V)
        if modulus:
            Gr = f.g.evaluate_homogeneous(xr, yr, d) % modulus
            Hr = f.h.evaluate_homogeneous(xr, yr, d) % modulus
            e = math.gcd(math.gcd(Gr, Hr), res)
            modulus //= e
            xr, yr = (Gr // e) % modulus, (Hr // e) % modulus
        else:
            e = 1

        m = max(abs(U), abs(V))
        m_new = max(abs(GU), abs(HU))
        # error of G(U + a, V + b) against G(U, V), relative to m_new
        amplification = norm * math.exp(d * math.log(m) - math.log(m_new)) * (1 + 1e-9)
        delta_step = amplification * math.expm1(d * math.log1p(delta))
        if delta_step >= 0.25:
            return None

        t = max(0, (m_new // e).bit_length() - bits)
        den = e << t
        U, V = _round_div(GU, den), _round_div(HU, den)
        s = d * s + t
        m_round = max(abs(U), abs(V))
        if m_round == 0:
            return None
        delta = delta_step * (1 + 1.0 / m_round) + 0.5 / m_round if t or e > 1 else delta_step

    if delta >= 0.25:
        return None
    with mp.workdps(LOG_DPS):
        value = s * mp.log(2) + mp.log(mp.mpf(max(abs(U), abs(V))))
    return value, -math.log1p(-delta)


def _orbit_log_height(f: RationalMap, constant: HeightConstant, point: ProjPoint, steps: int,
                      exact_bits: int, target_error: float) -> Tuple[mp.mpf, float]:
    """log max(|x_N|, |y_N|) for the primitive lift of f^N(P), with its absolute error"""
    x, y = to_homogeneous(point)
    n = 0
    while n < steps and max(abs(x), abs(y)).bit_length() <= exact_bits:
        X, Y = apply_homogeneous(f, x, y)
        e = math.gcd(X, Y)
        x, y = X // e, Y // e
        n += 1
    if n == steps:
        with mp.workdps(LOG_DPS):
            return mp.log(mp.mpf(max(abs(x), abs(y)))), 0.0

    remaining = steps - n
    growth = f.d * constant.coefficient_norm * constant.cofactor_norm / max(abs(f.resultant), 1)
    bits_per_step = max(1, math.ceil(math.log2(max(growth, 2.0))) + 1)
    bits = 64 + remaining * bits_per_step + max(0, math.ceil(-math.log2(target_error)))
    logger.debug(f"switching to dyadic orbit tracking after {n} exact steps "
                 f"({remaining} left, {bits} bits)")
    while bits <= MAX_DYADIC_BITS:
        outcome = _dyadic_orbit_log(f, constant, x, y, remaining, bits)
        if outcome is not None and outcome[1] <= target_error:
            return outcome
        bits *= 2
    raise ResourceLimitError(
        f"dyadic orbit tracking needs more than {MAX_DYADIC_BITS} bits",
        attempted=bits, limit=MAX_DYADIC_BITS
    )


def canonical_height(f: RationalMap, point, eps: float, max_steps: Optional[int] = None,
                     exact_bits: Optional[int] = None) -> HeightEstimate:
    """
    Certified canonical height h_hat_f(P) = lim h(f^n(P)) / d^n

    Half of eps pays for truncation (C / (d^N (d-1)) <= eps/2), the rest for arithmetic.

    Raises:
        PreconditionError: eps <= 0 or degree 1
        ResourceLimitError: N above PADYN_MAX_HEIGHT_STEPS; minimal_epsilon carries the
            smallest tolerance reachable under the cap
    """
    if not eps > 0:
        raise PreconditionError(f"epsilon must be positive, got {eps}")
    point = as_point(point)
    constant = height_bound_constant(f)
    d, C = f.d, constant.C
    limit = config.MAX_HEIGHT_STEPS if max_steps is None else max_steps
    exact_bits = config.EXACT_BITS if exact_bits is None else exact_bits

    N = truncation_steps(constant, eps / 2)
    if N > limit:
        raise ResourceLimitError(
            f"canonical height to within {eps:g} needs {N} orbit steps, above the cap {limit}",
            attempted=N, limit=limit, minimal_epsilon=2 * C / (d ** limit * (d - 1))
        )

    truncation = C / (d ** N * (d - 1)) if C else 0.0
    with PerformanceTimer(f"canonical height ({N} steps)", logger):
        log_height, log_error = _orbit_log_height(f, constant, point, N, exact_bits,
                                                  target_error=(eps / 4) * d ** N)
    with mp.workdps(LOG_DPS):
        value = float(log_height / mp.mpf(d) ** N)
    error = truncation + log_error / d ** N + FLOAT_SLACK * abs(value) + MIN_SLACK
    if error > eps:
        raise ResourceLimitError(
            f"requested tolerance {eps:g} is below the attainable {error:.3g}",
            attempted=N, limit=limit, minimal_epsilon=error
        )
    return HeightEstimate(value, error, HeightMethod.CERTIFIED_ITERATE)


def log_mahler_measure(a: IntPolynomial, tolerance: Optional[float] = None) -> float:
    """log M(a), multiplicities included: content times squarefree layers"""
    if a.degree < 1:
        raise PreconditionError("Mahler measure needs degree >= 1")
    total = math.log(a.content())
    rest = a.primitive_part()
    while rest.degree > 0:
        layer = squarefree_part(rest)
        total += log_mahler_measure_squarefree(layer.coeffs, tolerance=tolerance)
        rest = exact_quotient(rest, layer)
    return total


def mahler_height(a: IntPolynomial, tolerance: Optional[float] = None) -> HeightEstimate:
    """
    (1/deg a)(log|lc| + sum log+|rho|): h(root) for an irreducible a, the degree-weighted
    average of the root heights otherwise
    """
    tolerance = config.ROOT_TOLERANCE if tolerance is None else tolerance
    value = log_mahler_measure(a, tolerance=tolerance) / a.degree
    return HeightEstimate(value, tolerance, HeightMethod.MAHLER_NUMERIC)


def mahler_lower_bound(a: IntPolynomial) -> float:
    """(1/n) log max_i |a_i| / binom(n, i), a lower bound for the Mahler height"""
    n = a.degree
    if n < 1:
        raise PreconditionError("Mahler bound needs degree >= 1")
    best = max(math.log(abs(c)) - math.log(math.comb(n, i)) for i, c in enumerate(a.coeffs) if c)
    return max(0.0, best / n * (1 - 1e-12))


def _pushforward_step(f: RationalMap, m: IntPolynomial) -> IntPolynomial:
    """Primitive part of Res_y(m(y), x h(y) - g(y)), by evaluation and interpolation"""
    D, d = m.degree, f.d
    samples = []
    for j in range(D + 1):
        q = f.h * j - f.g
        # pad q to formal degree d: Res_{D,d}(m, q) = lc(m)^(d - deg q) Res(m, q)
        samples.append((j, m.lc ** (d - q.degree) * resultant(m, q)))
    pushed, _ = interpolate(samples).clear_denominators()
    if pushed.degree < 1:
        raise OrbitThroughInfinityError(f"every root of {m} maps to infinity under {f}")
    return pushed.primitive_part()


def pushforward_polynomial(f: RationalMap, m: IntPolynomial, N: int,
                           max_steps: Optional[int] = None) -> IntPolynomial:
    """
    Polynomial whose roots, with multiplicity, are f^N applied to the roots of m
    (roots sent to infinity drop out)

    Raises:
        ResourceLimitError: N above PADYN_MAX_PUSHFORWARD_STEPS
        OrbitThroughInfinityError: all roots reach infinity
    """
    limit = config.MAX_PUSHFORWARD_STEPS if max_steps is None else max_steps
    if N > limit:
        raise ResourceLimitError(
            f"pushforward by {N} steps exceeds the cap {limit}", attempted=N, limit=limit
        )
    if m.degree < 1:
        raise PreconditionError("pushforward needs a polynomial of degree >= 1")
    current = m.primitive_part()
    for _ in range(N):
        current = _pushforward_step(f, current)
    return current


def algebraic_canonical_height(f: RationalMap, m: IntPolynomial, eps: float,
                               max_steps: Optional[int] = None) -> HeightEstimate:
    """
    Average canonical height of the roots of m: log M(f^N_* m) / (deg m d^N)

    Truncation is certified (C / (d^N (d-1)) <= eps/2); the Mahler measure is numeric.

    Raises:
        OrbitThroughInfinityError: a root reaches infinity and infinity is not fixed
    """
    if not eps > 0:
        raise PreconditionError(f"epsilon must be positive, got {eps}")
    constant = height_bound_constant(f)
    d = f.d
    N = truncation_steps(constant, eps / 2)
    limit = config.MAX_PUSHFORWARD_STEPS if max_steps is None else max_steps
    if N > limit:
        raise ResourceLimitError(
            f"algebraic height to within {eps:g} needs {N} pushforward steps, above the cap {limit}",
            attempted=N, limit=limit,
            minimal_epsilon=2 * constant.C / (d ** limit * (d - 1))
        )
    infinity_fixed = isinstance(apply(f, POINT_AT_INFINITY), Infinity)
    current = m.primitive_part()
    degree = current.degree
    for _ in range(N):
        pushed = _pushforward_step(f, current)
        if pushed.degree < current.degree and not infinity_fixed:
            raise OrbitThroughInfinityError(
                f"a root of {m} reaches infinity, which {f} does not fix"
            )
        current = pushed

    tolerance = config.ROOT_TOLERANCE
    value = log_mahler_measure(current, tolerance=tolerance) / (degree * d ** N)
    truncation = constant.C / (d ** N * (d - 1)) if constant.C else 0.0
    return HeightEstimate(value, truncation + tolerance, HeightMethod.MAHLER_NUMERIC)
