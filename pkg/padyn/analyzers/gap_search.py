"""
Height-gap search over totally p-adic algebraic numbers
Enumerates small integer polynomials that split over Q_p, estimates the canonical height of
their roots and separates preperiodic root sets from the smallest positive height found
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

import pandas as pd

from ..config import config
from ..core.arith import require_prime
from ..core.dynamics import is_preperiodic_rational
from ..core.errors import OrbitThroughInfinityError, PadynError, PreconditionError
from ..core.heights import (HeightEstimate, algebraic_canonical_height, height_bound_constant,
                            mahler_lower_bound, pushforward_polynomial)
from ..core.padic import splits_completely
from ..core.poly import IntPolynomial, is_irreducible, squarefree_part
from ..core.ratmap import POINT_AT_INFINITY, RationalMap
from ..utils.logger import Logger, PerformanceTimer

logger = Logger("padyn.gap_search")

CSV_COLUMNS = ["minpoly", "degree", "splits", "preperiodic", "hhat_value", "hhat_error"]


@dataclass(frozen=True)
class CandidateRecord:
    """One examined polynomial; estimate is None when it does not split or the height failed"""
    minpoly: IntPolynomial
    degree: int
    splits: bool
    preperiodic: bool = False
    estimate: Optional[HeightEstimate] = None
    diagnostic: str = ""


@dataclass
class GapReport:
    map: RationalMap
    prime: int
    degree_bound: int
    coefficient_bound: int
    epsilon: float
    candidates_examined: int = 0
    preperiodic_found: List[IntPolynomial] = field(default_factory=list)
    min_positive_height: Optional[Tuple[HeightEstimate, IntPolynomial]] = None
    candidates: List[CandidateRecord] = field(default_factory=list)

    @property
    def diagnostics(self) -> List[str]:
        return [f"{c.minpoly}: {c.diagnostic}" for c in self.candidates if c.diagnostic]

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for c in self.candidates:
            rows.append({
                "minpoly": str(c.minpoly),
                "degree": c.degree,
                "splits": str(c.splits).lower(),
                "preperiodic": str(c.preperiodic).lower(),
                "hhat_value": format(c.estimate.value, ".12g") if c.estimate else "",
                "hhat_error": format(c.estimate.error, ".12g") if c.estimate else "",
            })
        return pd.DataFrame(rows, columns=CSV_COLUMNS)

    def to_csv(self, path: Optional[Union[str, Path]] = None) -> str:
        """CSV table of all candidates; also written to path when given"""
        text = self.to_frame().to_csv(index=False, lineterminator="\n")
        if path is not None:
            Path(path).write_text(text, encoding="utf-8")
        return text


def enumerate_candidates(degree_bound: int, coeff_bound: int) -> Iterator[IntPolynomial]:
    """
    Minimal polynomials in deterministic order: degree, then leading coefficient
    1..max(B, 1), then the lower coefficients c_0..c_(k-1) lexicographically

    Only primitive polynomials irreducible over Q are yielded, so a candidate's averaged
    height is the height of each of its roots.
    """
    for k in range(1, degree_bound + 1):
        for lead in range(1, max(coeff_bound, 1) + 1):
            for lower in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=k):
                m = IntPolynomial(lower + (lead,))
                if m.content() == 1 and is_irreducible(m):
                    yield m


def root_set_cycles(f: RationalMap, m: IntPolynomial, max_steps: Optional[int] = None) -> Optional[bool]:
    """
    Follow the root set of m under f as squarefree polynomials

    Returns:
        True once a root set repeats (every root is preperiodic), False as soon as the
        average root height exceeds C_f/(d-1) (some root has positive canonical height),
        None when neither happens within the step cap
    """
    limit = config.ORBIT_CYCLE_STEPS if max_steps is None else max_steps
    cutoff = height_bound_constant(f).canonical_gap
    current = squarefree_part(m.primitive_part())
    seen = {current}
    for _ in range(limit):
        try:
            current = squarefree_part(pushforward_polynomial(f, current, 1))
        except OrbitThroughInfinityError:
            return is_preperiodic_rational(f, POINT_AT_INFINITY)
        if mahler_lower_bound(current) > cutoff:
            return False
        if current in seen:
            return True
        seen.add(current)
    return None


def examine_candidate(f: RationalMap, p: int, eps: float, m: IntPolynomial) -> CandidateRecord:
    """Split test, height estimate and orbit check for one candidate; errors are recorded"""
    if not splits_completely(m, p):
        return CandidateRecord(minpoly=m, degree=m.degree, splits=False)
    try:
        estimate = algebraic_canonical_height(f, m, eps)
        preperiodic = False
        diagnostic = ""
        if estimate.value <= eps:
            cycles = root_set_cycles(f, m)
            preperiodic = cycles is True
            if cycles is None:
                diagnostic = "small height but no cycle found within the step cap"
        return CandidateRecord(minpoly=m, degree=m.degree, splits=True,
                               preperiodic=preperiodic, estimate=estimate, diagnostic=diagnostic)
    except PadynError as e:
        return CandidateRecord(minpoly=m, degree=m.degree, splits=True, diagnostic=str(e))


def narkiewicz_gap_search(f: RationalMap, p: int, degree_bound: int, coeff_bound: int,
                          eps: float, workers: Optional[int] = None) -> GapReport:
    """
    Sweep all primitive irreducible m with deg m <= degree_bound and |coefficients| <=
    coeff_bound that split completely over Q_p

    Preperiodic witnesses need a height estimate <= eps and a cycling root set; the minimal
    positive height is the smallest estimate with value - error > 0 (first found wins ties).
    Candidate failures are recorded, never raised.
    """
    require_prime(p)
    if degree_bound < 1:
        raise PreconditionError("degree bound must be at least 1")
    if coeff_bound < 0:
        raise PreconditionError("coefficient bound must be non-negative")
    if not eps > 0:
        raise PreconditionError(f"epsilon must be positive, got {eps}")
    workers = config.WORKERS if workers is None else workers

    candidates = list(enumerate_candidates(degree_bound, coeff_bound))
    report = GapReport(map=f, prime=p, degree_bound=degree_bound,
                       coefficient_bound=coeff_bound, epsilon=eps)
    examine = partial(examine_candidate, f, p, eps)

    with PerformanceTimer(f"gap search over {len(candidates)} candidates", logger):
        if workers > 1:
            # mpmath keeps its precision in a process-wide context, so fan out to processes
            with ProcessPoolExecutor(max_workers=workers) as pool:
                records = list(pool.map(examine, candidates, chunksize=8))
        else:
            records = [examine(m) for m in candidates]

    best_value = math.inf
    for record in records:
        if record.preperiodic:
            report.preperiodic_found.append(record.minpoly)
        elif record.estimate is not None and record.estimate.lower > 0:
            if record.estimate.value < best_value:
                best_value = record.estimate.value
                report.min_positive_height = (record.estimate, record.minpoly)
    report.candidates = records
    report.candidates_examined = len(records)

    found = report.min_positive_height
    logger.info(
        f"📊 gap search for {f} at p={p}: {len(records)} candidates, "
        f"{len(report.preperiodic_found)} preperiodic, "
        f"min positive height {found[0].value:.6g} at {found[1]}" if found else
        f"📊 gap search for {f} at p={p}: {len(records)} candidates, no positive height"
    )
    return report
