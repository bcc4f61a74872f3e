"""
Certificate Manager for padyn
Runs every certificate route on (f, p), records witnesses and the multiplier census, and
settles the verdict
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple, Type

from ..core.dynamics import Classification, MultiplierReport, multiplier, rational_periodic_points
from ..core.errors import OrbitThroughInfinityError, PreconditionError, ResourceLimitError
from ..core.poly import IntPolynomial
from ..core.arith import ExtendedInteger, require_prime
from ..core.ratmap import RationalMap
from ..utils.logger import Logger, PerformanceTimer
from .base_certificate import BaseCertificate, CertificateResult, Verdict


@dataclass
class ConditionReport:
    """
    verdict GOOD_REDUCTION iff good_reduction; PERIODIC_WITNESS implies a stored Phi_n
    that does not split over Q_p
    """
    map: RationalMap
    prime: int
    max_period: int
    good_reduction: bool
    resultant_valuation: ExtendedInteger
    verdict: Verdict
    nonsplit_witness: Optional[Tuple[int, IntPolynomial]] = None
    preperiodic_witness: Optional[Tuple[Fraction, int, IntPolynomial]] = None
    multiplier_census: List[MultiplierReport] = field(default_factory=list)
    routes: List[CertificateResult] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)

    @property
    def repelling_points(self) -> List[MultiplierReport]:
        """Census entries with |multiplier|_p > 1; these lie in the p-adic Julia set"""
        return [r for r in self.multiplier_census if r.classification is Classification.REPELLING]

    @property
    def certified(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE


class CertificateManager:
    """
    Coordinates certificate routes
    Routes run in registry order and all of them run, so every available witness is reported
    """

    def __init__(self, f: RationalMap, p: int, max_period: int,
                 settings: Optional[Dict[str, Any]] = None,
                 certificates: Optional[Mapping[str, Type[BaseCertificate]]] = None):
        from . import AVAILABLE_CERTIFICATES

        require_prime(p)
        if max_period < 1:
            raise PreconditionError("max_period must be at least 1")
        self.map = f
        self.prime = p
        self.max_period = max_period
        self.settings = dict(settings or {})
        self.logger = Logger(__name__)
        self._certificates = dict(certificates or AVAILABLE_CERTIFICATES)
        self.logger.debug(f"🎯 Certificate manager ready: {', '.join(self._certificates)}")

    def get_available_certificates(self) -> List[str]:
        return list(self._certificates.keys())

    def run_route(self, name: str) -> CertificateResult:
        if name not in self._certificates:
            raise PreconditionError(f"Unknown certificate route: {name}")
        route = self._certificates[name](self.map, self.prime, self.max_period, self.settings)
        return route.examine()

    def multiplier_census(self, diagnostics: List[str]) -> List[MultiplierReport]:
        """Multipliers at the rational points of exact period 1..max_period"""
        census = []
        for n in range(1, self.max_period + 1):
            try:
                points = rational_periodic_points(self.map, n)
            except ResourceLimitError as e:
                e.last_completed = n - 1
                raise
            for alpha in points:
                try:
                    census.append(multiplier(self.map, alpha, n, self.prime))
                except OrbitThroughInfinityError as e:
                    diagnostics.append(f"multiplier skipped at {alpha} (period {n}): {e}")
        return census

    def run(self) -> ConditionReport:
        diagnostics: List[str] = []
        results: Dict[str, CertificateResult] = {}
        with PerformanceTimer(f"certificates for {self.map} at p={self.prime}", self.logger):
            for name in self._certificates:
                results[name] = self.run_route(name)
                diagnostics.extend(results[name].diagnostics)
            census = self.multiplier_census(diagnostics)

        reduction = results.get("good_reduction")
        periodic = results.get("periodic_witness")
        preperiodic = results.get("preperiodic_witness")

        verdict = Verdict.INCONCLUSIVE
        for result in results.values():
            if result.certified:
                verdict = result.verdict
                break

        report = ConditionReport(
            map=self.map,
            prime=self.prime,
            max_period=self.max_period,
            good_reduction=bool(reduction and reduction.certified),
            resultant_valuation=reduction.metadata.get("resultant_valuation") if reduction else None,
            verdict=verdict,
            nonsplit_witness=periodic.witness if periodic and periodic.certified else None,
            preperiodic_witness=preperiodic.witness if preperiodic and preperiodic.certified else None,
            multiplier_census=census,
            routes=list(results.values()),
            diagnostics=diagnostics,
        )
        if verdict is Verdict.INCONCLUSIVE:
            report.diagnostics.append(
                f"no certificate up to period {self.max_period}; this does not disprove the conditions"
            )
        self.logger.log_verdict(str(self.map), self.prime, verdict.value,
                                [r.route for r in report.routes if r.certified])
        return report


def check_theorem_conditions(f: RationalMap, p: int, max_period: int,
                             preperiodic_depth: int = 0) -> ConditionReport:
    """
    Sound, incomplete certificate check: good reduction, then a non-split Phi_n for
    n <= max_period, then (polynomial maps, preperiodic_depth > 0) a non-split preimage
    level of a rational periodic point
    """
    return CertificateManager(f, p, max_period,
                              settings={"preperiodic_depth": preperiodic_depth}).run()
