"""
Base Certificate Class for padyn
Common interface for the routes that certify the Bogomolov-type conditions of a map
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..core.ratmap import RationalMap
from ..utils.logger import Logger


class Verdict(Enum):
    """Certificate outcomes; absence of a certificate is never a refutation"""
    GOOD_REDUCTION = "BogomolovCertified_GoodReduction"
    PERIODIC_WITNESS = "BogomolovCertified_PeriodicWitness"
    PREPERIODIC_WITNESS = "BogomolovCertified_PreperiodicWitness"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class CertificateResult:
    """Outcome of one certificate route"""
    route: str
    certified: bool
    verdict: Verdict
    witness: Optional[Any] = None
    metadata: Dict[str, Any] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)


class BaseCertificate(ABC):
    """
    Abstract base class for certificate routes
    A route inspects (f, p) up to the requested period and either certifies or abstains
    """

    verdict: Verdict = Verdict.INCONCLUSIVE

    def __init__(self, f: RationalMap, p: int, max_period: int, settings: Dict[str, Any]):
        self.map = f
        self.prime = p
        self.max_period = max_period
        self.settings = settings
        self.name = self.__class__.__name__
        self.logger = Logger(f"padyn.analyzers.{self.name}")
        self.initialize_parameters()

    @abstractmethod
    def initialize_parameters(self):
        """Read route-specific settings"""
        pass

    @abstractmethod
    def examine(self) -> CertificateResult:
        """
        Run the route

        Returns:
            CertificateResult; certified=False means the route found nothing, not that the
            condition fails
        """
        pass

    def is_applicable(self) -> bool:
        return True

    def abstain(self, reason: str = "", **metadata) -> CertificateResult:
        result = CertificateResult(route=self.name, certified=False,
                                   verdict=Verdict.INCONCLUSIVE, metadata=metadata)
        if reason:
            result.diagnostics.append(reason)
        return result

    def certify(self, witness: Any = None, **metadata) -> CertificateResult:
        self.logger.info(f"{self.name}: certified {self.map} at p={self.prime}")
        return CertificateResult(route=self.name, certified=True, verdict=self.verdict,
                                 witness=witness, metadata=metadata)
