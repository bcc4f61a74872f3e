"""
Preperiodic witness route (polynomial maps)
A preimage level of a rational periodic point that does not split over Q_p exhibits a
preperiodic point outside the field of totally p-adic numbers
"""

from ..core.dynamics import preimage_polynomial, rational_periodic_points
from ..core.errors import ResourceLimitError
from ..core.padic import splits_completely
from ..core.poly import squarefree_part
from .base_certificate import BaseCertificate, CertificateResult, Verdict


class PreperiodicWitnessCertificate(BaseCertificate):
    verdict = Verdict.PREPERIODIC_WITNESS

    def initialize_parameters(self):
        self.depth = int(self.settings.get("preperiodic_depth", 0))

    def is_applicable(self) -> bool:
        return self.depth > 0 and self.map.is_polynomial

    def examine(self) -> CertificateResult:
        if not self.is_applicable():
            return self.abstain(depth=self.depth)
        for n in range(1, self.max_period + 1):
            try:
                points = rational_periodic_points(self.map, n)
                for alpha in points:
                    for k in range(1, self.depth + 1):
                        level = squarefree_part(preimage_polynomial(self.map, alpha, k))
                        if not splits_completely(level, self.prime):
                            return self.certify((alpha, k, level), period=n)
            except ResourceLimitError as e:
                e.last_completed = n - 1
                raise
        return self.abstain(depth=self.depth)
