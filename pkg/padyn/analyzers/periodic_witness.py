"""
Periodic witness route
A polynomial Phi_n that does not split over Q_p exhibits a periodic point outside the
field of totally p-adic numbers
"""

from ..core.dynamics import exact_period_points
from ..core.errors import ResourceLimitError
from ..core.padic import splits_completely
from .base_certificate import BaseCertificate, CertificateResult, Verdict


class PeriodicWitnessCertificate(BaseCertificate):
    verdict = Verdict.PERIODIC_WITNESS

    def initialize_parameters(self):
        self.checked_periods = []

    def examine(self) -> CertificateResult:
        for n in range(1, self.max_period + 1):
            try:
                phi = exact_period_points(self.map, n)
            except ResourceLimitError as e:
                e.last_completed = n - 1
                raise
            splits = phi.degree <= 0 or splits_completely(phi, self.prime)
            self.checked_periods.append((n, phi, splits))
            self.logger.debug(f"Phi_{n} = {phi}: splits over Q_{self.prime} = {splits}")
            if not splits:
                return self.certify((n, phi), checked_periods=list(self.checked_periods))
        return self.abstain(checked_periods=list(self.checked_periods))
