"""
Good reduction route
Good reduction at p empties the p-adic Julia set, which certifies the map outright
"""

from ..core.ratmap import good_reduction
from .base_certificate import BaseCertificate, CertificateResult, Verdict


class GoodReductionCertificate(BaseCertificate):
    verdict = Verdict.GOOD_REDUCTION

    def initialize_parameters(self):
        pass

    def examine(self) -> CertificateResult:
        report = good_reduction(self.map, self.prime)
        if report.good:
            return self.certify(report, resultant_valuation=report.resultant_valuation)
        return self.abstain(resultant_valuation=report.resultant_valuation, report=report)
