"""
padyn Analyzers Module
Certificate routes for the height-gap conditions of a map, Lattes maps, the
height-gap search and backward-orbit height profiles
"""

from .base_certificate import BaseCertificate, CertificateResult, Verdict
from .good_reduction import GoodReductionCertificate
from .periodic_witness import PeriodicWitnessCertificate
from .preperiodic_witness import PreperiodicWitnessCertificate

# Available certificates registry; order is verdict priority
AVAILABLE_CERTIFICATES = {
    "good_reduction": GoodReductionCertificate,
    "periodic_witness": PeriodicWitnessCertificate,
    "preperiodic_witness": PreperiodicWitnessCertificate,
}

from .manager import CertificateManager, ConditionReport, check_theorem_conditions  # noqa: E402
from .lattes import (WeierstrassCurve, double_point, doubling_x, elliptic_canonical_height,  # noqa: E402
                     lattes_map)
from .gap_search import (CandidateRecord, GapReport, enumerate_candidates,  # noqa: E402
                         narkiewicz_gap_search, root_set_cycles)
from .profile import ProfileRow, backward_orbit_height_profile  # noqa: E402

__all__ = [
    'BaseCertificate',
    'CertificateResult',
    'Verdict',
    'GoodReductionCertificate',
    'PeriodicWitnessCertificate',
    'PreperiodicWitnessCertificate',
    'AVAILABLE_CERTIFICATES',
    'CertificateManager',
    'ConditionReport',
    'check_theorem_conditions',
    'WeierstrassCurve',
    'lattes_map',
    'double_point',
    'doubling_x',
    'elliptic_canonical_height',
    'CandidateRecord',
    'GapReport',
    'enumerate_candidates',
    'narkiewicz_gap_search',
    'root_set_cycles',
    'ProfileRow',
    'backward_orbit_height_profile',
]
