from fractions import Fraction

import pytest

from conftest import poly
from padyn.analyzers import (AVAILABLE_CERTIFICATES, CertificateManager, Verdict,
                             check_theorem_conditions)
from padyn.cli.parser import parse_map
from padyn.core.dynamics import Classification
from padyn.core.errors import NotPrimeError, PreconditionError
from padyn.core.padic import splits_completely
from padyn.core.ratmap import good_reduction


def test_registry_order():
    assert list(AVAILABLE_CERTIFICATES) == ["good_reduction", "periodic_witness",
                                            "preperiodic_witness"]


def test_good_reduction_takes_priority(shifted_square_map):
    report = check_theorem_conditions(shifted_square_map, 3, 1)
    assert report.verdict is Verdict.GOOD_REDUCTION
    assert report.good_reduction
    assert report.resultant_valuation == 0
    # the periodic route runs too and finds the non-split fixed-point polynomial
    assert report.nonsplit_witness == (1, poly(1, -1, 1))
    assert report.certified


def test_square_map_good_at_seven(square_map):
    report = check_theorem_conditions(square_map, 7, 2)
    assert report.verdict is Verdict.GOOD_REDUCTION
    census = {r.point: r.classification for r in report.multiplier_census}
    assert census == {Fraction(0): Classification.ATTRACTING,
                      Fraction(1): Classification.INDIFFERENT}


def test_example_map_is_inconclusive_at_two(example_map):
    report = check_theorem_conditions(example_map, 2, 3)
    assert report.verdict is Verdict.INCONCLUSIVE
    assert not report.good_reduction
    assert report.resultant_valuation == 2
    assert report.nonsplit_witness is None
    assert not report.certified
    assert any("does not disprove" in line for line in report.diagnostics)
    periodic = next(r for r in report.routes if r.route == "PeriodicWitnessCertificate")
    assert [n for n, _, splits in periodic.metadata["checked_periods"] if splits] == [1, 2, 3]
    repelling = {r.point for r in report.repelling_points}
    assert {Fraction(0), Fraction(7)} <= repelling


def test_periodic_witness_with_bad_reduction(example_map):
    # Phi_2 = x^2 + 5x + 30 has discriminant -95, odd valuation at 5; 5 is a good prime,
    # so use the route directly
    manager = CertificateManager(example_map, 5, 2)
    result = manager.run_route("periodic_witness")
    assert result.certified
    assert result.witness == (2, poly(30, 5, 1))


def test_preperiodic_witness_route():
    f = parse_map("x^2-2")
    deep = CertificateManager(f, 3, 1, settings={"preperiodic_depth": 2})
    result = deep.run_route("preperiodic_witness")
    assert result.certified
    assert result.verdict is Verdict.PREPERIODIC_WITNESS
    alpha, k, level = result.witness
    assert (alpha, k) == (Fraction(-1), 2)
    assert level == poly(3, 0, -4, 0, 1)

    shallow = CertificateManager(f, 3, 1, settings={"preperiodic_depth": 1})
    assert not shallow.run_route("preperiodic_witness").certified


def test_preperiodic_route_skips_non_polynomial_maps(lattes_01):
    manager = CertificateManager(lattes_01, 5, 1, settings={"preperiodic_depth": 3})
    assert not manager.run_route("preperiodic_witness").certified


@pytest.mark.parametrize("text, p, max_period", [
    ("x^2+1", 3, 2),
    ("(x^2-x)/6", 5, 2),
    ("(x^2-x)/6", 3, 2),
    ("x^2-2", 7, 2),
    ("(x^2-x)/10", 5, 2),
])
def test_certificates_are_sound(text, p, max_period):
    f = parse_map(text)
    report = check_theorem_conditions(f, p, max_period, preperiodic_depth=2)
    assert report.good_reduction == good_reduction(f, p).good
    if report.nonsplit_witness is not None:
        n, phi = report.nonsplit_witness
        assert n <= max_period
        assert not splits_completely(phi, p)
    if report.preperiodic_witness is not None:
        _, _, level = report.preperiodic_witness
        assert not splits_completely(level, p)
    if report.verdict is Verdict.GOOD_REDUCTION:
        assert report.good_reduction


def test_manager_rejects_bad_input(square_map):
    with pytest.raises(NotPrimeError):
        CertificateManager(square_map, 4, 1)
    with pytest.raises(PreconditionError):
        CertificateManager(square_map, 5, 0)
    with pytest.raises(PreconditionError):
        CertificateManager(square_map, 5, 1).run_route("missing")
