"""End-to-end checks of the documented behaviour on the suite maps"""

import json
import math
import random
from fractions import Fraction

import pytest

from conftest import poly, random_rational
from padyn.analyzers import Verdict, check_theorem_conditions, lattes_map
from padyn.analyzers.profile import backward_orbit_height_profile
from padyn.cli.app import main
from padyn.cli.parser import parse_map
from padyn.config import config
from padyn.core.arith import prime_factors, primes_up_to
from padyn.core.dynamics import (backward_orbit, exact_period_points, is_preperiodic_rational,
                                 rational_periodic_points)
from padyn.core.heights import canonical_height, height_bound_constant, weil_height
from padyn.core.padic import count_qp_roots, splits_completely
from padyn.core.poly import IntPolynomial, discriminant
from padyn.core.ratmap import Finite, apply, good_reduction

SMALL_PRIMES = primes_up_to(100)


@pytest.mark.parametrize("k", [6, 10, 30])
def test_reduction_loci(k):
    f = parse_map(f"(x^2-x)/{k}")
    bad = set(prime_factors(k))
    for p in SMALL_PRIMES:
        assert good_reduction(f, p).good == (p not in bad)


@pytest.mark.parametrize("text", ["x^2+1", "x^2-2", "x^3-x+1"])
def test_monic_polynomials_have_good_reduction(text):
    f = parse_map(text)
    assert all(good_reduction(f, p).good for p in SMALL_PRIMES)
    for p in (2, 3, 97):
        assert check_theorem_conditions(f, p, 1).verdict is Verdict.GOOD_REDUCTION


def test_backward_orbit_is_totally_padic(example_map):
    orbit = backward_orbit(example_map, 0, 4, [2, 3])
    assert all(level_splits == {2: True, 3: True} for level_splits in orbit.splits)
    assert orbit.level(2) == IntPolynomial.from_roots([0, 1, 3, -2])


@pytest.mark.parametrize("degree", [2, 3])
def test_power_map_height_is_weil_height(degree, rng):
    f = parse_map(f"x^{degree}")
    for _ in range(50):
        P = random_rational(rng, 10)
        assert abs(canonical_height(f, P, 1e-9).value - weil_height(Finite(P)).value) <= 1e-9


@pytest.mark.slow
@pytest.mark.parametrize("name", ["x^2", "x^2+1", "(x^2-x)/6", "lattes(0,1)"])
def test_functoriality(suite_maps, name, rng):
    f = suite_maps[name]
    eps = 1e-8
    for _ in range(20):
        P = Finite(random_rational(rng, 10))
        here = canonical_height(f, P, eps)
        there = canonical_height(f, apply(f, P), eps)
        assert abs(there.value - f.d * here.value) <= 3 * eps
        assert here.value >= -here.error


@pytest.mark.slow
@pytest.mark.parametrize("name", ["x^2", "x^2+1", "(x^2-x)/6", "lattes(0,1)"])
def test_vanishing_on_periodic_points(suite_maps, name):
    f = suite_maps[name]
    for n in range(1, 4):
        for alpha in rational_periodic_points(f, n):
            assert canonical_height(f, alpha, 1e-8).value <= 1e-8
            assert is_preperiodic_rational(f, alpha)


def test_small_height_sequences(example_map, square_map):
    bound = height_bound_constant(example_map).canonical_gap + 1e-6
    rows = backward_orbit_height_profile(example_map, 2, 4)
    base = canonical_height(example_map, 2, 1e-8).value
    for k, row in enumerate(rows):
        assert abs(row.measured.value - base / 2 ** k) <= bound

    for k, row in enumerate(backward_orbit_height_profile(square_map, 2, 4)):
        assert abs(row.measured.value - math.log(2) / 2 ** k) <= 1e-9


NON_RESIDUE_QUADRATICS = {2: poly(1, 1, 1), 3: poly(1, 0, 1), 5: poly(-2, 0, 1), 7: poly(1, 0, 1)}


def test_root_count_oracle():
    rng = random.Random(8)
    for trial in range(200):
        p = (2, 3, 5, 7)[trial % 4]
        roots = set()
        j = rng.randint(0, 4)
        while len(roots) < j:
            roots.add(Fraction(rng.randint(-20, 20), rng.randint(1, 20)))
        product = IntPolynomial.from_roots(sorted(roots))
        for shift in rng.sample(range(-5, 6), rng.randint(1, 2)):
            product = product * NON_RESIDUE_QUADRATICS[p].shift_scale(shift, 1)
        assert count_qp_roots(product, p).total == j


def test_witness_certificates(shifted_square_map, example_map):
    report = check_theorem_conditions(shifted_square_map, 3, 1)
    assert report.certified
    n, phi = report.nonsplit_witness
    assert (n, phi) == (1, poly(1, -1, 1))
    assert discriminant(phi) == -3
    assert not splits_completely(phi, 3)

    report = check_theorem_conditions(example_map, 2, 3)
    assert report.verdict is Verdict.INCONCLUSIVE
    for n in (1, 2, 3):
        assert splits_completely(exact_period_points(example_map, n), 2)


def test_lattes_identity(rng):
    for _ in range(20):
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        if 4 * a ** 3 + 27 * b ** 2 == 0:
            continue
        f = lattes_map(a, b)
        lhs = (poly(a, 0, 3) ** 2 - poly(0, 8) * poly(b, a, 0, 1))
        assert f.g * poly(4 * b, 4 * a, 0, 4) == f.h * lhs
    assert lattes_map(0, 1)(2) == Finite(0)


@pytest.mark.slow
def test_gap_search_command(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    argv = ["gap", "--map", "x^2", "--prime", "5", "--degree", "2", "--coeff-bound", "2",
            "--eps", "1e-4"]
    try:
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
    finally:
        config.load_settings()
    result = json.loads(first)["result"]
    assert "x^2+1" in result["preperiodic_found"]
    assert result["min_positive_height"]["height"]["value"] > 0
