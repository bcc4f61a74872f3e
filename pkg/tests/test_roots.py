import math

import mpmath as mp
import pytest

from padyn.core.errors import ConvergenceError, PreconditionError
from padyn.core.roots import (complex_roots, initial_approximations,
                              log_mahler_measure_squarefree)


def _sorted_real_parts(roots):
    return sorted(float(mp.re(r)) for r in roots)


def test_complex_roots_of_quadratic():
    roots = complex_roots([-2, 0, 1])
    assert _sorted_real_parts(roots) == pytest.approx([-math.sqrt(2), math.sqrt(2)], abs=1e-12)


def test_complex_roots_keep_zero_roots():
    roots = complex_roots([0, 0, -1, 1])
    assert sum(1 for r in roots if abs(r) < 1e-20) == 2
    assert len(roots) == 3


def test_roots_of_unity():
    roots = complex_roots([-1, 0, 0, 0, 0, 1])
    assert len(roots) == 5
    for r in roots:
        assert abs(abs(r) - 1) < 1e-12
        assert abs(r ** 5 - 1) < 1e-10


def test_widely_spread_roots():
    # roots 1e-6, 1, 1e6
    coeffs = [-1000000, 1000001000001, -1000001000001, 1000000]
    roots = _sorted_real_parts(complex_roots(coeffs))
    assert roots[0] == pytest.approx(1e-6, rel=1e-9)
    assert roots[1] == pytest.approx(1.0, rel=1e-9)
    assert roots[2] == pytest.approx(1e6, rel=1e-9)


def test_initial_approximations_are_deterministic():
    coeffs = [3, -1, 0, 7, 2]
    first = initial_approximations(coeffs)
    second = initial_approximations(coeffs)
    assert len(first) == 4
    assert [complex(z) for z in first] == [complex(z) for z in second]


def test_iteration_cap_reports_residual():
    with pytest.raises(ConvergenceError) as info:
        complex_roots([1, 3, -7, 2, 5, -1, 9], max_iterations=1, tolerance=1e-30)
    assert info.value.residual > 0


def test_constant_polynomial_rejected():
    with pytest.raises(PreconditionError):
        complex_roots([4])


@pytest.mark.parametrize("coeffs, expected", [
    ([-2, 1], math.log(2)),
    ([1, 0, 1], 0.0),
    ([-1, -1, 1], math.log((1 + math.sqrt(5)) / 2)),
    ([-1, 2], math.log(2)),
    ([-1, 0, 2], math.log(2)),
])
def test_log_mahler_measure(coeffs, expected):
    value = log_mahler_measure_squarefree(coeffs)
    assert value == pytest.approx(expected, abs=1e-11)
