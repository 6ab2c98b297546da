import numpy as np
import pytest
from scipy import linalg, special

from rmtinter.discrete import (bo_rhs_continuous, bo_rhs_discrete, continuous_bessel_det,
                               cue_exp_cos_average, discrete_bessel_det, dlue_genfn)
from rmtinter.gap import genfn_ue
from rmtinter.weights import WeightSpec


def toeplitz_bessel(n, s):
    # Heine: <prod exp(s cos theta_j)>_CUE_n = det[I_{j-k}(s)]
    return float(np.linalg.det(linalg.toeplitz(special.iv(np.arange(n), s))))


def test_dlue_trivial():
    assert dlue_genfn(3, 0.5, 1.0, 0.0) == 1.0
    assert abs(dlue_genfn(3, 0.5, 1e-10, 1.0)) < 1e-8


@pytest.mark.parametrize("n", [1, 3, 6])
@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
def test_dlue_equals_continuous(n, alpha):
    for s in (0.5, 3.0):
        for xi in (0.5, 1.0):
            ref = genfn_ue(WeightSpec.laguerre(alpha), n, (s, np.inf), xi)
            assert abs(dlue_genfn(n, alpha, s, xi) - ref) < 1e-10


def test_cue_average_trivial():
    assert cue_exp_cos_average(3, 0.0) == 1.0
    assert cue_exp_cos_average(1, 1.3) == pytest.approx(special.iv(0, 1.3), rel=1e-10)
    with pytest.raises(ValueError):
        cue_exp_cos_average(2, -1.0)
    with pytest.raises(ValueError):
        cue_exp_cos_average(2, 1.0, method="monte_carlo")
    with pytest.raises(ValueError):
        cue_exp_cos_average(2, 1.0, method="guess")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cue_average_matches_toeplitz(n):
    for s in (0.5, 2.0):
        assert cue_exp_cos_average(n, s) == pytest.approx(toeplitz_bessel(n, s), rel=1e-8)


def test_cue_average_monte_carlo():
    mean, se = cue_exp_cos_average(2, 1.0, "monte_carlo", 40000, np.random.default_rng(2))
    assert abs(mean - cue_exp_cos_average(2, 1.0)) < 4 * se


def test_bo_trivial():
    for s in (0.5, 2.0):
        assert bo_rhs_discrete(2, s, 0.0) == pytest.approx(np.exp(s * s / 4))
        assert bo_rhs_continuous(2, s, 0.0) == pytest.approx(np.exp(s * s / 4))
    assert bo_rhs_discrete(2, 1e-6, 1.0) == pytest.approx(1.0, abs=1e-9)
    assert bo_rhs_continuous(2, 1e-6, 1.0) == pytest.approx(1.0, abs=1e-9)
    assert discrete_bessel_det(3, 0.0, 1.0) == 1.0
    assert continuous_bessel_det(3, 0.0, 1.0) == 1.0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_discrete_equals_continuous_bessel(n):
    for s in (0.5, 1.0, 2.0):
        for xi in (0.3, 1.0):
            assert abs(bo_rhs_discrete(n, s, xi) - bo_rhs_continuous(n, s, xi)) < 1e-8


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cue_average_equals_bessel_determinants(n):
    for s in (0.5, 1.5):
        lhs = toeplitz_bessel(n, s)
        assert abs(lhs - bo_rhs_discrete(n, s)) < 1e-6
        assert abs(lhs - bo_rhs_continuous(n, s)) < 1e-6


def test_decreasing_in_xi():
    xi = np.linspace(0, 1, 6)
    for f in (bo_rhs_discrete, bo_rhs_continuous):
        v = np.array([f(2, 1.5, x) for x in xi])
        assert np.all(np.diff(v) < 0)
