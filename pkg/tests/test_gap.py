import numpy as np
import pytest
from scipy import integrate

from rmtinter.ensembles import EnsembleSpec, circular_batch, sample_batch
from rmtinter.gap import (GenFnPoly, QuadratureError, bruteforce_counts, bruteforce_genfn,
                          count_in, counting_stats, coe_poly, cse_poly, cue_poly, genfn_coe,
                          genfn_cse, genfn_orthogonal_group, genfn_poly, genfn_ue,
                          mc_gap_counts, orthogonal_group_poly, overlap_eigenvalues)
from rmtinter.kernels import cd_kernel
from rmtinter.weights import WeightSpec

XI = [0.0, 0.1, 0.3, 0.5, 0.77, 1.0, 1.4, 0.5 + 0.5j]
UE_CASES = [(WeightSpec.gaussian(2), 3, (-0.4, 0.9)), (WeightSpec.laguerre(0.0), 3, (0.5, 2.0)),
            (WeightSpec.laguerre(1.0), 2, (1.0, 4.0)), (WeightSpec.jacobi(0, 0), 3, (-0.2, 0.6)),
            (WeightSpec.circular(), 4, (0.3, 2.0))]

# GUE_2 counts in (-0.5, 1): two-dimensional mpmath quadrature, 20 digits
GUE2_COUNTS = [0.21054008735815249347, 0.64296854796509215622, 0.1464913646767553503]


def test_genfn_poly_matches_frozen_quadrature():
    c = genfn_poly(WeightSpec.gaussian(2), 2, (-0.5, 1.0)).coefficients
    np.testing.assert_allclose(c, GUE2_COUNTS, atol=1e-13)


@pytest.mark.parametrize("weight,n,J", UE_CASES)
def test_genfn_poly_consistent_with_direct_determinant(weight, n, J):
    poly = genfn_poly(weight, n, J)
    assert poly.coefficients.sum() == pytest.approx(1.0, abs=1e-12)
    for xi in XI:
        assert abs(poly(xi) - genfn_ue(weight, n, J, xi)) < 1e-10


@pytest.mark.parametrize("weight,n,J", UE_CASES[:4])
def test_mean_count_is_density_integral(weight, n, J):
    k = cd_kernel(weight, n)
    mean, _ = integrate.quad(lambda x: k.density(np.array([x]))[0], *J, epsabs=1e-13)
    assert counting_stats(genfn_poly(weight, n, J)).mean == pytest.approx(mean, abs=1e-9)


@pytest.mark.parametrize("weight,n,J", UE_CASES[:4])
def test_genfn_matches_bruteforce(weight, n, J):
    probs = bruteforce_counts(2, weight, n, J)["probs"]
    np.testing.assert_allclose(genfn_poly(weight, n, J).coefficients, probs, atol=1e-7)


def test_trivial_values():
    w = WeightSpec.gaussian(2)
    assert genfn_ue(w, 3, (0.0, 1.0), 0.0) == pytest.approx(1.0)
    assert abs(genfn_ue(w, 3, (-np.inf, np.inf), 1.0)) < 1e-12
    empty = genfn_poly(w, 3, (0.5, 0.5)).coefficients
    np.testing.assert_allclose(empty, [1, 0, 0, 0], atol=1e-15)


def test_single_cue_angle():
    for phi in (0.4, np.pi, 5.0):
        assert genfn_ue(WeightSpec.circular(), 1, (0.0, phi), 0.7) == pytest.approx(
            1 - 0.7 * phi / (2 * np.pi))
        assert bruteforce_genfn(2, WeightSpec.circular(), 1, (0.0, phi), 0.7) == pytest.approx(
            1 - 0.7 * phi / (2 * np.pi))


def test_cauchy_route_matches_circle():
    # CUE_N angles map to UE_N(Cauchy) by x = tan(theta / 2)
    n, phi = 3, 1.2
    w = WeightSpec.cauchy(0.0, n, beta=2)
    a = genfn_poly(w, n, (0.0, np.tan(phi / 2))).coefficients
    np.testing.assert_allclose(a, cue_poly(n, phi).coefficients, atol=1e-11)


def test_overlap_eigenvalues_in_unit_interval():
    lam = overlap_eigenvalues(WeightSpec.laguerre(0.5), 6, (0.2, 3.0))
    assert lam.min() >= -1e-12 and lam.max() <= 1 + 1e-12


# -- GenFnPoly ----------------------------------------------------------------


def test_genfnpoly_validation_and_combine():
    with pytest.raises(ValueError):
        GenFnPoly((0, 1), [0.5, -0.1, 0.6])
    g = GenFnPoly((0, 1), [0.5, -1e-12, 0.5])
    assert g.prob(1) == 0.0 and g.prob(7) == 0.0
    h = g.combine(GenFnPoly((0, 1), [0.25, 0.75]))
    np.testing.assert_allclose(h.coefficients, [0.125, 0.375, 0.125, 0.375])
    assert h(0.3) == pytest.approx(g(0.3) * (0.25 + 0.75 * 0.7))


def test_counting_stats_deterministic():
    s = counting_stats(GenFnPoly((0, 1), [0, 0, 1.0]))
    assert s.mean == 2.0 and s.variance == 0.0


# -- orthogonal groups, COE, CSE ------------------------------------------------


def test_orthogonal_group_trivial():
    for n, sign in [(4, 1), (5, -1), (6, 1)]:
        assert genfn_orthogonal_group(n, sign, 0.0, 1.0) == pytest.approx(1.0)
        assert abs(genfn_orthogonal_group(n, sign, np.pi, 1.0)) < 1e-12
    assert orthogonal_group_poly(2, -1, 1.0).coefficients.tolist() == [1.0]


def test_odd_orthogonal_groups_mirror():
    # -Q maps O+(2N+1) to O-(2N+1) and theta to pi - theta
    for n in (3, 5):
        theta = 1.1
        plus = orthogonal_group_poly(n, 1, theta).coefficients
        m = (n - 1) // 2
        minus_tail = orthogonal_group_poly(n, -1, np.pi - theta).coefficients
        np.testing.assert_allclose(plus, minus_tail[::-1][: m + 1], atol=1e-12)


@pytest.mark.parametrize("n,sign", [(4, 1), (5, 1), (5, -1), (6, -1)])
def test_orthogonal_group_counts_match_sampling(n, sign):
    theta = 1.3
    spec = EnsembleSpec.orthogonal_group(n, sign)
    x = sample_batch(spec, np.random.default_rng(n), 20000)
    c = count_in(x, (0.0, theta))
    p0 = orthogonal_group_poly(n, sign, theta).prob(0)
    se = np.sqrt(p0 * (1 - p0) / len(c))
    assert abs(np.mean(c == 0) - p0) < 4 * se


def test_coe_and_cse_trivial():
    assert genfn_coe(3, 1.0, 0.0) == pytest.approx(1.0)
    assert genfn_cse(3, 1.0, 0.0) == pytest.approx(1.0)
    assert genfn_coe(1, 1.3, 1.0) == pytest.approx(1 - 1.3 / (2 * np.pi))
    for n in (2, 3, 4):
        assert coe_poly(n, 2.0).coefficients.sum() == pytest.approx(1.0)
        assert cse_poly(n, 1.0).coefficients.sum() == pytest.approx(1.0)


def test_coe_matches_bruteforce():
    val = genfn_coe(3, np.pi / 2, 1.0)
    ref = bruteforce_genfn(1, WeightSpec.circular(), 3, (0.0, np.pi / 2), 1.0)
    assert abs(val - ref) < 1e-6


def test_cse_matches_bruteforce():
    for n in (2, 3):
        c = cse_poly(n, 0.8).coefficients
        ref = bruteforce_counts(4, WeightSpec.circular(), n, (-0.8, 0.8))["probs"]
        np.testing.assert_allclose(c, ref, atol=1e-7)


# -- brute force --------------------------------------------------------------


def test_bruteforce_limits():
    with pytest.raises(ValueError):
        bruteforce_counts(2, WeightSpec.gaussian(2), 5)
    with pytest.raises(QuadratureError):
        bruteforce_counts(2, WeightSpec.gaussian(2), 3, (0, 1), rtol=1e-30, max_q=12)
    assert bruteforce_genfn(1, WeightSpec.gaussian(1), 2, (0, 1), 0.0) == pytest.approx(1.0)


# -- Monte Carlo counts ---------------------------------------------------------


def test_mc_counts_cue():
    n, phi = 4, 1.7
    dist = mc_gap_counts(lambda r, m: circular_batch(2, n, r, m), (0.0, phi), 20000,
                         np.random.default_rng(3), circular=True)
    assert dist.frequencies.sum() == pytest.approx(1.0)
    c = np.arange(n + 1)
    sd = np.sqrt(np.sum(dist.frequencies * (c - dist.mean) ** 2) / dist.n_samples)
    assert abs(dist.mean - n * phi / (2 * np.pi)) < 4 * sd
    p0 = cue_poly(n, phi).prob(0)
    assert abs(dist.frequencies[0] - p0) < 4 * dist.stderr[0]
