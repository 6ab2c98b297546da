import numpy as np
import pytest

from rmtinter.ensembles import EnsembleSpec, circular_batch, sample_batch
from rmtinter.gap import GenFnPoly, count_in, cue_poly
from rmtinter.stats import (Comparison, StatTest, counts_chi2, counts_chi2_exact, mean_z,
                            stat_compare, stat_compare_exact, var_z)


def test_stat_test_validation():
    with pytest.raises(ValueError):
        StatTest("t_test", "x", 0.0, 0.5)
    assert StatTest("moment_z_test", "x", 0.0, 1.2).p_value == 1.0
    c = Comparison([StatTest("moment_z_test", "a", 0, 0.3), StatTest("moment_z_test", "b", 0, 1e-4)],
                   1e-3)
    assert c.p_floor == 5e-4 and c.min_p == 1e-4 and not c.passed


def test_p_values_in_unit_interval():
    rng = np.random.default_rng(0)
    a, b = rng.poisson(2, 500), rng.poisson(2.1, 500)
    for t in (counts_chi2(a, b), mean_z(a, b), var_z(a, b),
              counts_chi2_exact(a, np.exp(-2) * 2.0 ** np.arange(12) / np.cumprod(
                  np.r_[1, np.arange(1, 12)]))):
        assert 0.0 <= t.p_value <= 1.0


def test_degenerate_counts():
    t = counts_chi2(np.zeros(200, int), np.zeros(200, int))
    assert t.p_value == 1.0
    t = counts_chi2_exact(np.full(200, 3), [0.5, 0.5])
    assert t.p_value == 0.0


def test_identical_samplers_pass():
    spec = EnsembleSpec.gue(4)
    a = sample_batch(spec, np.random.default_rng(1), 20000)
    b = sample_batch(spec, np.random.default_rng(2), 20000)
    res = stat_compare(a, b)
    assert res.passed and len(res.tests) == 5


def test_cue_against_mapped_gue_fails():
    # 2 arctan of GUE eigenvalues is not CUE
    rng = np.random.default_rng(3)
    a = circular_batch(2, 4, rng, 20000)
    a = -np.sort(-a, axis=1)
    b = 2 * np.arctan(sample_batch(EnsembleSpec.gue(4), rng, 20000))
    assert not stat_compare(a, b, circular=True).passed


def test_exact_battery():
    n, phi = 4, 1.5
    x = circular_batch(2, n, np.random.default_rng(4), 20000)
    c = count_in(x, (0.0, phi))
    assert stat_compare_exact(c, cue_poly(n, phi)).passed
    assert not stat_compare_exact(c, cue_poly(n, phi + 0.3)).passed
    assert not stat_compare_exact(c, GenFnPoly((0, phi), [1.0])).passed


def test_too_few_samples():
    x = np.zeros((50, 3))
    with pytest.raises(ValueError):
        stat_compare(x, x)
    with pytest.raises(ValueError):
        stat_compare(np.zeros((200, 3)), np.zeros((200, 2)))
