import numpy as np
import pytest

from rmtinter.gap import cue_poly, genfn_coe, genfn_cse, genfn_orthogonal_group
from rmtinter.kernels import kernel_operator, nystrom_fredholm_det, sine_kernel
from rmtinter.scaling import (coe_bulk_from_eigs, coe_bulk_genfn, cse_bulk_genfn,
                              power_spectrum_coe, sine_eigenvalues, sine_genfn)


def test_trivial_values():
    for sign in (1, -1):
        assert sine_genfn(sign, 0.0, 0.7) == 1.0
        assert sine_genfn(sign, 1.3, 0.0) == 1.0
    assert coe_bulk_genfn(0.0, 1.0) == 1.0
    assert coe_bulk_genfn(1.0, 0.0) == pytest.approx(1.0)
    assert cse_bulk_genfn(0.0, 1.0) == 1.0
    assert cse_bulk_genfn(1.0, 0.0) == pytest.approx(1.0)
    # the power-spectrum integrand at s = 0
    assert coe_bulk_from_eigs(np.zeros(0), np.zeros(0), 1 - np.exp(0.3j)) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        sine_genfn(2, 1.0, 1.0)
    with pytest.raises(ValueError):
        sine_genfn(1, -1.0, 1.0)


@pytest.mark.parametrize("s", [0.4, 1.0, 2.2])
@pytest.mark.parametrize("xi", [0.5, 1.0])
def test_product_is_sine_determinant(s, xi):
    full = nystrom_fredholm_det(kernel_operator(sine_kernel, (-s / 2, s / 2), 16), xi)
    assert abs(sine_genfn(1, s / 2, xi) * sine_genfn(-1, s / 2, xi) - full) < 1e-9


def test_sine_determinant_matches_large_cue():
    # bulk limit of CUE_N on an arc of s mean spacings
    n, s = 400, 1.0
    finite = cue_poly(n, 2 * np.pi * s / n)(1.0)
    bulk = nystrom_fredholm_det(kernel_operator(sine_kernel, (0, s), 16), 1.0)
    assert abs(finite - bulk) < 1e-4


def test_monotone_and_bounded():
    s = np.linspace(0.1, 3.0, 12)
    for sign in (1, -1):
        for z in (0.3, 1.0):
            v = np.array([sine_genfn(sign, x, z).real for x in s])
            assert np.all(np.diff(v) < 0)
    for xi in (0.2, 0.6, 1.0):
        v = np.array([coe_bulk_genfn(x, xi).real for x in s])
        assert np.all((v > 0) & (v <= 1))


def test_sine_eigenvalues_converge():
    lam = sine_eigenvalues(1, 2.0)
    assert lam.min() > -1e-10 and lam.max() < 1
    det = np.prod(1 - 0.8 * lam)
    assert abs(det - sine_genfn(1, 2.0, 0.8)) < 1e-10


def test_orthogonal_group_bulk_convergence():
    s = 1.0
    errs = []
    sizes = [8, 16, 32, 64]
    for m in sizes:
        e = max(abs(genfn_orthogonal_group(2 * m + 1, sign, np.pi * s / m, 1.0)
                    - sine_genfn(sign, s, 1.0)) for sign in (1, -1))
        errs.append(e)
    assert errs[-1] < 1e-3
    slope = np.polyfit(np.log(sizes), np.log(errs), 1)[0]
    assert slope <= -1 + 0.3


def test_coe_bulk_convergence():
    sizes = [8, 16, 32, 64]
    errs = [abs(genfn_coe(n, 2 * np.pi / n, 1.0) - coe_bulk_genfn(1.0, 1.0)) for n in sizes]
    assert errs[-1] < 1e-3
    assert np.polyfit(np.log(sizes), np.log(errs), 1)[0] <= -0.7


def test_cse_bulk_convergence():
    for xi in (0.5, 1.0):
        err = abs(genfn_cse(64, np.pi / 128, xi) - cse_bulk_genfn(1.0, xi))
        assert err < 1e-5


def test_power_spectrum_positive():
    ps = power_spectrum_coe([0.5, 1.0, 2.0, 3.0])
    assert np.all(ps.value > 0)
    assert np.all(ps.est_error < 0.01 * ps.value)
    with pytest.raises(ValueError):
        power_spectrum_coe([0.0])
    with pytest.raises(ValueError):
        power_spectrum_coe([3.5])
