"""Acceptance criteria 1-14; the terminal summary lists one PASS/FAIL line each."""

import time

import numpy as np
import pytest

from rmtinter.formfactor import sff_bruteforce, sff_gue, sff_lue
from rmtinter.gap import coe_poly, counting_stats, cue_poly, genfn_orthogonal_group
from rmtinter.identities import negative_control, run_identity
from rmtinter.scaling import power_spectrum_coe, sine_genfn
from rmtinter.weights import WeightSpec


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def test_criterion_01_cue_product(criterion):
    rep, dt = timed(run_identity, "I-2.31a")
    ok = rep.passed and rep.rel_err < 1e-9 and dt < 10
    criterion(1, ok, f"max rel_err {rep.rel_err:.2e} over N=2..8, runtime {dt:.1f} s")


def test_criterion_02_coe_oracle(criterion):
    rep, dt = timed(run_identity, "I-2.31")
    ok = rep.passed and rep.rel_err < 1e-5 and dt < 120
    criterion(2, ok, f"max rel_err {rep.rel_err:.2e} at N=2,3,4, runtime {dt:.1f} s")


def test_criterion_03_cse_oracle(criterion):
    rep = run_identity("I-8.140a")
    criterion(3, rep.passed and rep.rel_err < 1e-5, f"max rel_err {rep.rel_err:.2e} at N=2,3")


def test_criterion_04_discrete_laguerre(criterion):
    rep = run_identity("I-D5")
    criterion(4, rep.passed and rep.abs_err < 1e-10, f"max abs_err {rep.abs_err:.2e} on the grid")


def test_criterion_05_bessel_determinants(criterion):
    d11, d7, d9 = (run_identity(i) for i in ("I-D11", "I-D7", "I-D9"))
    ok = (d11.passed and d11.abs_err < 1e-8 and d7.passed and d7.abs_err < 1e-6
          and d9.passed and d9.abs_err < 1e-6)
    criterion(5, ok, f"abs_err D11 {d11.abs_err:.1e}, D7 {d7.abs_err:.1e}, D9 {d9.abs_err:.1e}")


def test_criterion_06_form_factor(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(1, 7):
        for k in np.linspace(0, 6, 10):
            worst = max(worst, abs(sff_gue(n, k) - sff_bruteforce(WeightSpec.gaussian(2), n, k)))
            for a in (0.0, 1.0):
                worst = max(worst, abs(sff_lue(n, a, k)
                                       - sff_bruteforce(WeightSpec.laguerre(a), n, k)))
    dt = time.perf_counter() - t0
    criterion(6, worst < 1e-6 and dt < 60, f"max abs_err {worst:.2e}, runtime {dt:.1f} s")


def test_criterion_07_ginibre(criterion):
    rep = run_identity("I-Sa1.5", {"n": 8, "t": [1.0, 2.0, 4.0], "samples": 100_000})
    criterion(7, rep.passed, f"min p {min(rep.rhs.values()):.3g} vs floor {rep.p_floor:.3g} "
           "(4 standard errors)")


def test_criterion_08_interlaced_integral(criterion):
    rep = run_identity("I-DA", {"n": [1, 2]})
    criterion(8, rep.passed, f"max rel_err {rep.rel_err:.2e} (tolerance 1e-10 at N=1, 1e-7 at N=2)")


STAT_RUNS = [("I-2.0c", {}), ("I-2.31b", {}), ("I-2.31c", {"p": 2}), ("I-5.0", {}),
             ("I-5.0x", {}), ("I-5.3-G", {}), ("I-5.3-L", {}), ("I-5.3-J", {}), ("I-5.3-C", {}),
             ("I-5.3x", {}), ("I-2.26a", {}), ("I-2.26b", {}), ("I-2.27", {}), ("I-2.27+", {}),
             ("I-8.1", {}), ("I-L2-G", {}), ("I-P2.3", {}), ("I-7.4b", {}),
             ("I-3.u.2", {"r": 1}), ("I-3.u.2", {"r": 2}),
             ("I-3.111e", {"r": 1}), ("I-3.111e", {"r": 2})]


def test_criterion_09_statistical_suite(criterion):
    t0 = time.perf_counter()
    failed = []
    for ident, params in STAT_RUNS:
        rep = run_identity(ident, {**params, "samples": 100_000}, seed=0)
        if not rep.passed or rep.parameters.get("n", 1) > 6:
            failed.append(f"{ident}{params or ''}")
    controls = {k: negative_control(k).passed for k in ("exact", "oracle", "statistical")}
    failed += [f"NC-{k} passed" for k, v in controls.items() if v]
    dt = time.perf_counter() - t0
    ok = not failed and dt < 1800
    criterion(9, ok, f"{len(STAT_RUNS)} runs, negative controls fail, runtime {dt / 60:.1f} min"
           + (f"; failures: {failed}" if failed else ""))


def test_criterion_10_determinant_moments(criterion):
    rep = run_identity("I-5.0y", {"n": 4, "samples": 100_000})
    criterion(10, rep.passed, f"min p {min(rep.rhs.values()):.3g} vs 4-SE floor {rep.p_floor:.3g}")


def test_criterion_11_bulk_limit(criterion):
    n, s, z = 64, 1.0, 1.0
    err = max(abs(genfn_orthogonal_group(2 * n + 1, sign, np.pi * s / n, z)
                  - sine_genfn(sign, s, z)) for sign in (1, -1))
    criterion(11, err < 1e-3, f"max |E_O(2N+1) - sine determinant| = {err:.2e} at N=64")


def _variance_slope(poly, phi):
    sizes = np.array([8, 16, 32, 64])
    var = [counting_stats(poly(int(n), phi)).variance for n in sizes]
    return np.polyfit(np.log(sizes * phi), var, 1)[0]


def test_criterion_12_counting_variance(criterion):
    phi = np.pi / 2
    target = 2 / np.pi**2
    slope = _variance_slope(cue_poly, phi)
    coe = _variance_slope(coe_poly, phi)
    ok = abs(slope - target) < 0.1 * target
    criterion(12, ok, f"CUE slope {slope:.5f} = {slope * np.pi**2:.3f}/pi^2 vs target 2/pi^2 "
           f"= {target:.5f}; COE slope {coe:.5f} = {coe * np.pi**2:.3f}/pi^2")


def test_criterion_13_power_spectrum(criterion):
    ps, dt = timed(power_spectrum_coe, [0.2, 0.5, 1.0, 2.0, 3.0])
    v = ps.value[0]
    target = 1 / (np.pi * 0.2)
    ok = abs(v - target) < 0.1 * target and dt < 600
    criterion(13, ok, f"S(0.2) = {v:.4f} vs 1/(pi omega) = {target:.4f}, runtime {dt:.1f} s")


def test_criterion_14_polynomial_identities(criterion):
    a = run_identity("I-5.3a", {"n": [1, 2, 3, 4], "draws": 100})
    b = run_identity("I-5.3a+", {"n": [1, 2, 3, 4, 5], "draws": 100})
    ok = a.passed and b.passed and max(a.rel_err, b.rel_err) < 1e-10
    criterion(14, ok, f"max rel_err pairs {a.rel_err:.1e}, signs {b.rel_err:.1e}")
