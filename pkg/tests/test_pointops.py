import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmtinter.ensembles import Spectrum
from rmtinter.pointops import (Decimation, abs_batch, abs_values, decimate, decimate_batch,
                               kept_labels, power_angles, power_batch, superpose,
                               superpose_batch)

distinct = st.lists(st.floats(-50, 50, allow_nan=False), min_size=1, max_size=12,
                    unique=True).filter(lambda v: np.min(np.diff(np.sort(v)), initial=1) > 1e-6)


def spec(values, circular=False):
    return Spectrum.from_unsorted(values, circular=circular)


def test_superpose_merges():
    out = superpose(Spectrum([3.0, 1.0]), Spectrum([2.0]))
    np.testing.assert_array_equal(out.values, [3.0, 2.0, 1.0])


def test_superpose_with_empty():
    s = Spectrum([3.0, 1.0])
    np.testing.assert_array_equal(superpose(s, Spectrum([])).values, s.values)


def test_superpose_rejects_mixed_supports():
    with pytest.raises(ValueError):
        superpose(Spectrum([1.0], circular=True), Spectrum([0.5]))


def test_even_and_odd():
    s = Spectrum([5.0, 4.0, 3.0, 2.0, 1.0])
    np.testing.assert_array_equal(decimate(s, Decimation.even()).values, [4.0, 2.0])
    np.testing.assert_array_equal(decimate(s, Decimation.odd()).values, [5.0, 3.0, 1.0])


def test_every_r_labels():
    np.testing.assert_array_equal(kept_labels(9, 3, 0), [3, 6, 9])
    np.testing.assert_array_equal(kept_labels(9, 3, 1), [1, 4, 7])


def test_every_r_composition():
    # every_r(r1) applied to the labels kept by every_r(r2) keeps multiples of r1*r2
    for r1, r2 in [(2, 3), (3, 2), (2, 2)]:
        inner = kept_labels(24, r2, 0)
        outer = inner[kept_labels(len(inner), r1, 0) - 1]
        np.testing.assert_array_equal(outer, kept_labels(24, r1 * r2, 0))


def test_decimation_validation():
    with pytest.raises(ValueError):
        Decimation("sideways")
    with pytest.raises(ValueError):
        Decimation.every_r(3, 3)
    with pytest.raises(ValueError):
        decimate(Spectrum([1.0]), Decimation.alt())
    with pytest.raises(ValueError):
        decimate(Spectrum([2.0, 1.0]), Decimation.every_r(3))


def test_alt_is_seed_deterministic():
    s = Spectrum(np.arange(10.0)[::-1])
    a = decimate(s, Decimation.alt(), np.random.default_rng(5))
    b = decimate(s, Decimation.alt(), np.random.default_rng(5))
    np.testing.assert_array_equal(a.values, b.values)


def test_alt_picks_both_parities():
    s = Spectrum(np.arange(5.0)[::-1])
    rng = np.random.default_rng(0)
    sizes = {len(decimate(s, Decimation.alt(), rng)) for _ in range(50)}
    assert sizes == {2, 3}


def test_abs_values():
    np.testing.assert_array_equal(abs_values(Spectrum([2.0, -3.0])).values, [3.0, 2.0])
    out = abs_values(Spectrum([2.0, -2.5], circular=True))
    np.testing.assert_array_equal(out.values, [2.5, 2.0])
    assert out.circular


def test_power_angles():
    s = Spectrum([3 * np.pi / 4], circular=True)
    assert power_angles(s, 1).values[0] == pytest.approx(3 * np.pi / 4)
    assert power_angles(s, 2).values[0] == pytest.approx(-np.pi / 2)
    with pytest.raises(ValueError):
        power_angles(Spectrum([1.0]), 2)


@given(distinct)
def test_even_odd_partition(values):
    s = spec(values)
    n = len(s)
    ev, od = decimate(s, Decimation.even()), decimate(s, Decimation.odd())
    assert len(ev) == n // 2 and len(od) == (n + 1) // 2
    np.testing.assert_array_equal(superpose(ev, od).values, s.values)


@given(distinct)
def test_abs_preserves_magnitudes(values):
    values = [v for v in values if v != 0] or [1.0]
    mags = np.sort(np.abs(values))
    if np.any(np.diff(mags) <= 1e-9):
        return
    out = abs_values(spec(values))
    assert np.all(out.values > 0)
    np.testing.assert_allclose(np.sort(out.values), mags)


@settings(max_examples=30)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**31))
def test_batch_matches_single(n, p, seed):
    rng = np.random.default_rng(seed)
    a = -np.sort(-rng.uniform(-np.pi, np.pi, (3, n)), axis=1)
    b = -np.sort(-rng.uniform(-np.pi, np.pi, (3, n)), axis=1)
    u = superpose_batch(a, b)
    for i in range(3):
        np.testing.assert_array_equal(u[i], superpose(Spectrum(a[i]), Spectrum(b[i])).values)
        np.testing.assert_allclose(abs_batch(a)[i], abs_values(Spectrum(a[i])).values)
        np.testing.assert_allclose(power_batch(a, p)[i],
                                   power_angles(Spectrum(a[i], True), p).values)
    ev = decimate_batch(u, Decimation.even())
    np.testing.assert_array_equal(ev, u[:, 1::2])
