"""Superposition and label-based decimation of point configurations.

Labels are always assigned by descending order, x_1 > x_2 > ..., starting at 1.
The batch variants act on arrays of shape (size, n) whose rows are already
sorted in descending order.
"""

from dataclasses import dataclass

import numpy as np

from .ensembles import Spectrum, _wrap


@dataclass(frozen=True)
class Decimation:
    """A label selection rule.

    Parameters
    ----------
    kind : str
        One of ``even``, ``odd``, ``alt``, ``every_r``, ``alt_r``.
    r : int
        Spacing for ``every_r``/``alt_r``; 2 for the parity rules.
    offset : int
        Residue kept by ``every_r``; 0 keeps the multiples of ``r``.
    """

    kind: str
    r: int = 2
    offset: int = 0

    def __post_init__(self):
        if self.kind not in ("even", "odd", "alt", "every_r", "alt_r"):
            raise ValueError(f"unknown decimation {self.kind!r}")
        if self.r < 1:
            raise ValueError("r must be positive")
        if not 0 <= self.offset < self.r:
            raise ValueError("offset must lie in [0, r)")

    @classmethod
    def even(cls):
        return cls("even")

    @classmethod
    def odd(cls):
        return cls("odd", offset=1)

    @classmethod
    def alt(cls):
        return cls("alt")

    @classmethod
    def every_r(cls, r, offset=0):
        return cls("every_r", r, offset)

    @classmethod
    def alt_r(cls, r):
        return cls("alt_r", r)

    @property
    def is_random(self):
        return self.kind in ("alt", "alt_r")

    def resolve(self, rng=None):
        """Fix the offset; random rules draw it uniformly from ``rng``."""
        if self.kind == "even":
            return 2, 0
        if self.kind == "odd":
            return 2, 1
        if self.kind == "every_r":
            return self.r, self.offset
        if rng is None:
            raise ValueError(f"decimation {self.kind!r} needs a generator")
        r = 2 if self.kind == "alt" else self.r
        return r, int(rng.integers(r))


def kept_labels(n, r, offset):
    """1-based labels l <= n with l = offset (mod r)."""
    if r < 1 or not 0 <= offset < r:
        raise ValueError(f"invalid decimation r={r}, offset={offset} for n={n}")
    labels = np.arange(1, n + 1)
    return labels[labels % r == offset]


def _check_same_support(s1, s2):
    if s1.circular != s2.circular:
        raise ValueError("cannot superpose spectra on different supports")


def superpose(s1, s2):
    """Union of two spectra, re-sorted, labels discarded."""
    _check_same_support(s1, s2)
    values = np.concatenate([s1.values, s2.values])
    return Spectrum.from_unsorted(values, circular=s1.circular)


def decimate(s, mode, rng=None):
    """Keep the points whose label matches ``mode``.

    Examples
    --------
    >>> decimate(Spectrum([5., 4., 3., 2., 1.]), Decimation.even()).values
    array([4., 2.])
    """
    r, offset = mode.resolve(rng)
    n = len(s)
    if n == 0:
        return s
    if mode.kind == "every_r" and r > n:
        raise ValueError(f"r={r} exceeds the number of points {n}")
    idx = kept_labels(n, r, offset) - 1
    return Spectrum(np.asarray(s.values)[idx], circular=s.circular,
                    label_origin=(r, offset))


def abs_values(s):
    """Magnitudes |x| sorted descending.

    On the circle this folds (-pi, 0) onto (0, pi) by theta -> -theta.
    """
    v = np.abs(np.asarray(s.values, dtype=float))
    if np.any(v == 0):
        raise ValueError("a point sits exactly at the origin")
    return Spectrum.from_unsorted(v, circular=s.circular)


def power_angles(s, p):
    """Angles p*theta reduced into (-pi, pi]."""
    if not s.circular:
        raise ValueError("power map needs a circular spectrum")
    if p < 1:
        raise ValueError("p must be a positive integer")
    return Spectrum.from_unsorted(_wrap(p * np.asarray(s.values, dtype=float)), circular=True)


# ---------------------------------------------------------------------------
# batch variants


def superpose_batch(a, b):
    return -np.sort(-np.concatenate([a, b], axis=1), axis=1)


def decimate_batch(x, mode, rng=None):
    """Decimate every row of ``x``.

    Random rules draw one offset per row, so rows of the output can differ
    in length; the result is then a list of arrays unless all rows agree.
    """
    x = np.asarray(x)
    n = x.shape[1]
    if not mode.is_random:
        r, offset = mode.resolve()
        return x[:, kept_labels(n, r, offset) - 1]
    r = 2 if mode.kind == "alt" else mode.r
    offsets = rng.integers(r, size=len(x))
    out = [None] * len(x)
    for o in range(r):
        rows = np.nonzero(offsets == o)[0]
        sub = x[rows][:, kept_labels(n, r, o) - 1]
        for i, row in zip(rows, sub):
            out[i] = row
    lengths = {len(v) for v in out}
    return np.array(out) if len(lengths) == 1 else out


def abs_batch(x):
    return -np.sort(-np.abs(x), axis=1)


def power_batch(theta, p):
    return -np.sort(-_wrap(p * theta), axis=1)
