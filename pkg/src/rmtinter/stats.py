"""Goodness-of-fit battery for comparing point-process samples."""

from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .gap import count_in

KINDS = ("two_sample_counts_chi2", "ks_on_ordered_statistic", "moment_z_test")
DEFAULT_ALPHA = 1e-3


@dataclass(frozen=True)
class StatTest:
    """One test of the battery.

    ``samples`` holds the summary statistics the test was computed from.
    """

    kind: str
    label: str
    statistic: float
    p_value: float
    samples: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown test kind {self.kind!r}")
        p = float(np.clip(self.p_value, 0.0, 1.0))
        object.__setattr__(self, "p_value", p)

    def to_dict(self):
        return {"kind": self.kind, "label": self.label, "statistic": self.statistic,
                "p_value": self.p_value, "samples": self.samples}


@dataclass(frozen=True)
class Comparison:
    """Battery outcome with a Bonferroni floor alpha / len(tests)."""

    tests: list
    alpha: float

    @property
    def p_floor(self):
        return self.alpha / max(len(self.tests), 1)

    @property
    def min_p(self):
        return min(t.p_value for t in self.tests)

    @property
    def passed(self):
        return all(t.p_value >= self.p_floor for t in self.tests)


def _pool_columns(table, min_expected=5.0):
    """Merge adjacent count categories until every expected cell is >= min_expected."""
    table = np.asarray(table, dtype=float)
    cols = [table[:, j].copy() for j in range(table.shape[1]) if table[:, j].sum() > 0]
    total = table.sum()
    rows = table.sum(axis=1)

    def ok(c):
        return np.all(rows * c.sum() / total >= min_expected)

    merged = []
    for c in cols:
        if merged and not ok(merged[-1]):
            merged[-1] = merged[-1] + c
        else:
            merged.append(c)
    while len(merged) > 1 and not ok(merged[-1]):
        last = merged.pop()
        merged[-1] = merged[-1] + last
    return np.column_stack(merged) if merged else np.zeros((len(rows), 0))


def counts_chi2(counts_a, counts_b, label="counts"):
    """Two-sample chi-square homogeneity test on integer counts."""
    counts_a = np.asarray(counts_a, dtype=int)
    counts_b = np.asarray(counts_b, dtype=int)
    kmax = int(max(counts_a.max(), counts_b.max()))
    table = np.vstack([np.bincount(counts_a, minlength=kmax + 1),
                       np.bincount(counts_b, minlength=kmax + 1)])
    pooled = _pool_columns(table)
    if pooled.shape[1] < 2:
        return StatTest("two_sample_counts_chi2", label, 0.0, 1.0,
                        {"bins": int(pooled.shape[1]), "mean_a": float(counts_a.mean()),
                         "mean_b": float(counts_b.mean())})
    chi2, p, dof, _ = stats.chi2_contingency(pooled, correction=False)
    return StatTest("two_sample_counts_chi2", label, float(chi2), float(p),
                    {"bins": int(pooled.shape[1]), "dof": int(dof),
                     "mean_a": float(counts_a.mean()), "mean_b": float(counts_b.mean())})


def counts_chi2_exact(counts, probs, label="counts"):
    """Chi-square goodness of fit of integer counts to exact probabilities."""
    counts = np.asarray(counts, dtype=int)
    probs = np.clip(np.asarray(probs, dtype=float), 0.0, None)
    probs = probs / probs.sum()
    if counts.max() >= len(probs):
        return StatTest("two_sample_counts_chi2", label, np.inf, 0.0,
                        {"reason": "count outside the support of the exact law"})
    obs = np.bincount(counts, minlength=len(probs)).astype(float)
    exp = probs * len(counts)
    # pool adjacent categories on the expected counts
    o, e = [], []
    for oj, ej in zip(obs, exp):
        if e and e[-1] < 5.0:
            o[-1] += oj
            e[-1] += ej
        else:
            o.append(oj)
            e.append(ej)
    while len(e) > 1 and e[-1] < 5.0:
        ol, el = o.pop(), e.pop()
        o[-1] += ol
        e[-1] += el
    if len(e) < 2:
        return StatTest("two_sample_counts_chi2", label, 0.0, 1.0, {"bins": len(e)})
    chi2, p = stats.chisquare(o, e)
    return StatTest("two_sample_counts_chi2", label, float(chi2), float(p),
                    {"bins": len(e), "dof": len(e) - 1})


def ks_two_sample(a, b, label="max"):
    res = stats.ks_2samp(a, b)
    return StatTest("ks_on_ordered_statistic", label, float(res.statistic), float(res.pvalue),
                    {"median_a": float(np.median(a)), "median_b": float(np.median(b))})


def _z(diff, se):
    if se == 0:
        return 0.0 if diff == 0 else np.inf
    return diff / se


def mean_z(a, b, label="mean"):
    a, b = np.asarray(a, float), np.asarray(b, float)
    diff = a.mean() - b.mean()
    se = np.sqrt(a.var(ddof=1) / len(a) + b.var(ddof=1) / len(b))
    z = _z(diff, se)
    return StatTest("moment_z_test", label, float(z), float(2 * stats.norm.sf(abs(z))),
                    {"mean_a": float(a.mean()), "mean_b": float(b.mean()), "se": float(se)})


def _var_and_se(x):
    c = x - x.mean()
    v = np.mean(c**2)
    m4 = np.mean(c**4)
    return float(x.var(ddof=1)), float(np.sqrt(max(m4 - v * v, 0.0) / len(x)))


def var_z(a, b, label="variance"):
    va, sa = _var_and_se(np.asarray(a, float))
    vb, sb = _var_and_se(np.asarray(b, float))
    se = np.hypot(sa, sb)
    z = _z(va - vb, se)
    return StatTest("moment_z_test", label, float(z), float(2 * stats.norm.sf(abs(z))),
                    {"var_a": va, "var_b": vb, "se": float(se)})


def moment_z_exact(values, mean, label="mean"):
    """z-test of a sample mean against a known expectation."""
    values = np.asarray(values, float)
    se = values.std(ddof=1) / np.sqrt(len(values))
    z = _z(values.mean() - mean, se)
    return StatTest("moment_z_test", label, float(z), float(2 * stats.norm.sf(abs(z))),
                    {"estimate": float(values.mean()), "expected": float(mean), "se": float(se)})


def linear_statistic(x, circular=False):
    """sum_j x_j, or sum_j cos(theta_j) on the circle."""
    x = np.asarray(x, float)
    return np.cos(x).sum(axis=1) if circular else x.sum(axis=1)


def probe_intervals(a, b):
    """Two counting intervals from the pooled point quantiles."""
    pts = np.concatenate([np.ravel(a), np.ravel(b)])
    q = np.quantile(pts, [0.2, 0.5, 0.55, 0.95])
    return (float(q[0]), float(q[1])), (float(q[2]), float(q[3]))


def stat_compare(sample_a, sample_b, circular=False, alpha=DEFAULT_ALPHA, intervals=None):
    """Two-sample battery on point configurations.

    Parameters
    ----------
    sample_a, sample_b : ndarray, shape (m, n)
        Rows are configurations sorted in descending order. The two sides
        must have the same number of points per row.
    circular : bool
        Points are angles; the linear statistic becomes sum cos(theta).
    intervals : pair of (lo, hi), optional
        Counting intervals; by default chosen from the pooled quantiles.

    Returns
    -------
    Comparison
        Counts in two intervals (chi-square), the largest point (KS), mean
        and variance of the linear statistic (z-tests).
    """
    a = np.asarray(sample_a, float)
    b = np.asarray(sample_b, float)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[1]:
        raise ValueError("samples must be 2-d with equal row length")
    if min(len(a), len(b)) < 100:
        raise ValueError("need at least 100 samples per side")
    j1, j2 = intervals or probe_intervals(a, b)
    la, lb = linear_statistic(a, circular), linear_statistic(b, circular)
    tests = [
        counts_chi2(count_in(a, j1), count_in(b, j1), f"counts in ({j1[0]:.4g}, {j1[1]:.4g})"),
        counts_chi2(count_in(a, j2), count_in(b, j2), f"counts in ({j2[0]:.4g}, {j2[1]:.4g})"),
        ks_two_sample(a[:, 0], b[:, 0], "largest point"),
        mean_z(la, lb, "mean of linear statistic"),
        var_z(la, lb, "variance of linear statistic"),
    ]
    return Comparison(tests, alpha)


def stat_compare_exact(counts, genfn, alpha=DEFAULT_ALPHA):
    """Battery of sampled counts against an exact counting law.

    Parameters
    ----------
    counts : ndarray of int
        Number of points in the interval, one entry per sample.
    genfn : GenFnPoly
        Exact law of the count.
    """
    probs = np.asarray(genfn.coefficients, float)
    k = np.arange(len(probs))
    mean = float(np.sum(k * probs))
    second = float(np.sum(k * k * probs))
    c = np.asarray(counts, float)
    var = c.var(ddof=1)
    se_var = _var_and_se(c)[1]
    zv = _z(var - (second - mean * mean), se_var)
    tests = [
        counts_chi2_exact(counts, probs),
        moment_z_exact(c, mean, "count mean"),
        StatTest("moment_z_test", "count variance", float(zv), float(2 * stats.norm.sf(abs(zv))),
                 {"estimate": float(var), "expected": second - mean * mean, "se": se_var}),
    ]
    return Comparison(tests, alpha)
