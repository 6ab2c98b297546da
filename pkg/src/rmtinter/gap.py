"""Gap probabilities and their generating functions at finite N."""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .ensembles import free_angle_count, orthogonal_group_exponents
from .kernels import _legendre, effective_support, measure_rule, op_basis
from .weights import Family, WeightSpec

COEF_FLOOR = -1e-10
EIG_TOL = 1e-8


class QuadratureError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# generating function polynomials


@dataclass(frozen=True)
class GenFnPoly:
    """E(k; J) for k = 0..N, i.e. the coefficients of powers of (1 - xi)."""

    interval: tuple
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=float)
        if np.any(c < COEF_FLOOR):
            raise ValueError(f"negative gap probability {c.min():.3e}")
        object.__setattr__(self, "coefficients", np.clip(c, 0.0, None))

    def __call__(self, xi):
        return P.polyval(1.0 - np.asarray(xi, dtype=complex), self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def prob(self, k):
        c = self.coefficients
        return float(c[k]) if 0 <= k < len(c) else 0.0

    def combine(self, other):
        """Count law of the superposition of two independent processes."""
        return GenFnPoly(self.interval, np.convolve(self.coefficients, other.coefficients))

    @classmethod
    def from_eigenvalues(cls, lam, interval, complement=None):
        """Coefficients of prod_l ((1 - lambda_l) + t lambda_l).

        ``complement`` optionally supplies 1 - lambda_l computed directly.
        """
        lam = np.asarray(lam, dtype=float)
        if lam.size and (lam.min() < -EIG_TOL or lam.max() > 1 + EIG_TOL):
            raise ValueError("overlap eigenvalue outside [0, 1]")
        lam = np.clip(lam, 0.0, 1.0)
        comp = 1.0 - lam if complement is None else np.clip(np.asarray(complement, float), 0.0, 1.0)
        c = np.array([1.0])
        for l, q in zip(lam, comp):
            c = np.convolve(c, [q, l])
        return cls(interval, c)


@dataclass(frozen=True)
class CountStats:
    mean: float
    variance: float
    interval: tuple


def counting_stats(g):
    """Mean and variance of the count from the coefficients of ``g``."""
    k = np.arange(len(g.coefficients))
    c = g.coefficients
    mean = float(np.sum(k * c))
    var = float(max(np.sum((k - mean) ** 2 * c), 0.0))
    return CountStats(mean, var, g.interval)


# ---------------------------------------------------------------------------
# unitary ensembles


def _circular_overlap(n, a, b):
    length = b - a
    if length >= 2 * np.pi:
        return np.eye(n, dtype=complex)
    d = np.arange(n)[:, None] - np.arange(n)[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        g = (np.exp(1j * d * b) - np.exp(1j * d * a)) / (2j * np.pi * d)
    g[d == 0] = length / (2 * np.pi)
    return g


def overlap_matrix(weight, n, J, tol=1e-13, cap=8192):
    """G_jk = int_J phi_j phi_k for the orthonormal functions of ``weight``.

    For the circular weight the basis is exp(i j theta)/sqrt(2 pi) and J is
    an arc (a, b) with a < b.
    """
    a, b = float(J[0]), float(J[1])
    if weight.is_circular:
        return _circular_overlap(n, a, b)
    lo, hi = weight.support
    a, b = max(a, lo), min(b, hi)
    if not b > a:
        return np.zeros((n, n))
    basis = op_basis(weight, n - 1)
    elo, ehi = effective_support(weight, n)
    a, b = max(a, elo), min(b, ehi)
    if not b > a:
        return np.zeros((n, n))
    m = max(32, 2 * n + 16)
    prev, last_diff = None, np.inf
    while m <= cap:
        x, logw = measure_rule(weight, a, b, m)
        v = basis.orthonormal(x, n, log_scale=logw)
        g = v @ v.T
        if prev is not None:
            # relative to the largest entry: complement overlaps can be tiny
            diff = np.max(np.abs(g - prev)) / max(np.max(np.abs(g)), 1e-300)
            if diff < tol:
                return g
            # rounding noise stalls or grows with the node count: stop at its floor
            if diff > 0.5 * last_diff and last_diff < 1e-9:
                return prev if diff > last_diff else g
            last_diff = diff
        prev, m = g, 2 * m
    raise QuadratureError(f"overlap quadrature not converged on {J}")


def _complement_overlap(weight, n, J):
    a, b = float(J[0]), float(J[1])
    if weight.is_circular:
        if b - a >= 2 * np.pi:
            return np.zeros((n, n), dtype=complex)
        return _circular_overlap(n, b, a + 2 * np.pi)
    lo, hi = weight.support
    g = np.zeros((n, n))
    if a > lo:
        g = g + overlap_matrix(weight, n, (lo, a))
    if b < hi:
        g = g + overlap_matrix(weight, n, (b, hi))
    return g


def overlap_spectrum(weight, n, J):
    """Eigenvalues lambda of G_J together with 1 - lambda.

    1 - lambda is taken from the overlap of the complement of J rather than
    by subtraction, which keeps it accurate when lambda is close to 1.
    """
    g = overlap_matrix(weight, n, J)
    _, vec = np.linalg.eigh(g)
    gc = _complement_overlap(weight, n, J)
    lam = np.real(np.einsum("ji,jk,ki->i", np.conj(vec), g, vec))
    comp = np.real(np.einsum("ji,jk,ki->i", np.conj(vec), gc, vec))
    return lam, comp


def overlap_eigenvalues(weight, n, J):
    return overlap_spectrum(weight, n, J)[0]


def genfn_ue(weight, n, J, xi):
    """det[1 - xi G_J], the generating function of UE_n(weight) counts in J."""
    lam, comp = overlap_spectrum(weight, n, J)
    return complex(np.prod(comp + (1.0 - complex(xi)) * lam))


def genfn_poly(weight, n, J):
    """All gap probabilities E(k; J), k = 0..n, of UE_n(weight)."""
    lam, comp = overlap_spectrum(weight, n, J)
    return GenFnPoly.from_eigenvalues(lam, tuple(J), comp)


# ---------------------------------------------------------------------------
# orthogonal groups and the COE/CSE formulas


def orthogonal_group_poly(n, det_sign, theta):
    """Count law of the free eigen-angles of O^{det_sign}(n) in (0, theta).

    The angles map to u = sin^2(theta/2) in (0, 1) where they form a unitary
    ensemble with weight u^a (1-u)^b.
    """
    if not 0 <= theta <= np.pi:
        raise ValueError("theta must lie in [0, pi]")
    m = free_angle_count(n, det_sign)
    if m == 0:
        return GenFnPoly((0.0, theta), np.array([1.0]))
    a, b = orthogonal_group_exponents(n, det_sign)
    u = np.sin(0.5 * theta) ** 2
    g = genfn_poly(WeightSpec.jacobi_unit(a, b), m, (0.0, u))
    return GenFnPoly((0.0, theta), g.coefficients)


def genfn_orthogonal_group(n, det_sign, theta, xi):
    return complex(orthogonal_group_poly(n, det_sign, theta)(xi))


def coe_poly(n, phi):
    """E(k; (0, phi)) for COE_n from the orthogonal group counts.

    With t = 1 - xi the generating function is
    (t P_nu(t^2) + P_{-nu}(t^2)) / (1 + t), P_s the O^s(n+1) polynomial in
    (1 - xi_hat) and nu = (-1)^n.
    """
    nu = 1 if n % 2 == 0 else -1
    p_nu = orthogonal_group_poly(n + 1, nu, phi / 2).coefficients
    p_mu = orthogonal_group_poly(n + 1, -nu, phi / 2).coefficients
    sq_nu = np.zeros(2 * len(p_nu) - 1)
    sq_nu[::2] = p_nu
    sq_mu = np.zeros(2 * len(p_mu) - 1)
    sq_mu[::2] = p_mu
    num = P.polyadd(P.polymulx(sq_nu), sq_mu)
    quo, rem = P.polydiv(num, [1.0, 1.0])
    if np.max(np.abs(rem)) > 1e-10:
        raise ArithmeticError("COE numerator not divisible by 1 + t")
    c = np.zeros(n + 1)
    c[: min(len(quo), n + 1)] = quo[: n + 1]
    return GenFnPoly((0.0, phi), c)


def genfn_coe(n, phi, xi):
    """COE_n generating function on the arc (0, phi)."""
    if not 0 <= phi <= 2 * np.pi:
        raise ValueError("phi must lie in [0, 2 pi]")
    xi = complex(xi)
    xh = 2 * xi - xi**2
    nu = 1 if n % 2 == 0 else -1
    e_nu = genfn_orthogonal_group(n + 1, nu, phi / 2, xh)
    e_mu = genfn_orthogonal_group(n + 1, -nu, phi / 2, xh)
    return ((1 - xi) * e_nu + e_mu) / (2 - xi)


def cse_poly(n, theta):
    """E(k; (-theta, theta)) for CSE_n."""
    p = orthogonal_group_poly(2 * n + 1, 1, theta).coefficients
    m = orthogonal_group_poly(2 * n + 1, -1, theta).coefficients
    c = np.zeros(n + 1)
    c[: len(p)] += 0.5 * p
    c[: len(m)] += 0.5 * m
    return GenFnPoly((-theta, theta), c)


def genfn_cse(n, theta, xi):
    """CSE_n generating function on the arc (-theta, theta)."""
    if not 0 <= theta <= np.pi:
        raise ValueError("theta must lie in [0, pi]")
    return 0.5 * (genfn_orthogonal_group(2 * n + 1, 1, theta, xi)
                  + genfn_orthogonal_group(2 * n + 1, -1, theta, xi))


def cue_poly(n, phi):
    return genfn_poly(WeightSpec.circular(), n, (0.0, phi))


# ---------------------------------------------------------------------------
# brute-force nested quadrature


def _truncation(weight, beta, n):
    """Finite integration range and segment edges for the nested quadrature."""
    lo, hi = weight.support
    f = weight.family
    if weight.is_circular:
        return np.linspace(-np.pi, np.pi, 5)
    if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2):
        c = 0.5 if f is Family.GAUSSIAN_BETA1 else 1.0
        grid = np.linspace(0.5, 20, 400)
        ok = -c * grid**2 + beta * (n - 1) * np.log(2 * grid) < -45
        top = grid[np.argmax(ok)]
        pos = np.unique(np.concatenate([[0.0], np.geomspace(0.75, top, 6)]))
        pos = pos[pos <= top]
        return np.concatenate([-pos[::-1], pos[1:]])
    if f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
        c = 0.5 if f is Family.LAGUERRE_BETA1 else 1.0
        p = weight.endpoint_exponents[0]
        grid = np.linspace(1, 400, 4000)
        ok = -c * grid + (beta * (n - 1) + abs(p)) * np.log(grid) < -45
        top = grid[np.argmax(ok)]
        return np.concatenate([[0.0], np.geomspace(1.0, top, 8)])
    if f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
        raise ValueError("brute-force quadrature does not support Cauchy weights")
    return np.linspace(lo, hi, 5)


def _pair_factor(weight, beta):
    if weight.is_circular:
        return lambda d: np.abs(2 * np.sin(0.5 * d)) ** beta
    return lambda d: np.abs(d) ** beta


def _nested_sums(beta, weight, n, edges, J, n_q, factor, chunk=250_000):
    """Sums over the ordered region x_1 > ... > x_n of the joint density.

    Returns ``(by_count, by_count_factor)``: density mass split by the number
    of points in J, without and with the product of ``factor`` over points.
    """
    t, wq = _legendre(n_q)
    t = 0.5 * (t + 1)
    wq = 0.5 * wq
    pair = _pair_factor(weight, beta)
    slo, shi = weight.support
    compact = weight.family in (Family.JACOBI_BETA1, Family.JACOBI_BETA2, Family.JACOBI_UNIT)
    powers = [2 * p + 1 for p in weight.endpoint_exponents] if compact else \
        [weight.endpoint_exponents[0]]
    if not float(beta).is_integer() or not all(float(p).is_integer() for p in powers):
        # t -> t^2 (3 - 2t) on every panel turns an endpoint power p into 3p + 2
        wq = wq * 6 * t * (1 - t)
        t = t * t * (3 - 2 * t)
    if compact:
        # x = lo + span (1 - cos(pi u))/2 smooths half-integer endpoint powers
        span = shi - slo

        def to_x(u):
            return slo + 0.5 * span * (1 - np.cos(np.pi * u))

        def jac(u):
            return 0.5 * np.pi * span * np.sin(np.pi * u)
        edges = np.arccos(np.clip(1 - 2 * (np.asarray(edges) - slo) / span, -1, 1)) / np.pi
    else:
        def to_x(u):
            return u

        def jac(u):
            return 1.0
    lo_e, hi_e = edges[:-1], edges[1:]
    ja, jb = J if J is not None else (np.inf, -np.inf)
    tot0 = np.zeros(n + 1)
    tot1 = np.zeros(n + 1)

    def wfun(x):
        return np.exp(weight.log_weight(x))

    def expand(xs, w0, w1, cnt, upper):
        k = xs.shape[1]
        a = np.broadcast_to(lo_e[None, :], (len(upper), len(lo_e)))
        b = np.minimum(hi_e[None, :], upper[:, None])
        valid = b > a
        pi, si = np.nonzero(valid)
        a, b = a[pi, si], b[pi, si]
        width = b - a
        u = a[:, None] + width[:, None] * t[None, :]
        x = to_x(u)
        qw = width[:, None] * wq[None, :]
        dens = wfun(x) * jac(u)
        for j in range(k):
            dens = dens * pair(xs[pi, j][:, None] - x)
        w0n = (w0[pi][:, None] * qw * dens).ravel()
        f = factor(x) if factor is not None else 1.0
        w1n = (w1[pi][:, None] * qw * dens * f).ravel()
        if J is None:
            inj = np.zeros(x.shape, int)
        elif weight.is_circular:
            off = np.mod(x - ja, 2 * np.pi)
            inj = ((off > 0) & (off < jb - ja)).astype(int)
        else:
            inj = ((x > ja) & (x < jb)).astype(int)
        cn = (cnt[pi][:, None] + inj).ravel()
        xsn = np.concatenate([np.repeat(xs[pi], n_q, axis=0), x.reshape(-1, 1)], axis=1)
        return xsn, w0n, w1n, cn, u.ravel()

    def recurse(xs, w0, w1, cnt, upper):
        if xs.shape[1] == n:
            np.add.at(tot0, cnt, w0)
            np.add.at(tot1, cnt, w1)
            return
        step = max(1, chunk // (n_q * len(lo_e)))
        for s in range(0, len(upper), step):
            sl = slice(s, s + step)
            out = expand(xs[sl], w0[sl], w1[sl], cnt[sl], upper[sl])
            recurse(*out)

    recurse(np.empty((1, 0)), np.ones(1), np.ones(1), np.zeros(1, int), np.array([edges[-1]]))
    return tot0, tot1


def bruteforce_counts(beta, weight, n, J=None, factor=None, rtol=1e-8, max_q=48):
    """Gap probabilities by direct n-dimensional quadrature of the joint density.

    Parameters
    ----------
    beta : float
    weight : WeightSpec
        Circular or a Gaussian/Laguerre/Jacobi weight.
    n : int
        At most 4.
    J : tuple, optional
        Interval whose point count is tracked.
    factor : callable, optional
        Per-point multiplicative factor u(x); the returned ``weighted`` array
        holds <prod u(x_l) ; count = k>.
    rtol : float
        Target change between successive node counts.

    Returns
    -------
    dict with ``probs`` (E(k; J), k = 0..n), ``weighted`` and ``error``.
    """
    if n > 4:
        raise ValueError("brute-force quadrature is limited to n <= 4")
    edges = _truncation(weight, beta, n)
    extra = []
    if J is not None:
        ends = [np.pi - np.mod(np.pi - v, 2 * np.pi) for v in J] if weight.is_circular else J
        extra = [v for v in ends if edges[0] < v < edges[-1]]
    edges = np.unique(np.concatenate([edges, extra]))
    prev = None
    n_q = 8
    while n_q <= max_q:
        t0, t1 = _nested_sums(beta, weight, n, edges, J, n_q, factor)
        z = t0.sum()
        cur = (t0 / z, t1 / z)
        if prev is not None:
            err = max(np.max(np.abs(cur[0] - prev[0])), np.max(np.abs(cur[1] - prev[1]))
                      / max(np.abs(cur[1]).sum(), 1e-300))
            if err < rtol:
                return {"probs": cur[0], "weighted": cur[1], "error": err, "n_q": n_q,
                        "norm": z}
        prev = cur
        n_q = int(n_q * 1.5)
    raise QuadratureError("brute-force quadrature did not reach the target accuracy")


def bruteforce_genfn(beta, weight, n, J, xi, **kw):
    """<prod (1 - xi 1_{x_l in J})> by nested quadrature (n <= 4)."""
    probs = bruteforce_counts(beta, weight, n, J, **kw)["probs"]
    return complex(P.polyval(1 - complex(xi), probs))


def bruteforce_average(beta, weight, n, factor, **kw):
    """<prod u(x_l)> over the ensemble by nested quadrature (n <= 4)."""
    return float(np.sum(bruteforce_counts(beta, weight, n, None, factor=factor, **kw)["weighted"]))


# ---------------------------------------------------------------------------
# Monte Carlo counts


@dataclass(frozen=True)
class CountDistribution:
    frequencies: np.ndarray
    stderr: np.ndarray
    n_samples: int

    @property
    def mean(self):
        k = np.arange(len(self.frequencies))
        return float(np.sum(k * self.frequencies))


def count_in(samples, J, circular=False):
    """Number of points of each row of ``samples`` inside J."""
    samples = np.asarray(samples)
    a, b = J
    if circular:
        inside = np.mod(samples - a, 2 * np.pi) < (b - a)
        inside &= np.mod(samples - a, 2 * np.pi) > 0
    else:
        inside = (samples > a) & (samples < b)
    return inside.sum(axis=-1)


def mc_gap_counts(sampler, J, n_samples, rng, circular=False):
    """Empirical count distribution in J from ``sampler(rng, size)`` batches."""
    samples = sampler(rng, n_samples)
    counts = count_in(samples, J, circular)
    top = samples.shape[1] if samples.ndim > 1 else 1
    freq = np.bincount(counts, minlength=top + 1) / n_samples
    se = np.sqrt(freq * (1 - freq) / n_samples)
    return CountDistribution(freq, se, n_samples)
