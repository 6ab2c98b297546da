"""Orthogonal polynomials, Christoffel-Darboux kernels and Fredholm determinants."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import special

from .weights import Family, WeightSpec


# ---------------------------------------------------------------------------
# quadrature rules


@lru_cache(maxsize=64)
def _legendre(n):
    x, w = special.roots_legendre(n)
    return x, w


@lru_cache(maxsize=256)
def _jacobi(n, alpha, beta):
    # weight (1-t)^alpha (1+t)^beta on (-1, 1)
    x, w = special.roots_jacobi(n, alpha, beta)
    return x, w


def gauss_legendre(n, lo=-1.0, hi=1.0):
    """Gauss-Legendre nodes and weights on (lo, hi)."""
    t, w = _legendre(int(n))
    half = 0.5 * (hi - lo)
    return lo + half * (t + 1.0), half * w


def gauss_jacobi(n, lo, hi, p_lo=0.0, p_hi=0.0):
    """Rule for integrals of f(x) (x-lo)^p_lo (hi-x)^p_hi over (lo, hi).

    Returns nodes and log-weights (the weights can be tiny for large
    intervals and exponents).
    """
    if p_lo == 0.0 and p_hi == 0.0:
        x, w = gauss_legendre(n, lo, hi)
        return x, np.log(w)
    t, w = _jacobi(int(n), float(p_hi), float(p_lo))
    half = 0.5 * (hi - lo)
    x = lo + half * (t + 1.0)
    logw = np.log(w) + (1.0 + p_lo + p_hi) * np.log(half)
    return x, logw


def half_line_rule(n, s):
    """Gauss-Legendre rule on (s, inf) via x = s + t/(1-t)."""
    t, w = gauss_legendre(n, 0.0, 1.0)
    return s + t / (1.0 - t), w / (1.0 - t) ** 2


def effective_support(weight, degree):
    """Interval outside which w(x) p(x)^2 is negligible for deg p <= degree."""
    lo, hi = weight.support
    f = weight.family
    d = max(int(degree), 0)
    if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2):
        c = 0.5 if f is Family.GAUSSIAN_BETA1 else 1.0
        x = np.sqrt((2 * d + 1) / (2 * c)) + np.sqrt(100.0 / c)
        return (-x, x)
    if f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
        c = 0.5 if f is Family.LAGUERRE_BETA1 else 1.0
        p = weight.endpoint_exponents[0]
        return (0.0, (4 * d + 2 * abs(p) + 2) / c + 120.0 / c)
    return (lo, hi)


def measure_rule(weight, lo, hi, n):
    """Nodes and log-weights approximating the measure w(x) dx on (lo, hi).

    Endpoint singularities of the weight that coincide with ``lo`` or ``hi``
    are absorbed into a Gauss-Jacobi rule. Cauchy weights are integrated in
    the variable u = arctan(x).
    """
    slo, shi = weight.support
    lo, hi = max(lo, slo), min(hi, shi)
    if not hi > lo:
        return np.empty(0), np.empty(0)
    f = weight.family
    if not (np.isfinite(lo) and np.isfinite(hi)) and f not in (Family.CAUCHY_BETA1,
                                                                 Family.CAUCHY_BETA2):
        raise ValueError("measure_rule needs a finite interval; see effective_support")
    if f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
        u, wu = gauss_legendre(n, np.arctan(lo), np.arctan(hi))
        x = np.tan(u)
        # w(tan u) sec^2 u = cos(u)^(2e-2)
        logw = np.log(wu) + (2 * weight.cauchy_exponent - 2) * np.log(np.cos(u))
        return x, logw
    p_lo = weight.endpoint_exponents[0] if lo == slo else 0.0
    p_hi = weight.endpoint_exponents[1] if hi == shi else 0.0
    x, logw = gauss_jacobi(n, lo, hi, p_lo, p_hi)
    with np.errstate(divide="ignore"):
        corr = weight.log_weight(x)
        if p_lo:
            corr = corr - p_lo * np.log(x - slo)
        if p_hi:
            corr = corr - p_hi * np.log(shi - x)
    return x, logw + corr


# ---------------------------------------------------------------------------
# orthogonal polynomials


@dataclass(frozen=True)
class OPBasis:
    """Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.

    ``b[0]`` is unused; ``log_norms[k] = log <p_k, p_k>``.
    """

    weight: WeightSpec
    a: np.ndarray
    b: np.ndarray
    log_norms: np.ndarray

    @property
    def max_degree(self):
        return len(self.a) - 1

    def monic(self, x, n):
        """Monic polynomials p_0..p_{n-1} at x, shape (n, len(x))."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros((n,) + x.shape)
        out[0] = 1.0
        if n > 1:
            out[1] = x - self.a[0]
        for k in range(1, n - 1):
            out[k + 1] = (x - self.a[k]) * out[k] - self.b[k] * out[k - 1]
        return out

    def orthonormal(self, x, n, log_scale=None, derivative=False):
        """Orthonormal functions exp(log_scale/2) p_k(x)/sqrt(h_k), k < n.

        With ``log_scale`` omitted the weight itself is used, giving the
        orthonormal functions phi_k = sqrt(w) p_k / sqrt(h_k). When
        ``derivative`` is true the derivative of the polynomial part (same
        scale factor) is returned as well.
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if n > self.max_degree + 1:
            raise ValueError("basis has too few recurrence coefficients")
        if log_scale is None:
            log_scale = self.weight.log_weight(x)
        v = np.zeros((n,) + x.shape)
        d = np.zeros((n,) + x.shape) if derivative else None
        v[0] = np.exp(0.5 * (log_scale - self.log_norms[0]))
        sb = np.sqrt(self.b)
        if n > 1:
            v[1] = (x - self.a[0]) * v[0] / sb[1]
            if derivative:
                d[1] = v[0] / sb[1]
        for k in range(1, n - 1):
            v[k + 1] = ((x - self.a[k]) * v[k] - sb[k] * v[k - 1]) / sb[k + 1]
            if derivative:
                d[k + 1] = (v[k] + (x - self.a[k]) * d[k] - sb[k] * d[k - 1]) / sb[k + 1]
        return (v, d) if derivative else v


def _jacobi_recurrence(n, al, be):
    """Monic Jacobi recurrence for (1-t)^al (1+t)^be on (-1, 1)."""
    k = np.arange(n + 1, dtype=float)
    s = al + be
    a = np.empty(n + 1)
    a[0] = (be - al) / (s + 2)
    kk = k[1:]
    a[1:] = (be**2 - al**2) / ((2 * kk + s) * (2 * kk + s + 2))
    b = np.zeros(n + 1)
    if n >= 1:
        b[1] = 4 * (1 + al) * (1 + be) / ((2 + s) ** 2 * (3 + s))
    kk = k[2:]
    b[2:] = (4 * kk * (kk + al) * (kk + be) * (kk + s)
             / ((2 * kk + s) ** 2 * (2 * kk + s + 1) * (2 * kk + s - 1)))
    logh0 = ((s + 1) * np.log(2.0) + special.gammaln(al + 1) + special.gammaln(be + 1)
             - special.gammaln(s + 2))
    return a, b, logh0


def op_basis(weight, max_degree):
    """Recurrence coefficients and norms from closed classical formulas.

    Parameters
    ----------
    weight : WeightSpec
        Any real-line family. The Cauchy families use the Romanovski
        recurrence and are limited to degrees with finite moments.
    max_degree : int
    """
    n = int(max_degree)
    f = weight.family
    k = np.arange(n + 1, dtype=float)
    if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2):
        c = 0.5 if f is Family.GAUSSIAN_BETA1 else 1.0
        a = np.zeros(n + 1)
        b = k / (2 * c)
        logh0 = 0.5 * np.log(np.pi / c)
    elif f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
        c = 0.5 if f is Family.LAGUERRE_BETA1 else 1.0
        p = weight.endpoint_exponents[0]
        a = (2 * k + p + 1) / c
        b = k * (k + p) / c**2
        logh0 = special.gammaln(p + 1) - (p + 1) * np.log(c)
    elif f in (Family.JACOBI_BETA1, Family.JACOBI_BETA2):
        p_lo, p_hi = weight.endpoint_exponents
        a, b, logh0 = _jacobi_recurrence(n, p_hi, p_lo)
    elif f is Family.JACOBI_UNIT:
        at, bt, logh0 = _jacobi_recurrence(n, weight.b, weight.a)
        a = 0.5 * (at + 1.0)
        b = 0.25 * bt
        logh0 = logh0 - (weight.a + weight.b + 1) * np.log(2.0)
    elif f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
        e = weight.cauchy_exponent
        if not n < e - 0.5:
            raise ValueError(f"Cauchy weight has no orthogonal polynomial of degree {n}")
        a = np.zeros(n + 1)
        b = k * (2 * e - k) / ((2 * k - 2 * e + 1) * (2 * k - 2 * e - 1))
        logh0 = 0.5 * np.log(np.pi) + special.gammaln(e - 0.5) - special.gammaln(e)
    else:
        raise ValueError(f"no orthogonal polynomial basis for {f.value}")
    b = np.asarray(b, dtype=float)
    b[0] = 0.0
    with np.errstate(divide="ignore"):
        log_norms = logh0 + np.concatenate([[0.0], np.cumsum(np.log(b[1:]))])
    return OPBasis(weight, np.asarray(a, float), b, log_norms)


# ---------------------------------------------------------------------------
# Christoffel-Darboux kernel


@dataclass(frozen=True)
class CDKernel:
    """K_N(x, y) = sum_{j<N} phi_j(x) phi_j(y) for a beta=2 weight."""

    basis: OPBasis
    n: int

    def _phi(self, x, derivative=False):
        return self.basis.orthonormal(x, self.n + 1, derivative=derivative)

    def density(self, x):
        """One-point density K_N(x, x), via the derivative form."""
        x = np.asarray(x, dtype=float)
        v, d = self._phi(x.ravel(), derivative=True)
        n = self.n
        sb = np.sqrt(self.basis.b[n])
        out = sb * (d[n] * v[n - 1] - d[n - 1] * v[n])
        return out.reshape(x.shape)

    def __call__(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        shape = x.shape
        x, y = x.ravel(), y.ravel()
        n = self.n
        vx, vy = self._phi(x), self._phi(y)
        sb = np.sqrt(self.basis.b[n])
        diff = x - y
        near = np.abs(diff) <= 1e-7 * (1.0 + np.abs(x))
        with np.errstate(divide="ignore", invalid="ignore"):
            off = sb * (vx[n] * vy[n - 1] - vx[n - 1] * vy[n]) / diff
        direct = np.sum(vx[:n] * vy[:n], axis=0)
        return np.where(near, direct, off).reshape(shape)


def cd_kernel(weight, n):
    """Christoffel-Darboux kernel of the unitary ensemble UE_n(weight)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return CDKernel(op_basis(weight, n), int(n))


def chiral_to_unitary(weight_kind, mu, a=0.0):
    """Weight in y = x^2 of chUE(x^(2 mu) w2(x)) for an even w2.

    ``weight_kind`` is "gaussian" (w2 = exp(-x^2)) or "jacobi"
    (w2 = (1-x^2)^a on (-1, 1)). The chiral density in x is 2x times the
    returned unitary density evaluated at x^2.
    """
    if weight_kind == "gaussian":
        return WeightSpec.laguerre(mu - 0.5)
    if weight_kind == "jacobi":
        return WeightSpec.jacobi_unit(mu - 0.5, a)
    raise ValueError(weight_kind)


# ---------------------------------------------------------------------------
# Bessel functions


def bessel_j_sequence(x, nmax):
    """J_0(x), ..., J_nmax(x) by backward (Miller) recurrence.

    Parameters
    ----------
    x : array_like
        Non-negative real arguments.
    nmax : int

    Returns
    -------
    ndarray, shape (nmax + 1,) + x.shape
    """
    x = np.asarray(x, dtype=float)
    shape = x.shape
    x = np.atleast_1d(x).ravel()
    if np.any(x < 0):
        raise ValueError("arguments must be non-negative")
    xmax = float(x.max()) if x.size else 0.0
    top = max(nmax, int(np.ceil(xmax))) + 30 + int(np.sqrt(40 * max(nmax, xmax, 1.0)))
    top += top % 2
    out = np.zeros((nmax + 1, x.size))
    pos = x > 0
    xp = x[pos]
    if xp.size:
        jn1 = np.zeros_like(xp)
        jn = np.full_like(xp, 1e-300)
        norm = np.zeros_like(xp)
        store = np.zeros((nmax + 1, xp.size))
        for k in range(top, 0, -1):
            jm1 = (2 * k / xp) * jn - jn1
            jn1, jn = jn, jm1
            idx = k - 1
            if idx <= nmax:
                store[idx] = jn
            if idx % 2 == 0 and idx > 0:
                norm += 2 * jn
            big = np.abs(jn) > 1e250
            if np.any(big):
                jn[big] *= 1e-250
                jn1[big] *= 1e-250
                norm[big] *= 1e-250
                store[:, big] *= 1e-250
        norm += jn
        out[:, pos] = store / norm
    out[0, ~pos] = 1.0
    return out.reshape((nmax + 1,) + shape)


def bessel_j(n, x):
    """Integer-order J_n(x), n >= 0, on an array of non-negative x."""
    return bessel_j_sequence(x, n)[n]


# ---------------------------------------------------------------------------
# continuous kernels and Nystrom determinants


def sine_kernel(x, y):
    return np.sinc(np.subtract(x, y))


def sine_kernel_sym(sign):
    """K^{+} or K^{-}: sinc(pi(x-y)) +/- sinc(pi(x+y))."""
    def kern(x, y):
        return np.sinc(np.subtract(x, y)) + sign * np.sinc(np.add(x, y))
    return kern


def bessel_kernel(alpha):
    """Continuous Bessel kernel on (0, inf) for integer order alpha >= 0."""
    alpha = int(alpha)

    def parts(x):
        r = np.sqrt(x)
        seq = bessel_j_sequence(r, alpha + 1)
        j = seq[alpha]
        jp1 = seq[alpha + 1]
        jm1 = seq[alpha - 1] if alpha >= 1 else -seq[1]
        return r, j, 0.5 * (jm1 - jp1), jm1, jp1

    def kern(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        rx, jx, dx, _, _ = parts(x)
        ry, jy, dy, _, _ = parts(y)
        rd, jd, _, jm1, jp1 = parts(x)
        diag = 0.25 * (jd**2 - jp1 * jm1)
        with np.errstate(divide="ignore", invalid="ignore"):
            off = (jx * ry * dy - rx * dx * jy) / (2 * (x - y))
        return np.where(x == y, diag, off)

    return kern


class FredholmConvergenceError(RuntimeError):
    def __init__(self, message, last_values):
        super().__init__(message)
        self.last_values = last_values


@dataclass
class KernelOperator:
    """A symmetric kernel discretised on Gauss-Legendre nodes of an interval.

    ``matrix[i, j] = sqrt(weights[i]) K(nodes[i], nodes[j]) sqrt(weights[j])``.
    """

    kernel: Callable
    interval: tuple
    kernel_id: str
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    matrix: np.ndarray = field(repr=False)

    @property
    def n_nodes(self):
        return len(self.nodes)

    def eigenvalues(self):
        return np.linalg.eigvalsh(self.matrix)

    def refine(self, n_nodes):
        return kernel_operator(self.kernel, self.interval, n_nodes, self.kernel_id)


def kernel_operator(kernel, interval, n_nodes, kernel_id="custom"):
    lo, hi = float(interval[0]), float(interval[1])
    if hi <= lo:
        x, w = np.empty(0), np.empty(0)
    elif np.isinf(hi):
        x, w = half_line_rule(n_nodes, lo)
    else:
        x, w = gauss_legendre(n_nodes, lo, hi)
    sw = np.sqrt(w)
    m = sw[:, None] * kernel(x[:, None], x[None, :]) * sw[None, :]
    m = 0.5 * (m + m.T)
    return KernelOperator(kernel, (lo, hi), kernel_id, x, w, m)


def nystrom_fredholm_det(kernel, z, n_nodes=16, tol=1e-12, cap=512, full_output=False):
    """det(I - z K) by Nystrom discretisation with node doubling.

    Parameters
    ----------
    kernel : KernelOperator
    z : complex
    n_nodes : int
        Starting node count; doubled until successive values differ by
        less than ``tol``.
    cap : int
        Largest node count attempted.
    full_output : bool
        Also return ``(achieved_tolerance, nodes_used)``.
    """
    z = complex(z)
    if z == 0 or kernel.interval[1] <= kernel.interval[0]:
        return (1.0 + 0j, (0.0, 0)) if full_output else 1.0 + 0j

    def value(n):
        lam = kernel.refine(n).eigenvalues()
        return np.prod(1.0 - z * lam)

    n = max(int(n_nodes), 2)
    prev = value(n)
    while True:
        if 2 * n > cap:
            raise FredholmConvergenceError(
                f"Nystrom determinant not converged at {n} nodes", (prev,))
        cur = value(2 * n)
        err = abs(cur - prev)
        if err < tol:
            return (cur, (err, 2 * n)) if full_output else cur
        prev, n = cur, 2 * n


# ---------------------------------------------------------------------------
# discrete kernels


@dataclass(frozen=True)
class DiscreteBessel:
    """Discrete Bessel kernel with parameter s > 0."""

    s: float

    def __post_init__(self):
        if not self.s > 0:
            raise ValueError("s must be positive")

    def matrix(self, indices):
        idx = np.asarray(indices, dtype=int)
        if idx.size == 0:
            return np.zeros((0, 0))
        top = int(idx.max()) + 1
        extra = top + 40 + int(4 * self.s)
        j = bessel_j_sequence(self.s, extra)
        tail = np.cumsum((j**2)[::-1])[::-1]   # tail[m] = sum_{k>=m} J_k^2
        n1, n2 = idx[:, None], idx[None, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            off = self.s * (j[n1] * j[n2 + 1] - j[n1 + 1] * j[n2]) / (2.0 * (n1 - n2))
        diag = tail[idx + 1]
        return np.where(n1 == n2, diag[:, None] * np.ones_like(off), off)

    def __call__(self, n1, n2):
        n1, n2 = np.broadcast_arrays(np.asarray(n1, int), np.asarray(n2, int))
        idx = np.unique(np.concatenate([n1.ravel(), n2.ravel()]))
        m = self.matrix(idx)
        return m[np.searchsorted(idx, n1), np.searchsorted(idx, n2)]


@dataclass(frozen=True)
class DiscreteLaguerre:
    """K^d(n1, n2) = int_s^inf psi_n1 psi_n2 dx for Laguerre functions psi_n."""

    alpha: float
    s: float
    n_quad: int = 64

    def __post_init__(self):
        if not self.alpha > -1 or not self.s > 0:
            raise ValueError("need alpha > -1 and s > 0")

    def functions(self, n, x):
        k = np.arange(n)[:, None]
        lognorm = 0.5 * (special.gammaln(k + 1) - special.gammaln(k + self.alpha + 1))
        return (np.exp(lognorm + 0.5 * self.alpha * np.log(x) - 0.5 * x)
                * special.eval_genlaguerre(k, self.alpha, x))

    def _matrix_at(self, n, n_quad):
        if self.s < 8.0:
            # complement over (0, s): Gauss-Jacobi absorbs the x^alpha endpoint
            x, logw = gauss_jacobi(n_quad, 0.0, self.s, self.alpha, 0.0)
            k = np.arange(n)[:, None]
            lognorm = 0.5 * (special.gammaln(k + 1) - special.gammaln(k + self.alpha + 1))
            phi = np.exp(lognorm - 0.5 * x) * special.eval_genlaguerre(k, self.alpha, x)
            return np.eye(n) - (phi * np.exp(logw)) @ phi.T
        top = self.s + 4 * n + 2 * abs(self.alpha) + 120.0
        edges = np.linspace(self.s, top, int(np.ceil((top - self.s) / 8.0)) + 1)
        t, w = _legendre(n_quad)
        half = 0.5 * np.diff(edges)
        x = (edges[:-1, None] + half[:, None] * (t[None, :] + 1)).ravel()
        ww = (half[:, None] * w[None, :]).ravel()
        psi = self.functions(n, x)
        return (psi * ww) @ psi.T

    def matrix(self, indices):
        idx = np.asarray(indices, dtype=int)
        if idx.size == 0:
            return np.zeros((0, 0))
        n = int(idx.max()) + 1
        m1 = self._matrix_at(n, self.n_quad)
        m2 = self._matrix_at(n, 2 * self.n_quad)
        if np.max(np.abs(m1 - m2)) > 1e-13:
            raise FredholmConvergenceError("discrete Laguerre quadrature not converged",
                                           (m1, m2))
        return m2[np.ix_(idx, idx)]

    def __call__(self, n1, n2):
        n1, n2 = np.broadcast_arrays(np.asarray(n1, int), np.asarray(n2, int))
        idx = np.unique(np.concatenate([n1.ravel(), n2.ravel()]))
        m = self.matrix(idx)
        return m[np.searchsorted(idx, n1), np.searchsorted(idx, n2)]


def discrete_kernels(spec):
    """Entry function for a discrete kernel specification.

    ``spec`` is ``("bessel", s)`` or ``("laguerre", alpha, s)`` or an
    instance of :class:`DiscreteBessel` / :class:`DiscreteLaguerre`.
    """
    if isinstance(spec, (DiscreteBessel, DiscreteLaguerre)):
        return spec
    kind, *args = spec
    if kind == "bessel":
        return DiscreteBessel(*args)
    if kind == "laguerre":
        return DiscreteLaguerre(*args)
    raise ValueError(f"unknown discrete kernel {kind!r}")


def discrete_fredholm_det(kernel, xi, index_set=None, start=None, cap=4096, tol=1e-12,
                          full_output=False):
    """det[I - xi K] over a finite index set or the tail {start, start+1, ...}.

    For a tail the truncation size is doubled from ``start + 16`` until the
    value changes by less than ``tol``.
    """
    xi = complex(xi)
    if index_set is not None:
        idx = np.asarray(list(index_set), dtype=int)
        if idx.size == 0 or xi == 0:
            return (1.0 + 0j, (0.0, idx.size)) if full_output else 1.0 + 0j
        lam = np.linalg.eigvalsh(kernel.matrix(idx))
        val = np.prod(1.0 - xi * lam)
        return (val, (0.0, idx.size)) if full_output else val
    if start is None:
        raise ValueError("give index_set or start")
    if xi == 0:
        return (1.0 + 0j, (0.0, 0)) if full_output else 1.0 + 0j

    def value(m):
        lam = np.linalg.eigvalsh(kernel.matrix(np.arange(start, start + m)))
        return np.prod(1.0 - xi * lam)

    m = 16
    prev = value(m)
    while True:
        if 2 * m > cap:
            raise FredholmConvergenceError("discrete truncation not converged", (prev,))
        cur = value(2 * m)
        err = abs(cur - prev)
        if err < tol:
            return (cur, (err, 2 * m)) if full_output else cur
        prev, m = cur, 2 * m
