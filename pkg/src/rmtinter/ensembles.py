"""Samplers for the classical random matrix ensembles.

Every batch sampler returns an array of shape ``(size, n)`` whose rows are
sorted in descending order. The ``sample_*`` wrappers return single
:class:`Spectrum` objects.
"""

import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import special

from .weights import Family, WeightSpec

TIE_TOL = 1e-12


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Spectrum:
    """An ordered point configuration x_1 > x_2 > ... > x_N.

    Circular spectra hold eigen-angles in (-pi, pi].
    """

    values: np.ndarray
    circular: bool = False
    label_origin: Optional[dict] = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).ravel()
        object.__setattr__(self, "values", v)
        if v.size > 1 and np.any(np.diff(v) >= -TIE_TOL):
            raise ValueError("spectrum values must be strictly decreasing")
        if self.circular and v.size and (v.max() > np.pi or v.min() <= -np.pi):
            raise ValueError("circular values must lie in (-pi, pi]")

    @classmethod
    def from_unsorted(cls, values, circular=False, label_origin=None):
        return cls(np.sort(np.asarray(values, dtype=float).ravel())[::-1], circular, label_origin)

    def __len__(self):
        return self.values.size


@dataclass(frozen=True)
class EnsembleSpec:
    """beta, number of points and weight of an ensemble.

    The named constructors fix the scale conventions: GOE has weight
    exp(-x^2/2), GUE and GSE have weight exp(-x^2), LUE(alpha) has
    x^alpha exp(-x) and JUE(a, b) has (1+x)^a (1-x)^b on (-1, 1).
    """

    beta: float
    n_points: int
    weight: WeightSpec
    group_sign: int = 0

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError("beta must be positive")
        if self.n_points < 1:
            raise ValueError("n_points must be at least 1")

    @classmethod
    def cue(cls, n):
        return cls(2, n, WeightSpec.circular())

    @classmethod
    def coe(cls, n):
        return cls(1, n, WeightSpec.circular())

    @classmethod
    def cse(cls, n):
        return cls(4, n, WeightSpec.circular())

    @classmethod
    def circular(cls, n, beta):
        return cls(beta, n, WeightSpec.circular())

    @classmethod
    def goe(cls, n):
        return cls(1, n, WeightSpec.gaussian(1))

    @classmethod
    def gue(cls, n):
        return cls(2, n, WeightSpec.gaussian(2))

    @classmethod
    def gse(cls, n):
        return cls(4, n, WeightSpec.gaussian(2))

    @classmethod
    def lue(cls, n, alpha):
        return cls(2, n, WeightSpec.laguerre(alpha))

    @classmethod
    def jue(cls, n, a, b):
        return cls(2, n, WeightSpec.jacobi(a, b))

    @classmethod
    def orthogonal_group(cls, n, sign):
        """Free eigen-angles of Haar O^{sign}(n); n_points is the angle count."""
        m = free_angle_count(n, sign)
        a, b = orthogonal_group_exponents(n, sign)
        return cls(2, max(m, 1), WeightSpec.jacobi_unit(a, b), group_sign=int(sign) * int(n))

    @property
    def is_circular(self):
        return self.weight.is_circular


@dataclass(frozen=True)
class MCConfig:
    """Metropolis configuration.

    ``burn_in`` and ``thinning`` count single-site steps per chain; ``None``
    selects 10^4 N and 10 N. Chains are run in parallel and their samples
    interleaved, ``n_chains`` at a time.
    """

    seed: int = 0
    n_samples: int = 1000
    burn_in: Optional[int] = None
    thinning: Optional[int] = None
    proposal_scale: float = 0.5
    n_chains: int = 1000
    adapt: bool = True

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be at least 1")
        if (self.burn_in is not None and self.burn_in < 0) or (
                self.thinning is not None and self.thinning < 0):
            raise ValueError("burn_in and thinning must be non-negative")
        if not self.proposal_scale > 0:
            raise ValueError("proposal_scale must be positive")

    def sweeps(self, n):
        burn = 10_000 * n if self.burn_in is None else self.burn_in
        thin = 10 * n if self.thinning is None else self.thinning
        return int(np.ceil(burn / n)), max(int(np.ceil(thin / n)), 1)


def circular_normalization(n, beta):
    """Z_{N,beta} = (2 pi)^N Gamma(1 + N beta/2) / Gamma(1 + beta/2)^N."""
    if not beta > 0:
        raise ValueError("beta must be positive")
    return float(np.exp(log_circular_normalization(n, beta)))


def log_circular_normalization(n, beta):
    return (n * np.log(2 * np.pi) + special.gammaln(1 + n * beta / 2)
            - n * special.gammaln(1 + beta / 2))


# ---------------------------------------------------------------------------
# helpers


def _desc(x):
    return -np.sort(-x, axis=-1)


def _wrap(theta):
    """Reduce angles to (-pi, pi]."""
    return np.pi - np.mod(np.pi - theta, 2 * np.pi)


def _cnormal(rng, shape, var=1.0):
    """Complex Gaussian with E|z|^2 = var."""
    s = np.sqrt(var / 2)
    return s * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def haar_unitary(n, rng, size=None):
    """Haar unitary matrices via QR with unit-modulus diagonal of R."""
    shape = (n, n) if size is None else (size, n, n)
    q, r = np.linalg.qr(_cnormal(rng, shape))
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def haar_orthogonal(n, rng, size=None):
    """Haar orthogonal matrices via QR with positive diagonal of R."""
    shape = (n, n) if size is None else (size, n, n)
    q, r = np.linalg.qr(rng.standard_normal(shape))
    return q * np.sign(np.diagonal(r, axis1=-2, axis2=-1))[..., None, :]


def free_angle_count(n, sign):
    if n < 2:
        raise ValueError("orthogonal group needs n >= 2")
    if sign not in (1, -1):
        raise ValueError("det_sign must be +1 or -1")
    return n // 2 if sign == 1 else (n - 1) // 2


def orthogonal_group_exponents(n, sign):
    """(a, b) of the density u^a (1-u)^b, u = sin^2(theta/2), of the free angles."""
    if sign == 1:
        return (-0.5, -0.5) if n % 2 == 0 else (0.5, -0.5)
    return (0.5, 0.5) if n % 2 == 0 else (-0.5, 0.5)


# ---------------------------------------------------------------------------
# matrix-model batch samplers


def circular_batch(beta, n, rng, size):
    """Eigen-angles of CUE (beta=2), COE (U^T U) or CSE (U^D U)."""
    if beta == 2:
        u = haar_unitary(n, rng, size)
        return _desc(np.angle(np.linalg.eigvals(u)))
    if beta == 1:
        u = haar_unitary(n, rng, size)
        return _desc(np.angle(np.linalg.eigvals(np.swapaxes(u, -1, -2) @ u)))
    if beta == 4:
        u = haar_unitary(2 * n, rng, size)
        z = np.zeros((2 * n, 2 * n))
        i = np.arange(n)
        z[2 * i, 2 * i + 1] = 1.0
        z[2 * i + 1, 2 * i] = -1.0
        dual = z @ np.swapaxes(u, -1, -2) @ z.T
        ang = _desc(np.angle(np.linalg.eigvals(dual @ u)))
        return ang[:, ::2]
    raise ValueError(f"unsupported circular beta {beta}")


def gaussian_batch(beta, n, rng, size):
    """GOE (weight exp(-x^2/2)), GUE or GSE (weight exp(-x^2))."""
    if beta == 1:
        a = rng.standard_normal((size, n, n)) * 0.5
        h = a + np.swapaxes(a, -1, -2)
        return _desc(np.linalg.eigvalsh(h))
    if beta == 2:
        a = _cnormal(rng, (size, n, n), 0.25)
        h = a + np.conj(np.swapaxes(a, -1, -2))
        return _desc(np.linalg.eigvalsh(h))
    if beta == 4:
        return _desc(np.linalg.eigvalsh(gse_matrices(n, rng, size))[:, ::2])
    raise ValueError(f"unsupported Gaussian beta {beta}")


def gse_matrices(n, rng, size):
    """2n x 2n complex Hermitian quaternion matrices with density exp(-Tr H^2 / 2)."""
    c = rng.standard_normal((4, size, n, n)) * 0.5
    a0 = np.triu(c[0], 1)
    a0 = a0 + np.swapaxes(a0, -1, -2)
    a0[:, np.arange(n), np.arange(n)] = rng.standard_normal((size, n)) * np.sqrt(0.5)
    a1, a2, a3 = (np.triu(c[k], 1) for k in (1, 2, 3))
    a1, a2, a3 = (x - np.swapaxes(x, -1, -2) for x in (a1, a2, a3))
    h = np.empty((size, 2 * n, 2 * n), dtype=complex)
    h[:, 0::2, 0::2] = a0 + 1j * a1
    h[:, 0::2, 1::2] = a2 + 1j * a3
    h[:, 1::2, 0::2] = -a2 + 1j * a3
    h[:, 1::2, 1::2] = a0 - 1j * a1
    return h


def wishart_batch(beta, n_rows, n_cols, rng, size):
    """Eigenvalues of X^T X (real, beta=1) or X^dagger X (complex, beta=2).

    Real entries are N(0, 1) and complex entries have E|z|^2 = 1, giving the
    weights x^((n-N-1)/2) exp(-x/2) and x^(n-N) exp(-x).
    """
    if n_rows < n_cols:
        raise ValueError("need n_rows >= n_cols")
    if beta == 1:
        x = rng.standard_normal((size, n_rows, n_cols))
        return _desc(np.linalg.eigvalsh(np.swapaxes(x, -1, -2) @ x))
    x = _cnormal(rng, (size, n_rows, n_cols))
    return _desc(np.linalg.eigvalsh(np.conj(np.swapaxes(x, -1, -2)) @ x))


def manova_batch(beta, n, n1, n2, rng, size, unit=False):
    """Jacobi ensemble from A (A + B)^{-1}, A, B Wishart with n1, n2 rows.

    The eigenvalues lambda in (0, 1) have density lambda^p (1-lambda)^q with
    p = n1 - n (complex) or (n1 - n - 1)/2 (real). Unless ``unit`` is set
    they are mapped to x = 2 lambda - 1.
    """
    if beta == 1:
        xa = rng.standard_normal((size, n1, n))
        xb = rng.standard_normal((size, n2, n))
        ct = lambda m: np.swapaxes(m, -1, -2)
    else:
        xa = _cnormal(rng, (size, n1, n))
        xb = _cnormal(rng, (size, n2, n))
        ct = lambda m: np.conj(np.swapaxes(m, -1, -2))
    a = ct(xa) @ xa
    c = a + ct(xb) @ xb
    low = np.linalg.cholesky(c)
    linv = np.linalg.inv(low)
    lam = np.linalg.eigvalsh(linv @ a @ ct(linv))
    lam = np.clip(lam, 0.0, 1.0)
    return _desc(lam if unit else 2 * lam - 1)


def antisymmetric_gaussian_batch(n, rng, size):
    """Positive eigenvalues of iA, A real antisymmetric with A_jk ~ N(0, 1/2)."""
    a = np.triu(rng.standard_normal((size, n, n)) * np.sqrt(0.5), 1)
    h = 1j * (a - np.swapaxes(a, -1, -2))
    ev = _desc(np.linalg.eigvalsh(h))
    return ev[:, : n // 2]


def orthogonal_group_batch(n, sign, rng, size):
    """Free eigen-angles in (0, pi) of Haar O^{sign}(n), descending."""
    m = free_angle_count(n, sign)
    q = haar_orthogonal(n, rng, size)
    det = np.sign(np.linalg.det(q))
    flip = det != sign
    q[flip, :, 0] *= -1
    ev = np.linalg.eigvals(q)
    ang = np.angle(ev)
    order = np.argsort(-ev.imag, axis=-1)[:, :m]
    return _desc(np.take_along_axis(ang, order, axis=-1))


def _double_complex(a):
    """Replace each entry x+iy by [[x, y], [-y, x]]."""
    size, n, _ = a.shape
    out = np.empty((size, 2 * n, 2 * n))
    out[:, 0::2, 0::2] = a.real
    out[:, 0::2, 1::2] = a.imag
    out[:, 1::2, 0::2] = -a.imag
    out[:, 1::2, 1::2] = a.real
    return out


def bordered_gue_batch(n, b, rng, size):
    """Eigenvalues of the (2n+1)-dimensional bordered doubled GUE matrix.

    Returns ``(full, gue)``: the 2n+1 eigenvalues of M and the n eigenvalues
    of the embedded GUE matrix.
    """
    a = _cnormal(rng, (size, n, n), 0.25)
    a = a + np.conj(np.swapaxes(a, -1, -2))
    m = np.zeros((size, 2 * n + 1, 2 * n + 1))
    m[:, : 2 * n, : 2 * n] = _double_complex(a)
    v = np.sqrt(b) * rng.standard_normal((size, 2 * n))
    m[:, : 2 * n, 2 * n] = v
    m[:, 2 * n, : 2 * n] = v
    m[:, 2 * n, 2 * n] = np.sqrt(2 * b) * rng.standard_normal(size)
    full = _desc(np.linalg.eigvalsh(m))
    gue = _desc(np.linalg.eigvalsh(a))
    _check_interlacing(full[:, 0::2], gue)
    return full, gue


def _quaternion_to_real(h):
    """4x real representation of a 2n x 2n complex matrix, via x+iy -> [[x,y],[-y,x]]."""
    return _double_complex(h)


def bordered_gse_batch(n, b, rng, size):
    """Distinct eigenvalues of the bordered real form of a GSE matrix.

    The 2n x 2n quaternion matrix (doubly degenerate) is doubled to a real
    symmetric 4n x 4n matrix (four-fold degenerate) and bordered by a real
    Gaussian vector of variance b and a corner entry of variance 2b. Returns
    ``(distinct, gse)`` with the 2n+1 distinct eigenvalues and the n GSE
    eigenvalues.
    """
    h = gse_matrices(n, rng, size)
    m = np.zeros((size, 4 * n + 1, 4 * n + 1))
    m[:, : 4 * n, : 4 * n] = _quaternion_to_real(h)
    v = np.sqrt(b) * rng.standard_normal((size, 4 * n))
    m[:, : 4 * n, 4 * n] = v
    m[:, 4 * n, : 4 * n] = v
    m[:, 4 * n, 4 * n] = np.sqrt(2 * b) * rng.standard_normal(size)
    ev = _desc(np.linalg.eigvalsh(m))
    x = ev[:, 0::4]
    y = ev[:, 1::4]
    _check_interlacing(x, y)
    return _desc(np.concatenate([x, y], axis=1)), y


def rank_one_wishart_batch(n_rows, n_cols, b, rng, size):
    """Eigenvalues of A = X^dagger X and B = A + b x x^dagger (x standard complex)."""
    if n_rows < n_cols:
        raise ValueError("need n_rows >= n_cols")
    x = _cnormal(rng, (size, n_rows, n_cols))
    a = np.conj(np.swapaxes(x, -1, -2)) @ x
    v = _cnormal(rng, (size, n_cols, 1))
    bm = a + b * (v @ np.conj(np.swapaxes(v, -1, -2)))
    ea = _desc(np.linalg.eigvalsh(a))
    eb = _desc(np.linalg.eigvalsh(bm))
    _check_interlacing(eb, ea, closed_last=True)
    return ea, eb


def _check_interlacing(outer, inner, closed_last=False):
    """Assert outer_1 >= inner_1 >= outer_2 >= ... row by row."""
    tol = 1e-9 * (1 + np.max(np.abs(outer)))
    k = inner.shape[1]
    ok = np.all(outer[:, :k] >= inner - tol)
    if outer.shape[1] > k:
        ok &= np.all(inner >= outer[:, 1: k + 1] - tol)
    elif closed_last and k > 1:
        ok &= np.all(inner[:, :-1] >= outer[:, 1:] - tol)
    if not ok:
        raise AssertionError("interlacing violated")


def ginibre_scaled_batch(n, rng, size):
    """Eigenvalues of complex Ginibre matrices (density exp(-|z|^2)) over sqrt(n)."""
    g = _cnormal(rng, (size, n, n))
    return np.linalg.eigvals(g) / np.sqrt(n)


# ---------------------------------------------------------------------------
# Metropolis oracle


@dataclass
class MetropolisResult:
    samples: np.ndarray
    acceptance: float
    scale: float
    warnings: list = field(default_factory=list)


def _metropolis_model(beta, weight, n):
    """Coordinates and local log-density pieces for the Metropolis sampler.

    Returns ``(log_w, log_pair, to_points, init_range, periodic)``.
    """
    f = weight.family
    if f is Family.CIRCULAR:
        def log_pair(d):
            return beta * np.log(np.abs(np.sin(0.5 * d)))
        return (lambda t: np.zeros_like(t)), log_pair, (lambda t: t), (-np.pi, np.pi), True
    if f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
        p = 2 * weight.cauchy_exponent - 2 - beta * (n - 1)

        def log_w(t):
            with np.errstate(invalid="ignore", divide="ignore"):
                c = np.cos(0.5 * t)
                out = p * np.log(np.abs(c))
            return np.where(np.abs(t) < np.pi, out, -np.inf)

        def log_pair(d):
            return beta * np.log(np.abs(np.sin(0.5 * d)))
        return log_w, log_pair, (lambda t: np.tan(0.5 * t)), (-np.pi, np.pi), False

    def log_pair(d):
        return beta * np.log(np.abs(d))
    lo, hi = weight.support
    if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2):
        r = np.sqrt(2.0 * n) * (1.5 if f is Family.GAUSSIAN_BETA1 else 1.0)
        init = (-r, r)
    elif f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
        init = (0.1, 4.0 * n + 2.0)
    else:
        init = (lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo))
    return weight.log_weight, log_pair, (lambda x: x), init, False


def metropolis_batch(beta, weight, n, cfg):
    """Run ``cfg.n_chains`` independent single-site Metropolis chains.

    The target is prod w(x_l) prod |x_j - x_k|^beta (or the circular
    analogue). Cauchy weights are sampled in the angle variable
    theta = 2 arctan(x). The proposal width is adapted during burn-in only.

    Returns
    -------
    MetropolisResult
        ``samples`` has shape (cfg.n_samples, n), rows descending.
    """
    if not beta > 0:
        raise ValueError("beta must be positive")
    rng = np.random.default_rng(cfg.seed)
    log_w, log_pair, to_points, (lo, hi), periodic = _metropolis_model(beta, weight, n)
    chains = min(cfg.n_chains, cfg.n_samples)
    per_chain = int(np.ceil(cfg.n_samples / chains))
    burn_sweeps, thin_sweeps = cfg.sweeps(n)
    base = np.linspace(lo, hi, n + 2)[1:-1]
    jitter = 0.25 * (hi - lo) / (n + 1)
    x = base[None, :] + rng.uniform(-jitter, jitter, (chains, n))
    scale = cfg.proposal_scale * (hi - lo) / (n + 1)
    lw = log_w(x)

    def sweep(x, lw, scale):
        accepted = 0
        for i in range(n):
            y = x[:, i] + scale * rng.standard_normal(chains)
            if periodic:
                y = _wrap(y)
            lwy = log_w(y)
            others = np.delete(x, i, axis=1)
            with np.errstate(divide="ignore"):
                dl = (lwy - lw[:, i]
                      + np.sum(log_pair(y[:, None] - others), axis=1)
                      - np.sum(log_pair(x[:, i][:, None] - others), axis=1))
            acc = np.log(rng.uniform(size=chains)) < dl
            x[acc, i] = y[acc]
            lw[acc, i] = lwy[acc]
            accepted += acc.sum()
        return accepted / (n * chains)

    window = []
    for s in range(burn_sweeps):
        rate = sweep(x, lw, scale)
        if cfg.adapt:
            window.append(rate)
            if len(window) == 20:
                r = np.mean(window)
                # wider than the circle is pointless and only slows the wrap
                scale = min(scale * np.exp(2.0 * (r - 0.4)), hi - lo)
                window = []
    out = np.empty((per_chain, chains, n))
    rates = []
    for k in range(per_chain):
        for _ in range(thin_sweeps):
            rates.append(sweep(x, lw, scale))
        out[k] = x
    pts = to_points(out.reshape(-1, n)[: cfg.n_samples])
    acceptance = float(np.mean(rates))
    notes = []
    if not 0.05 <= acceptance <= 0.95:
        notes.append(f"acceptance rate {acceptance:.3f} outside [0.05, 0.95]")
        warnings.warn(notes[-1], RuntimeWarning)
    return MetropolisResult(_desc(pts), acceptance, float(scale), notes)


def sample_metropolis(beta, weight, n, cfg):
    """Stream of Spectrum objects from the Metropolis oracle."""
    res = metropolis_batch(beta, weight, n, cfg)
    circ = weight.is_circular
    for row in res.samples:
        yield Spectrum(row, circular=circ)


# ---------------------------------------------------------------------------
# dispatch


def _is_int(v):
    return float(v) == int(v) and v >= 0


def has_matrix_model(spec):
    """Whether :func:`sample_batch` uses a matrix model for ``spec``."""
    w, beta, n = spec.weight, spec.beta, spec.n_points
    f = w.family
    if spec.group_sign:
        return True
    if f is Family.CIRCULAR:
        return beta in (1, 2, 4)
    if f is Family.GAUSSIAN_BETA1:
        return beta == 1
    if f is Family.GAUSSIAN_BETA2:
        return beta in (2, 4)
    if f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
        return beta == (1 if f is Family.LAGUERRE_BETA1 else 2) and _is_int(w.a)
    if f in (Family.JACOBI_BETA1, Family.JACOBI_BETA2):
        return beta == (1 if f is Family.JACOBI_BETA1 else 2) and _is_int(w.a) and _is_int(w.b)
    if f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
        return beta in (1, 2, 4) and bool(np.isclose(w.cauchy_exponent, beta * (n - 1) / 2 + 1))
    return False


def sample_batch(spec, rng, size, mc=None):
    """Samples of ``spec``, matrix models where available, Metropolis otherwise.

    Parameters
    ----------
    spec : EnsembleSpec
    rng : numpy.random.Generator
    size : int
    mc : MCConfig, optional
        Used for the Metropolis fallback; its seed is drawn from ``rng`` when
        omitted.
    """
    w, beta, n = spec.weight, spec.beta, spec.n_points
    f = w.family
    if has_matrix_model(spec):
        if spec.group_sign:
            return orthogonal_group_batch(abs(spec.group_sign), int(np.sign(spec.group_sign)), rng, size)
        if f is Family.CIRCULAR:
            return circular_batch(beta, n, rng, size)
        if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2):
            return gaussian_batch(beta, n, rng, size)
        if f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
            return wishart_batch(beta, n + int(w.a), n, rng, size)
        if f in (Family.JACOBI_BETA1, Family.JACOBI_BETA2):
            return manova_batch(beta, n, n + int(w.a), n + int(w.b), rng, size)
        return np.tan(0.5 * circular_batch(beta, n, rng, size))
    cfg = mc or MCConfig(seed=int(rng.integers(2**63)), n_samples=size)
    if cfg.n_samples != size:
        cfg = MCConfig(**{**cfg.__dict__, "n_samples": size})
    return metropolis_batch(beta, w, n, cfg).samples


def sample_circular(beta, n, rng):
    if beta not in (1, 2, 4):
        raise ValueError(f"unsupported circular beta {beta}")
    if n < 1:
        raise ValueError("n must be at least 1")
    return Spectrum(circular_batch(beta, n, rng, 1)[0], circular=True)


def sample_hermitian(spec, rng):
    if spec.is_circular:
        raise ValueError("use sample_circular for circular ensembles")
    return Spectrum(sample_batch(spec, rng, 1)[0])


def sample_orthogonal_group(n, det_sign, rng):
    m = free_angle_count(n, det_sign)
    vals = orthogonal_group_batch(n, det_sign, rng, 1)[0] if m else np.empty(0)
    return Spectrum(vals)


def sample_bordered_gue(n, b, rng):
    if not b > 0:
        raise ValueError("b must be positive")
    full, _ = bordered_gue_batch(n, b, rng, 1)
    return Spectrum(full[0])


def sample_rank_one_wishart_pair(n_rows, n_cols, b, rng):
    if not b > 0:
        raise ValueError("b must be positive")
    ea, eb = rank_one_wishart_batch(n_rows, n_cols, b, rng, 1)
    return Spectrum(ea[0]), Spectrum(eb[0])


def sample_ginibre_scaled(n, rng):
    return list(ginibre_scaled_batch(n, rng, 1)[0])
