"""Spectral form factors of the unitary ensembles and of scaled Ginibre matrices."""

import numpy as np

from .ensembles import EnsembleSpec, ginibre_scaled_batch
from .gap import overlap_matrix
from .kernels import cd_kernel, effective_support, measure_rule
from .weights import WeightSpec


def sff_gue(n, k):
    """S_N(k) for GUE_N (weight exp(-x^2)) as an integral of the LUE_{N,0} density.

    int_0^k t rho_LUE(t^2/2) dt equals the LUE mean count in (0, k^2/2).
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if k == 0:
        return 0.0
    g = overlap_matrix(WeightSpec.laguerre(0.0), n, (0.0, 0.5 * k * k))
    return float(np.trace(g))


def sff_lue(n, alpha, k):
    """S_N(k) for LUE_{N,alpha} as the JUE_{N,(alpha,0)} mean count in (1/(1+k^2), 1)."""
    if n < 1 or k < 0 or not alpha > -1:
        raise ValueError("need n >= 1, k >= 0 and alpha > -1")
    if k == 0:
        return 0.0
    g = overlap_matrix(WeightSpec.jacobi_unit(alpha, 0.0), n, (1.0 / (1.0 + k * k), 1.0))
    return float(np.trace(g))


def sff_bruteforce(weight, n, k=None, scale=1.0, tol=1e-10, cap=4096):
    """S_N(k) of UE_n(weight) by double quadrature of the two-point function.

    Uses rho_2(x, y) - rho_1(x) rho_1(y) = -K_N(x, y)^2, so
    S_N(k) = int rho_1 - int int exp(ik(x - y)) K_N(x, y)^2. The points may be
    rescaled by ``scale`` before the statistic is formed.

    Parameters
    ----------
    weight : WeightSpec or EnsembleSpec
        A beta=2 weight, or a beta=2 EnsembleSpec called as
        ``sff_bruteforce(spec, k)``.
    """
    if isinstance(weight, EnsembleSpec):
        if weight.beta != 2:
            raise ValueError("only beta=2 ensembles are determinantal")
        if k is None:
            k = n
        weight, n = weight.weight, weight.n_points
    if k is None:
        raise TypeError("missing k")
    kern = cd_kernel(weight, n)
    lo, hi = effective_support(weight, n)
    kk = k * scale
    m = max(64, 4 * n + 32)
    prev = None
    while m <= cap:
        x, logw = measure_rule(weight, lo, hi, m)
        # measure_rule already carries w(x); divide it back out of K^2
        q = np.exp(logw - weight.log_weight(x))
        mat = kern(x[:, None], x[None, :])
        v = q * np.exp(1j * kk * x)
        two = np.real(np.conj(v) @ (mat**2) @ v)
        one = np.sum(q * kern.density(x))
        val = float(one - two)
        if prev is not None and abs(val - prev) < tol:
            return val
        prev, m = val, 2 * m
    raise ArithmeticError("form factor quadrature not converged")


def mc_sff(samples, k):
    """Sample variance of sum_j exp(ik x_j) and its standard error."""
    z = np.exp(1j * k * np.asarray(samples)).sum(axis=1)
    d = np.abs(z - z.mean()) ** 2
    m = len(z)
    return float(d.sum() / (m - 1)), float(d.std(ddof=1) / np.sqrt(m))


# ---------------------------------------------------------------------------
# Ginibre


def sff_gue_star(n, k):
    """Form factor of GUE* (x -> x sqrt(2/N), spectrum edge at 2)."""
    return sff_gue(n, k * np.sqrt(2.0 / n))


def dsff_ginue(n, t_abs):
    """Dissipative form factor of GinUE* (unit-disk Ginibre) for the statistic
    sum_j exp(i Re(conj(T) z_j)).

    The disconnected part N - S maps onto the GUE* one:
    N - S_Gin(|T|) = exp(-|T|^2 / (4N)) (N - S_GUE*(|T|/2)).
    """
    if t_abs < 0:
        raise ValueError("|T| must be non-negative")
    if t_abs == 0:
        return 0.0
    return float(n - np.exp(-t_abs**2 / (4 * n)) * (n - sff_gue_star(n, t_abs / 2)))


def dsff_ginue_overlap(n, t_abs, order=80):
    """Same quantity from plane-wave matrix elements in the Ginibre basis.

    z^j exp(-|z|^2/2)/sqrt(pi j!) with the matrix elements of
    exp(i q x), q = |T|/sqrt(N), computed by tensor Gauss-Hermite quadrature.
    """
    from math import lgamma

    x, w = np.polynomial.hermite.hermgauss(order)
    q = t_abs / np.sqrt(n)
    z = x[:, None] + 1j * x[None, :]
    wz = (w[:, None] * w[None, :]) * np.exp(1j * q * x)[:, None]
    j = np.arange(n)
    lognorm = np.array([0.5 * lgamma(v + 1) for v in j])
    pw = z[None] ** j[:, None, None] * np.exp(-lognorm)[:, None, None]
    m = np.einsum("jab,kab,ab->jk", np.conj(pw), pw, wz) / np.pi
    return float(n - np.sum(np.abs(m) ** 2))


def mc_dsff_ginue(n, t, n_samples, rng, batch=20000):
    """Monte Carlo estimate of the GinUE* dissipative form factor.

    Returns (estimate, standard error) of the variance of
    sum_j exp(i Re(conj(T) z_j)).
    """
    t = complex(t)
    sums = []
    left = n_samples
    while left > 0:
        m = min(batch, left)
        z = ginibre_scaled_batch(n, rng, m)
        sums.append(np.exp(1j * np.real(np.conj(t) * z)).sum(axis=1))
        left -= m
    s = np.concatenate(sums)
    d = np.abs(s - s.mean()) ** 2
    return float(d.sum() / (len(s) - 1)), float(d.std(ddof=1) / np.sqrt(len(s)))
