"""Bulk-scaled generating functions and the COE power spectrum."""

from dataclasses import dataclass

import numpy as np

from .kernels import (FredholmConvergenceError, _legendre, kernel_operator,
                      nystrom_fredholm_det, sine_kernel_sym)


def _kernel_sign(det_sign):
    if det_sign not in (1, -1):
        raise ValueError("det_sign must be +1 or -1")
    return -det_sign


def sine_genfn(det_sign, s, z):
    """det(1 - z K^{-det_sign}) on (0, s), the bulk O^{det_sign} generating function.

    K^{+-}(x, y) = sinc pi(x - y) +- sinc pi(x + y).
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if s == 0 or z == 0:
        return complex(1.0)
    kern = sine_kernel_sym(_kernel_sign(det_sign))
    n0 = _sine_nodes(s)
    op = kernel_operator(kern, (0.0, s), n0, f"Sine{'Plus' if det_sign < 0 else 'Minus'}")
    return complex(nystrom_fredholm_det(op, z, n_nodes=n0))


def _sine_nodes(s):
    return int(np.ceil(2 * s)) + 24


def sine_eigenvalues(det_sign, s, tol=1e-11, check=True):
    """Eigenvalues of K^{-det_sign} on (0, s).

    The Gauss rule has about 2s + 24 nodes; ``check`` compares with a 1.4x
    finer rule and refines until the eigenvalues agree to ``tol``.
    """
    if s <= 0:
        return np.zeros(0)
    kern = sine_kernel_sym(_kernel_sign(det_sign))
    n = _sine_nodes(s)
    lam = np.sort(kernel_operator(kern, (0.0, s), n).eigenvalues())[::-1]
    while check:
        n = int(1.4 * n)
        if n > 4096:
            raise FredholmConvergenceError("sine kernel eigenvalues not converged", lam)
        fine = np.sort(kernel_operator(kern, (0.0, s), n).eigenvalues())[::-1]
        m = min(len(lam), len(fine))
        done = np.max(np.abs(lam[:m] - fine[:m])) < tol
        lam = fine
        if done:
            break
    return lam


def _det_from_eigs(lam, z):
    z = np.asarray(z, dtype=complex)
    return np.prod(1.0 - z[..., None] * lam, axis=-1)


def coe_bulk_from_eigs(lam_plus, lam_minus, xi):
    """COE_infinity generating function from the O^+ and O^- eigenvalues on (0, s/2)."""
    xi = np.asarray(xi, dtype=complex)
    xh = xi * (2 - xi)
    return ((1 - xi) * _det_from_eigs(lam_plus, xh) + _det_from_eigs(lam_minus, xh)) / (2 - xi)


def coe_bulk_genfn(s, xi):
    """Bulk COE generating function of the interval (0, s), unit mean spacing."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if s == 0:
        return complex(1.0)
    xi = complex(xi)
    xh = xi * (2 - xi)
    return ((1 - xi) * sine_genfn(1, s / 2, xh) + sine_genfn(-1, s / 2, xh)) / (2 - xi)


def cse_bulk_genfn(s, xi):
    """Bulk CSE generating function of (0, s).

    Lengths are measured in units of the mean spacing of the doubly
    degenerate spectrum, so the finite-N counterpart is
    ``genfn_cse(N, pi * s / (2 * N), xi)``.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if s == 0:
        return complex(1.0)
    return 0.5 * (sine_genfn(1, s / 2, xi) + sine_genfn(-1, s / 2, xi))


# ---------------------------------------------------------------------------
# power spectrum


@dataclass(frozen=True)
class PowerSpectrum:
    omega: np.ndarray
    value: np.ndarray
    est_error: np.ndarray
    s_max: float


def _hann_average(grid, values, start, stop):
    """Average of ``values`` over [start, stop] with a Hann window."""
    sel = (grid >= start) & (grid <= stop)
    t = (grid[sel] - start) / (stop - start)
    w = np.sin(np.pi * t) ** 2
    return np.sum(w * values[..., sel], axis=-1) / np.sum(w)


def power_spectrum_coe(omega, s_max=None, panel=0.5, order=6, periods=4):
    """Bulk COE power spectrum S(omega) for 0 < omega <= pi.

    The integrand E((0, s); 1 - exp(i omega)) decays only like a small power
    of s, so the running integral F(S) keeps oscillating with period
    2 pi / omega. The value is the Hann-window average of F over the last
    ``periods`` periods before ``s_max``; ``est_error`` compares it with the
    same average ending at 0.75 s_max.

    Returns
    -------
    PowerSpectrum
    """
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(omega <= 0) or np.any(omega > np.pi):
        raise ValueError("omega must lie in (0, pi]")
    longest = 2 * np.pi / omega.min()
    if s_max is None:
        s_max = max(80.0, (periods + 2) * longest)
    t, wq = _legendre(order)
    t = 0.5 * (t + 1)
    wq = 0.5 * wq
    edges = np.arange(0.0, s_max + panel / 2, panel)
    xi = 1 - np.exp(1j * omega)
    running = np.zeros(len(omega), dtype=complex)
    cumulative = np.zeros((len(omega), len(edges)), dtype=complex)
    for i in range(len(edges) - 1):
        a = edges[i]
        for tk, wk in zip(t, wq):
            s = a + panel * tk
            lp = sine_eigenvalues(1, s / 2, check=False)
            lm = sine_eigenvalues(-1, s / 2, check=False)
            running += panel * wk * coe_bulk_from_eigs(lp, lm, xi)
        cumulative[:, i + 1] = running
    scale = 1 / (2 * np.sin(omega / 2) ** 2)
    value = np.empty(len(omega))
    err = np.empty(len(omega))
    for j, w in enumerate(omega):
        span = periods * 2 * np.pi / w
        full = _hann_average(edges, cumulative[j].real, s_max - span, s_max)
        early = _hann_average(edges, cumulative[j].real, 0.75 * s_max - span, 0.75 * s_max)
        value[j] = scale[j] * full
        err[j] = scale[j] * abs(full - early)
    return PowerSpectrum(omega, value, err, float(s_max))
