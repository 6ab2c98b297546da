"""Continuous gap probabilities and CUE averages as discrete Fredholm determinants."""

import numpy as np

from .ensembles import circular_batch
from .gap import bruteforce_average
from .kernels import (DiscreteBessel, DiscreteLaguerre, bessel_kernel, discrete_fredholm_det,
                      kernel_operator, nystrom_fredholm_det)
from .weights import WeightSpec


def dlue_genfn(n, alpha, s, xi):
    """det[1 - xi K^d] over {0, ..., n-1} for the discrete Laguerre kernel.

    K^d(j, k) = int_s^inf psi_j psi_k dx with psi_j the orthonormal Laguerre
    functions of parameter alpha.
    """
    return complex(discrete_fredholm_det(DiscreteLaguerre(alpha, s), xi, index_set=range(n)))


def cue_exp_cos_average(n, s, method="quadrature", n_samples=100_000, rng=None):
    """<exp(s sum_j cos theta_j)> over CUE_n.

    Parameters
    ----------
    method : {"quadrature", "monte_carlo"}
        ``quadrature`` integrates the joint density directly (n <= 4) and
        returns a float. ``monte_carlo`` returns ``(mean, standard error)``.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if method == "quadrature":
        if s == 0:
            return 1.0
        return bruteforce_average(2, WeightSpec.circular(), n, lambda th: np.exp(s * np.cos(th)),
                                  rtol=1e-11)
    if method == "monte_carlo":
        if rng is None:
            raise ValueError("monte_carlo needs a generator")
        theta = circular_batch(2, n, rng, n_samples)
        v = np.exp(s * np.cos(theta).sum(axis=1))
        return float(v.mean()), float(v.std(ddof=1) / np.sqrt(n_samples))
    raise ValueError(f"unknown method {method!r}")


def discrete_bessel_det(start, s, xi):
    """det[1 - xi K^dB] on the tail {start, start+1, ...}.

    K^dB(m, n) = sum_{k >= 1} J_{m+k}(s) J_{n+k}(s).
    """
    if s == 0:
        return complex(1.0)
    return complex(discrete_fredholm_det(DiscreteBessel(s), xi, start=start))


def continuous_bessel_det(alpha, s, xi):
    """det[1 - xi K^B] on (0, s^2) for the hard-edge Bessel kernel of integer order."""
    if s == 0:
        return complex(1.0)
    op = kernel_operator(bessel_kernel(alpha), (0.0, s * s), 16, f"Bessel({alpha})")
    return complex(nystrom_fredholm_det(op, xi))


def bo_rhs_discrete(n, s, xi=1.0):
    """exp(s^2/4) det[1 - xi K^dB] on {n, n+1, ...}."""
    return float(np.real(np.exp(s * s / 4) * discrete_bessel_det(n, s, xi)))


def bo_rhs_continuous(n, s, xi=1.0):
    """exp(s^2/4) det[1 - xi K^B] on (0, s^2) with Bessel order n."""
    return float(np.real(np.exp(s * s / 4) * continuous_bessel_det(n, s, xi)))
