"""Classical weight functions for the real-line and circular ensembles."""

from dataclasses import dataclass
from enum import Enum

import numpy as np


class Family(str, Enum):
    GAUSSIAN_BETA1 = "GaussianBeta1"
    GAUSSIAN_BETA2 = "GaussianBeta2"
    LAGUERRE_BETA1 = "LaguerreBeta1"
    LAGUERRE_BETA2 = "LaguerreBeta2"
    JACOBI_BETA1 = "JacobiBeta1"
    JACOBI_BETA2 = "JacobiBeta2"
    CAUCHY_BETA1 = "CauchyBeta1"
    CAUCHY_BETA2 = "CauchyBeta2"
    JACOBI_UNIT = "JacobiUnit"
    CIRCULAR = "Circular"


@dataclass(frozen=True)
class WeightSpec:
    """A classical weight w(x) together with its support.

    Parameters
    ----------
    family : Family
    a, b : float
        Laguerre/Jacobi exponents. For the Laguerre families only ``a`` is used.
    alpha : float
        Cauchy exponent shift.
    n_ref : int
        Matrix size entering the Cauchy exponent.

    Notes
    -----
    The weights are

    ================  ==============================================
    GaussianBeta1     exp(-x^2/2)
    GaussianBeta2     exp(-x^2)
    LaguerreBeta1     x^((a-1)/2) exp(-x/2),            x > 0
    LaguerreBeta2     x^a exp(-x),                      x > 0
    JacobiBeta1       (1+x)^((a-1)/2) (1-x)^((b-1)/2),  |x| < 1
    JacobiBeta2       (1+x)^a (1-x)^b,                  |x| < 1
    CauchyBeta1       (1+x^2)^(-(n_ref+alpha+1)/2)
    CauchyBeta2       (1+x^2)^(-(n_ref+alpha))
    JacobiUnit        x^a (1-x)^b,                      0 < x < 1
    Circular          1 on (-pi, pi]
    ================  ==============================================
    """

    family: Family
    a: float = 0.0
    b: float = 0.0
    alpha: float = 0.0
    n_ref: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        f = self.family
        if f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2) and not self.a > -1:
            raise ValueError(f"Laguerre parameter must exceed -1, got {self.a}")
        if f in (Family.JACOBI_BETA1, Family.JACOBI_BETA2, Family.JACOBI_UNIT):
            if not (self.a > -1 and self.b > -1):
                raise ValueError(f"Jacobi parameters must exceed -1, got {(self.a, self.b)}")
        if f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2) and self.cauchy_exponent <= 0.5:
            raise ValueError("Cauchy weight is not integrable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def gaussian(cls, beta=2):
        return cls(Family.GAUSSIAN_BETA1 if beta == 1 else Family.GAUSSIAN_BETA2)

    @classmethod
    def laguerre(cls, a, beta=2):
        return cls(Family.LAGUERRE_BETA1 if beta == 1 else Family.LAGUERRE_BETA2, a=a)

    @classmethod
    def jacobi(cls, a, b, beta=2):
        return cls(Family.JACOBI_BETA1 if beta == 1 else Family.JACOBI_BETA2, a=a, b=b)

    @classmethod
    def cauchy(cls, alpha, n_ref, beta=2):
        return cls(Family.CAUCHY_BETA1 if beta == 1 else Family.CAUCHY_BETA2,
                   alpha=alpha, n_ref=n_ref)

    @classmethod
    def jacobi_unit(cls, a, b):
        return cls(Family.JACOBI_UNIT, a=a, b=b)

    @classmethod
    def circular(cls):
        return cls(Family.CIRCULAR)

    # -- properties -------------------------------------------------------
    @property
    def is_circular(self):
        return self.family is Family.CIRCULAR

    @property
    def support(self):
        f = self.family
        if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2,
                 Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
            return (-np.inf, np.inf)
        if f in (Family.LAGUERRE_BETA1, Family.LAGUERRE_BETA2):
            return (0.0, np.inf)
        if f in (Family.JACOBI_BETA1, Family.JACOBI_BETA2):
            return (-1.0, 1.0)
        if f is Family.JACOBI_UNIT:
            return (0.0, 1.0)
        return (-np.pi, np.pi)

    @property
    def cauchy_exponent(self):
        """Exponent e with w = (1+x^2)^(-e) for the Cauchy families."""
        if self.family is Family.CAUCHY_BETA1:
            return (self.n_ref + self.alpha + 1) / 2
        if self.family is Family.CAUCHY_BETA2:
            return self.n_ref + self.alpha
        raise AttributeError("not a Cauchy weight")

    @property
    def endpoint_exponents(self):
        """Algebraic exponents (p_lo, p_hi) of the weight at finite endpoints."""
        f = self.family
        if f is Family.LAGUERRE_BETA1:
            return ((self.a - 1) / 2, 0.0)
        if f is Family.LAGUERRE_BETA2:
            return (self.a, 0.0)
        if f is Family.JACOBI_BETA1:
            return ((self.a - 1) / 2, (self.b - 1) / 2)
        if f in (Family.JACOBI_BETA2, Family.JACOBI_UNIT):
            return (self.a, self.b)
        return (0.0, 0.0)

    @property
    def is_even(self):
        f = self.family
        if f in (Family.GAUSSIAN_BETA1, Family.GAUSSIAN_BETA2,
                 Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
            return True
        if f in (Family.JACOBI_BETA1, Family.JACOBI_BETA2):
            return self.a == self.b
        return False

    # -- evaluation -------------------------------------------------------
    def log_weight(self, x):
        """log w(x), -inf outside the support."""
        x = np.asarray(x, dtype=float)
        f = self.family
        lo, hi = self.support
        inside = (x > lo) & (x < hi)
        if f is Family.CIRCULAR:
            inside = (x > -np.pi) & (x <= np.pi)
        xs = np.where(inside, x, 0.5 * (max(lo, -0.5) + min(hi, 0.5)))
        with np.errstate(divide="ignore"):
            if f is Family.GAUSSIAN_BETA1:
                out = -0.5 * xs**2
            elif f is Family.GAUSSIAN_BETA2:
                out = -xs**2
            elif f is Family.LAGUERRE_BETA1:
                out = 0.5 * (self.a - 1) * np.log(xs) - 0.5 * xs
            elif f is Family.LAGUERRE_BETA2:
                out = self.a * np.log(xs) - xs
            elif f is Family.JACOBI_BETA1:
                out = 0.5 * (self.a - 1) * np.log1p(xs) + 0.5 * (self.b - 1) * np.log1p(-xs)
            elif f is Family.JACOBI_BETA2:
                out = self.a * np.log1p(xs) + self.b * np.log1p(-xs)
            elif f in (Family.CAUCHY_BETA1, Family.CAUCHY_BETA2):
                out = -self.cauchy_exponent * np.log1p(xs**2)
            elif f is Family.JACOBI_UNIT:
                out = self.a * np.log(xs) + self.b * np.log1p(-xs)
            else:
                out = np.zeros_like(xs)
        return np.where(inside, out, -np.inf)

    def evaluate(self, x):
        return np.exp(self.log_weight(x))

    __call__ = evaluate
