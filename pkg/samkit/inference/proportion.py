"""
One sided large-sample test for a population proportion, H0: π = π0 against H1: π > π0.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc

from samkit.errors import ParameterDomainError

logger = logging.getLogger(__name__)

# below this denominator the normal approximation is not trusted at π0 = 0.5
LARGE_SAMPLE_MIN = 20
_SQRT2 = math.sqrt(2.0)
_TINY = np.finfo(np.float64).tiny


@dataclass(frozen=True)
class ProportionTest:
    l: int
    pi0: float = 0.5
    alpha: float = 0.05

    def __post_init__(self):
        if not 0.0 < self.pi0 < 1.0:
            raise ParameterDomainError(f"pi0 must lie in (0, 1), got {self.pi0!r}.")
        if not 0.0 < self.alpha < 1.0:
            raise ParameterDomainError(f"alpha must lie in (0, 1), got {self.alpha!r}.")
        if int(self.l) != self.l or self.l < 1:
            raise ParameterDomainError(f"l must be an integer >= 1, got {self.l!r}.")

    def large_sample(self) -> bool:
        """Whether the normal approximation of the z statistic holds, at least l = 20 for pi0 = 0.5."""
        return not (self.pi0 == 0.5 and self.l < LARGE_SAMPLE_MIN)

    @property
    def sigma0(self) -> float:
        return math.sqrt(self.pi0 * (1.0 - self.pi0) / self.l)


def proportion_z(pi_hat, test: ProportionTest):
    """z = (π̂ - π0) / σ0 with σ0 = sqrt(π0(1 - π0) / l). Works on scalars and arrays."""
    sigma0 = test.sigma0
    if sigma0 == 0.0:
        raise ParameterDomainError("Standard error of the null proportion is zero.")
    if np.ndim(pi_hat):
        return (np.asarray(pi_hat, dtype=np.float64) - test.pi0) / sigma0
    return (float(pi_hat) - test.pi0) / sigma0


def p_value_one_sided(z):
    """
    Upper tail 1 - Φ(z) of the standard normal, computed as erfc(z/√2)/2 with scipy's complementary error function
    (Cephes rational approximations, relative error near machine precision) so the far tail does not cancel.
    Results are floored at the smallest normal double, keeping p in (0, 1].
    """
    p = np.maximum(0.5 * erfc(np.asarray(z, dtype=np.float64) / _SQRT2), _TINY)
    return p if np.ndim(z) else float(p)
