"""
Growth function of linear separators. `log_growth_cover` evaluates Cover's function counting theorem in log space,
`enumerate_dichotomies` counts the separable labelings of an actual point set by brute force and serves as its oracle.
"""

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog
from scipy.special import gammaln, logsumexp

from samkit.errors import EnumerationSizeError, ParameterDomainError, ShapeError

logger = logging.getLogger(__name__)

MAX_ENUMERATION_POINTS = 16
# required y_i·w·x_i, every strictly separable labeling reaches it after rescaling w
SEPARATION_MARGIN = 1.0
_RANK_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GrowthFunction:
    n: int
    d: int
    log_n_dichotomies: float

    @property
    def n_dichotomies(self) -> float:
        return math.exp(self.log_n_dichotomies)


@dataclass(frozen=True)
class DichotomyCount:
    count: int
    n: int
    d: int
    homogeneous: bool
    # True when the points were found not to be in general position, the count is then below Cover's value
    degenerate: bool


def log_growth_cover(n: int, d: int) -> GrowthFunction:
    """
    log N(n, d) with N(n, d) = 2·sum_{k=0}^{d-1} C(n-1, k), the number of labelings of n points in general position
    in R^d that a hyperplane through the origin can realize. The binomial sum is taken with logsumexp over
    log-gamma terms, which stays finite far beyond the range where C(n-1, k) overflows a float.
    """
    if int(n) != n or n < 1 or int(d) != d or d < 1:
        raise ParameterDomainError(f"n and d must be integers >= 1, got n={n!r}, d={d!r}.")
    n, d = int(n), int(d)
    ceiling = n * math.log(2.0)
    if n <= d:
        # every labeling is realizable
        return GrowthFunction(n, d, ceiling)
    k = np.arange(d)
    log_binomials = gammaln(n) - gammaln(k + 1) - gammaln(n - k)
    value = math.log(2.0) + float(logsumexp(log_binomials))
    return GrowthFunction(n, d, min(value, ceiling))


def general_position(points: np.ndarray, homogeneous: bool = True) -> bool:
    """
    Whether every subset of at most d points (d + 1 for the affine case) is linearly (affinely) independent.
    """
    points = np.asarray(points, dtype=np.float64)
    if not homogeneous:
        points = np.hstack([points, np.ones((points.shape[0], 1))])
    n, d = points.shape
    for size in range(1, min(n, d) + 1):
        for subset in itertools.combinations(range(n), size):
            singular_values = np.linalg.svd(points[list(subset)], compute_uv=False)
            if singular_values[-1] <= _RANK_TOLERANCE * max(1.0, singular_values[0]):
                return False
    return True


def _separable(points: np.ndarray, labels: np.ndarray) -> bool:
    # feasibility of y_i w.x_i >= margin, written as -y_i x_i.w <= -margin with a zero objective
    a_ub = -labels[:, None] * points
    b_ub = -np.full(points.shape[0], SEPARATION_MARGIN)
    result = linprog(np.zeros(points.shape[1]), A_ub=a_ub, b_ub=b_ub,
                     bounds=[(None, None)] * points.shape[1], method="highs")
    return result.status == 0


def enumerate_dichotomies(points: np.ndarray, homogeneous: bool = True) -> DichotomyCount:
    """
    Count the labelings of `points` that a linear separator realizes, by checking all 2^n of them for strict
    separability with a linear program. With homogeneous=False a constant column is appended, so affine separators
    are counted.

    Args:
        points: n x d array, n <= 16
        homogeneous: separators through the origin only

    Returns:
        DichotomyCount with the exact count and a flag telling if the points were not in general position
    """
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2:
        raise ShapeError(f"points must be a 2d array, got shape {points.shape}.")
    n, d = points.shape
    if n > MAX_ENUMERATION_POINTS:
        raise EnumerationSizeError(
            f"Enumerating 2^{n} labelings is not supported, at most {MAX_ENUMERATION_POINTS} points.")
    if n == 0:
        return DichotomyCount(count=1, n=0, d=d, homogeneous=homogeneous, degenerate=False)

    degenerate = not general_position(points, homogeneous=homogeneous)
    if degenerate:
        logger.warning("Points are not in general position, the dichotomy count will fall below Cover's value.")

    design = points if homogeneous else np.hstack([points, np.ones((n, 1))])
    count = 0
    # a labeling is separable iff its negation is, so only labelings with y_0 = +1 are solved
    for tail in itertools.product((1.0, -1.0), repeat=n - 1):
        labels = np.array((1.0,) + tail)
        if _separable(design, labels):
            count += 2
    return DichotomyCount(count=count, n=n, d=d, homogeneous=homogeneous, degenerate=degenerate)
