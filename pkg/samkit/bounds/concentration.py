"""
Closed-form deviation bounds between the empirical and the actual risk of a linear classifier. Every function returns
the additive term Δ_n such that, with probability at least 1 - δ, actual risk <= empirical risk + Δ_n.
All logarithms are natural.
"""

import enum
import math
from dataclasses import asdict, dataclass
from typing import Optional

from samkit.errors import ParameterDomainError

from .growth import log_growth_cover


class BoundMethod(str, enum.Enum):
    MASSART = "massart"
    VC = "vc"
    COVER = "cover"

    @classmethod
    def parse(cls, value) -> "BoundMethod":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ParameterDomainError(f"Unknown bound method {value!r}, expected one of {choices}.")


@dataclass(frozen=True)
class BoundRequest:
    method: BoundMethod
    n: int
    dim: int
    delta: float

    def __post_init__(self):
        object.__setattr__(self, "method", BoundMethod.parse(self.method))
        _check_count(self.n, "n")
        _check_count(self.dim, "dim")
        _check_delta(self.delta)

    @property
    def vc_dimension(self) -> int:
        # affine separators in dim dimensions
        return self.dim + 1


@dataclass(frozen=True)
class BoundResult:
    method: BoundMethod
    n: int
    dim: Optional[int]
    delta: float
    delta_n: float
    vacuous: bool

    def to_dict(self) -> dict:
        record = asdict(self)
        record["method"] = self.method.value
        return record


def _check_count(value, name: str) -> None:
    if int(value) != value or value < 1:
        raise ParameterDomainError(f"{name} must be an integer >= 1, got {value!r}.")


def _check_delta(delta, allow_one: bool = False) -> None:
    upper_ok = delta <= 1.0 if allow_one else delta < 1.0
    if not (delta > 0.0 and upper_ok):
        interval = "(0, 1]" if allow_one else "(0, 1)"
        raise ParameterDomainError(f"delta must lie in {interval}, got {delta!r}.")


def _result(method, n, dim, delta, value) -> BoundResult:
    return BoundResult(method=method, n=int(n), dim=None if dim is None else int(dim), delta=float(delta),
                       delta_n=float(value), vacuous=bool(value >= 1.0))


def hoeffding_term(n: int, delta: float) -> float:
    """
    Fluctuation of the uniform deviation around its mean, sqrt(log(1/δ) / 2n). Follows from the bounded differences
    inequality, since changing one sample moves the deviation by at most 1/n. δ = 1 is allowed and gives 0.
    """
    _check_count(n, "n")
    _check_delta(delta, allow_one=True)
    return math.sqrt(math.log(1.0 / delta) / (2.0 * n))


def massart_bound(n: int, log_n: float, delta: float, dim: Optional[int] = None) -> BoundResult:
    """
    Finite class bound 8·sqrt(log N / n) + sqrt(log(1/δ) / 2n), where N is the number of distinct labelings the class
    realizes on the sample. `log_n` is log N, for example from `log_growth_cover`. The trivial value n·log 2 is
    accepted and always gives a vacuous bound.
    """
    _check_count(n, "n")
    _check_delta(delta)
    if not log_n >= 0.0:
        raise ParameterDomainError(f"log_n must be >= 0, got {log_n!r}.")
    value = 8.0 * math.sqrt(log_n / n) + hoeffding_term(n, delta)
    return _result(BoundMethod.MASSART, n, dim, delta, value)


def vc_bound(n: int, h: int, delta: float) -> BoundResult:
    """
    Vapnik's bound sqrt((h·(log(2n/h) + 1) - log(δ/4)) / n) for a class of VC dimension h.
    Requires n >= h, below that log(2n/h) + 1 may turn negative and the expression loses its meaning.
    """
    _check_count(h, "h")
    _check_count(n, "n")
    _check_delta(delta)
    if n < h:
        raise ParameterDomainError(f"vc bound needs n >= h, got n={n} and h={h}.")
    value = math.sqrt((h * (math.log(2.0 * n / h) + 1.0) - math.log(delta / 4.0)) / n)
    return _result(BoundMethod.VC, n, h - 1, delta, value)


def cover_bound(n: int, d: int, delta: float) -> BoundResult:
    """
    Bound for samples in general position built on Cover's count of homogeneously linearly separable dichotomies:
    sqrt(((d - 1)·log(n + 1) + 2 + log(1/δ)) / 2n).
    """
    _check_count(n, "n")
    _check_count(d, "d")
    _check_delta(delta)
    value = math.sqrt(((d - 1) * math.log(n + 1.0) + 2.0 + math.log(1.0 / delta)) / (2.0 * n))
    return _result(BoundMethod.COVER, n, d, delta, value)


def compute_bound(request: BoundRequest) -> BoundResult:
    if request.method is BoundMethod.MASSART:
        growth = log_growth_cover(request.n, request.dim)
        return massart_bound(request.n, growth.log_n_dichotomies, request.delta, dim=request.dim)
    if request.method is BoundMethod.VC:
        return vc_bound(request.n, request.vc_dimension, request.delta)
    return cover_bound(request.n, request.dim, request.delta)
