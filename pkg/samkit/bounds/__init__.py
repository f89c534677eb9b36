# __init__.py

from .concentration import (BoundMethod, BoundRequest, BoundResult, compute_bound, cover_bound, hoeffding_term,
                            massart_bound, vc_bound)
from .growth import DichotomyCount, GrowthFunction, enumerate_dichotomies, general_position, log_growth_cover
from .rademacher import RademacherEstimate, rademacher_average, rademacher_monte_carlo

__all__ = [
    "BoundMethod",
    "BoundRequest",
    "BoundResult",
    "compute_bound",
    "cover_bound",
    "hoeffding_term",
    "massart_bound",
    "vc_bound",
    "DichotomyCount",
    "GrowthFunction",
    "enumerate_dichotomies",
    "general_position",
    "log_growth_cover",
    "RademacherEstimate",
    "rademacher_average",
    "rademacher_monte_carlo"
]
