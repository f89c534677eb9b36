"""
From per-region accuracies and bound deviations to the statistical agnostic map: the regions whose accuracy, taken
at the pessimistic end of the bound, is significantly above chance.
"""

import enum
import logging
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, Iterable, Tuple

from samkit.errors import InputError, ParameterDomainError

from .proportion import ProportionTest, p_value_one_sided, proportion_z

logger = logging.getLogger(__name__)


class Statistic(str, enum.Enum):
    WORST_CASE = "worst_case"
    EMPIRICAL = "empirical"

    @classmethod
    def parse(cls, value) -> "Statistic":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ParameterDomainError(f"Unknown statistic {value!r}, expected worst_case or empirical.")


# column order of the csv report
REPORT_FIELDS = ("roi_id", "roi_name", "n", "k", "empirical_accuracy", "delta_n", "worst_case_accuracy", "z",
                 "p_value", "significant")


@dataclass(frozen=True)
class RoiAnalysis:
    roi_id: int
    roi_name: str
    n: int
    k: int
    empirical_accuracy: float
    delta_n: float
    worst_case_accuracy: float
    z: float
    p_value: float
    significant: bool
    # no PLS direction could be fitted, accuracy is the one of a majority-class predictor
    degenerate: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, record: dict) -> "RoiAnalysis":
        return cls(roi_id=int(record["roi_id"]), roi_name=str(record["roi_name"]), n=int(record["n"]),
                   k=int(record["k"]), empirical_accuracy=float(record["empirical_accuracy"]),
                   delta_n=float(record["delta_n"]), worst_case_accuracy=float(record["worst_case_accuracy"]),
                   z=float(record["z"]), p_value=float(record["p_value"]),
                   significant=_as_bool(record["significant"]), degenerate=_as_bool(record.get("degenerate", False)))


def _as_bool(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ("true", "1")
    return bool(value)


@dataclass(frozen=True)
class SamReport:
    analyses: Tuple[RoiAnalysis, ...]
    config: Dict[str, object] = field(default_factory=dict)

    @property
    def significant_ids(self) -> Tuple[int, ...]:
        return tuple(a.roi_id for a in self.analyses if a.significant)

    @property
    def n_rois(self) -> int:
        return len(self.analyses)

    def with_config(self, **entries) -> "SamReport":
        return replace(self, config={**self.config, **entries})

    def to_dict(self) -> dict:
        return {"config": dict(self.config), "regions": [a.to_dict() for a in self.analyses]}

    @classmethod
    def from_dict(cls, record: dict) -> "SamReport":
        return cls(analyses=tuple(RoiAnalysis.from_dict(r) for r in record["regions"]),
                   config=dict(record.get("config", {})))


def worst_case_accuracy(empirical_accuracy: float, delta_n: float) -> float:
    """Accuracy guaranteed with probability 1 - δ: empirical accuracy minus Δ_n, clamped to [0, 1]."""
    return min(max(empirical_accuracy - delta_n, 0.0), 1.0)


def select_significant(analyses: Iterable[RoiAnalysis], test: ProportionTest,
                       statistic=Statistic.WORST_CASE, bonferroni: bool = False) -> SamReport:
    """
    Run the one sided proportion test on every region and flag the significant ones.

    Args:
        analyses: per-region results; z, p_value and significant are recomputed
        test: null proportion, denominator l and level alpha
        statistic: test the worst case accuracy (default) or the raw empirical accuracy
        bonferroni: compare p against alpha / number of regions instead of alpha

    Returns:
        SamReport ordered by roi_id. Degenerate regions are never significant.
    """
    analyses = sorted(analyses, key=lambda a: a.roi_id)
    if not analyses:
        raise InputError("No region analyses to test.")
    statistic = Statistic.parse(statistic)
    level = test.alpha / len(analyses) if bonferroni else test.alpha
    if not test.large_sample():
        logger.warning("Proportion test with l=%d, below the large sample size the normal approximation needs.",
                       test.l)

    tested = []
    for analysis in analyses:
        pi_hat = analysis.worst_case_accuracy if statistic is Statistic.WORST_CASE else analysis.empirical_accuracy
        z = proportion_z(pi_hat, test)
        p = p_value_one_sided(z)
        tested.append(replace(analysis, z=z, p_value=p, significant=bool(p < level and not analysis.degenerate)))

    report = SamReport(analyses=tuple(tested), config={
        "pi0": test.pi0, "l": test.l, "alpha": test.alpha, "statistic": statistic.value, "bonferroni": bonferroni})
    logger.info("%d of %d regions significant at alpha=%g.", len(report.significant_ids), len(tested), level)
    return report
