# __init__.py

from .proportion import ProportionTest, p_value_one_sided, proportion_z
from .sam import REPORT_FIELDS, RoiAnalysis, SamReport, Statistic, select_significant, worst_case_accuracy

__all__ = [
    "ProportionTest",
    "p_value_one_sided",
    "proportion_z",
    "REPORT_FIELDS",
    "RoiAnalysis",
    "SamReport",
    "Statistic",
    "select_significant",
    "worst_case_accuracy"
]
