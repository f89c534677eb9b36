# __init__.py

from .config import Denominator, PipelineConfig
from .experiments import (CoverageResult, OverlapScores, SweepResult, bound_curve, coverage_experiment,
                          overlap_scores, rademacher_experiment, sample_size_sweep)
from .roi import analyze_roi, build_sam, denominator_for, method_comparison

__all__ = [
    "Denominator",
    "PipelineConfig",
    "CoverageResult",
    "OverlapScores",
    "SweepResult",
    "bound_curve",
    "coverage_experiment",
    "overlap_scores",
    "rademacher_experiment",
    "sample_size_sweep",
    "analyze_roi",
    "build_sam",
    "denominator_for",
    "method_comparison"
]
