"""
Monte Carlo experiments: coverage of the bounds on a two-class Gaussian population, bound curves over (n, dim),
Rademacher averages on Gaussian samples, and SAM stability across nested sample sizes.
"""

import functools
import logging
from dataclasses import asdict, dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence

import numpy as np
import pandas as pd

from samkit.bounds import BoundMethod, BoundRequest, RademacherEstimate, compute_bound, rademacher_average
from samkit.data import LabeledDataset, Parcellation, nested_subsample
from samkit.errors import DegenerateDirectionError, InputError, ParameterDomainError
from samkit.inference import SamReport
from samkit.learners import empirical_risk, majority_classifier, pls_fit, pls_transform, predict, svm_fit
from samkit.utils import log_every_n_seconds, parallel_map, substream

from .config import PipelineConfig
from .roi import build_sam

logger = logging.getLogger(__name__)

MIN_COVERAGE_TRIALS = 100
# holdout rows drawn and scored at a time
_HOLDOUT_CHUNK = 25000


@dataclass(frozen=True)
class CoverageResult:
    trials: int
    violations: int
    violation_rate: float
    method: str
    n: int
    dim: int
    delta: float
    delta_n: float
    mean_empirical_risk: float
    mean_actual_risk: float

    def to_dict(self) -> dict:
        return asdict(self)


def _two_class_gaussian(rng: np.random.Generator, n: int, dim: int, effect_size: float):
    """i.i.d. labels ±1 with probability 1/2, features N(0, I) shifted by effect_size on every axis for class +1."""
    labels = rng.integers(0, 2, size=n) * 2.0 - 1.0
    features = rng.normal(size=(n, dim))
    features[labels > 0] += effect_size
    return features, labels


def _coverage_trial(trial: int, n: int, dim: int, seed: int, holdout: int, effect_size: float, c_reg: float,
                    tol: float):
    rng = substream(seed, trial)
    features, labels = _two_class_gaussian(rng, n, dim, effect_size)
    while np.all(labels == labels[0]):
        features, labels = _two_class_gaussian(rng, n, dim, effect_size)

    try:
        pls = pls_fit(features, labels, k=dim)
        classifier = svm_fit(pls.train_scores, labels, c_reg=c_reg, tol=tol)
        transform = functools.partial(pls_transform, pls)
        train_scores = pls.train_scores
    except DegenerateDirectionError:
        classifier = majority_classifier(labels, dim)
        transform = lambda x: np.zeros((x.shape[0], dim))  # noqa: E731
        train_scores = np.zeros((n, dim))
    emp = empirical_risk(classifier, train_scores, labels).empirical_risk

    errors = 0
    remaining = holdout
    while remaining > 0:
        size = min(remaining, _HOLDOUT_CHUNK)
        x_new, y_new = _two_class_gaussian(rng, size, dim, effect_size)
        errors += int(np.count_nonzero(predict(classifier, transform(x_new)) != y_new))
        remaining -= size
    log_every_n_seconds(logging.INFO, f"coverage trial {trial} done", n=10)
    return emp, errors / holdout


def coverage_experiment(n: int, dim: int, method, delta: float, trials: int, seed: int, holdout: int = 100000,
                        effect_size: float = 1.0, c_reg: float = 1.0, tol: float = 1e-6,
                        threads: int = 1) -> CoverageResult:
    """
    Check the bound's 1 - δ guarantee empirically. Each trial draws a training sample of size n, fits PLS with
    k = dim components and the SVM, and measures the actual risk on `holdout` fresh draws from the same
    population; a violation is actual risk > empirical risk + Δ_n.
    """
    method = BoundMethod.parse(method)
    if int(trials) != trials or trials < MIN_COVERAGE_TRIALS:
        raise ParameterDomainError(f"Coverage needs at least {MIN_COVERAGE_TRIALS} trials, got {trials!r}.")
    if n < 2 or holdout < 1:
        raise ParameterDomainError(f"Need n >= 2 and a non-empty holdout, got n={n}, holdout={holdout}.")
    if effect_size < 0:
        raise ParameterDomainError(f"effect_size must be >= 0, got {effect_size!r}.")
    bound = compute_bound(BoundRequest(method, n, dim, delta))

    trial_fn = functools.partial(_coverage_trial, n=n, dim=dim, seed=seed, holdout=holdout,
                                 effect_size=effect_size, c_reg=c_reg, tol=tol)
    outcomes = np.asarray(parallel_map(trial_fn, range(int(trials)), threads=threads, chunksize=8))
    empirical, actual = outcomes[:, 0], outcomes[:, 1]
    violations = int(np.count_nonzero(actual > empirical + bound.delta_n))
    result = CoverageResult(trials=int(trials), violations=violations, violation_rate=violations / trials,
                            method=method.value, n=int(n), dim=int(dim), delta=float(delta),
                            delta_n=bound.delta_n, mean_empirical_risk=float(empirical.mean()),
                            mean_actual_risk=float(actual.mean()))
    logger.info("Coverage %s n=%d dim=%d: %d violations in %d trials (delta_n=%.4f).", method.value, n, dim,
                violations, trials, bound.delta_n)
    return result


def bound_curve(n_grid: Sequence[int], dim_grid: Sequence[int], method, delta: float) -> pd.DataFrame:
    """Δ_n over the (n, dim) grid, one row per point, ordered by dim then n."""
    if len(n_grid) == 0 or len(dim_grid) == 0:
        raise InputError("Both the n grid and the dim grid must be non-empty.")
    method = BoundMethod.parse(method)
    rows = []
    for dim in sorted(set(int(d) for d in dim_grid)):
        for n in sorted(set(int(v) for v in n_grid)):
            rows.append(compute_bound(BoundRequest(method, n, dim, delta)).to_dict())
    return pd.DataFrame(rows, columns=["method", "n", "dim", "delta", "delta_n", "vacuous"])


def rademacher_experiment(n: int, dim: int, trials: int, seed: int, effect_size: float = 0.0,
                          threads: int = 1) -> RademacherEstimate:
    """Rademacher average of the linear loss class on one Gaussian sample of size n drawn from `seed`."""
    if int(n) != n or n < 1 or int(dim) != dim or dim < 1:
        raise ParameterDomainError(f"n and dim must be integers >= 1, got n={n!r}, dim={dim!r}.")
    # the sample gets its own stream, trial streams are keyed from 0 upwards
    features, labels = _two_class_gaussian(substream(seed, 2 ** 32), int(n), int(dim), effect_size)
    return rademacher_average(features, labels, trials, seed, threads=threads)


@dataclass(frozen=True)
class OverlapScores:
    sensitivity: float
    specificity: float
    dice: float
    # share of the selected set that lies inside the reference set
    overlap: float

    def to_dict(self) -> dict:
        return asdict(self)


def overlap_scores(selected: Iterable[int], reference: Iterable[int], universe: Iterable[int]) -> OverlapScores:
    """
    Agreement of a significant set with a reference set, e.g. the planted effect regions. Ratios with an empty
    denominator are 1.0, the agreement with nothing to find is perfect.
    """
    selected, reference, universe = set(selected), set(reference), set(universe)
    tp = len(selected & reference)
    fp = len(selected - reference)
    fn = len(reference - selected)
    tn = len(universe - (selected | reference))

    def ratio(num, den):
        return num / den if den else 1.0

    return OverlapScores(sensitivity=ratio(tp, tp + fn), specificity=ratio(tn, tn + fp),
                         dice=ratio(2 * tp, len(selected) + len(reference)), overlap=ratio(tp, len(selected)))


@dataclass(frozen=True)
class SweepResult:
    reports: Dict[int, SamReport]
    # one row per (n, region)
    regions: pd.DataFrame
    # one row per consecutive pair of sample sizes
    stability: pd.DataFrame

    def significant_sets(self) -> Dict[int, FrozenSet[int]]:
        return {n: frozenset(r.significant_ids) for n, r in self.reports.items()}


def sample_size_sweep(dataset: LabeledDataset, parcellation: Parcellation, config: PipelineConfig,
                      n_grid: Sequence[int]) -> SweepResult:
    """
    Build a SAM on nested subsamples of increasing size (n/2 subjects per class, each sample containing the
    previous one) and report, for consecutive sizes, whether the significant sets are nested and how much they
    overlap.
    """
    sizes = sorted(set(int(v) for v in n_grid))
    if not sizes:
        raise InputError("The sample size grid is empty.")
    reports = {}
    rows: List[dict] = []
    for n in sizes:
        report = build_sam(nested_subsample(dataset, n), parcellation, config)
        reports[n] = report
        for a in report.analyses:
            rows.append({"n": n, "roi_id": a.roi_id, "roi_name": a.roi_name,
                         "empirical_accuracy": a.empirical_accuracy, "worst_case_accuracy": a.worst_case_accuracy,
                         "p_value": a.p_value, "significant": a.significant})

    stability = []
    universe = parcellation.roi_ids
    for smaller, larger in zip(sizes, sizes[1:]):
        before, after = set(reports[smaller].significant_ids), set(reports[larger].significant_ids)
        scores = overlap_scores(before, after, universe)
        stability.append({"n_from": smaller, "n_to": larger, "significant_from": len(before),
                          "significant_to": len(after), "nested": before <= after, "dice": scores.dice,
                          "overlap": scores.overlap})
    return SweepResult(reports=reports, regions=pd.DataFrame(rows),
                       stability=pd.DataFrame(stability, columns=["n_from", "n_to", "significant_from",
                                                                  "significant_to", "nested", "dice", "overlap"]))
