"""
Monte Carlo estimate of the Rademacher average of the 0-1 loss class of homogeneous linear classifiers on a fixed
sample, E_σ sup_g |(1/n) sum_i σ_i g(Z_i)|. The finite class lemma bounds it by 2·sqrt(log N / n).
"""

import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from samkit.errors import InputError, ParameterDomainError, ShapeError
from samkit.learners.svm import LinearClassifier, predict, svm_fit
from samkit.utils import parallel_map, substream

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RademacherEstimate:
    estimate: float
    stderr: float
    trials: int
    n: int


def _direction_for(x: np.ndarray, targets: np.ndarray, c_reg: float) -> LinearClassifier:
    # ERM against the pseudo labels is approximated by the hinge-loss SVM through the origin; with a single
    # pseudo class the SVM is undefined and the mean signed direction is used instead
    if np.all(targets == targets[0]):
        w = (targets[:, None] * x).sum(axis=0)
        return LinearClassifier(w=w, b=0.0, c_reg=c_reg, converged=True, final_objective=0.0)
    return svm_fit(x, targets, c_reg=c_reg, tol=1e-4, max_iter=200, fit_intercept=False)


def _rademacher_trial(trial: int, features: np.ndarray, labels: np.ndarray, seed: int, c_reg: float) -> float:
    rng = substream(seed, trial)
    sigma = rng.integers(0, 2, size=labels.shape[0]) * 2.0 - 1.0
    best = 0.0
    # sign -1 asks to misclassify where σ = +1 and fit where σ = -1, raising the signed sum; sign +1 lowers it
    for sign in (-1.0, 1.0):
        targets = sign * sigma * labels
        model = _direction_for(features, targets, c_reg)
        losses = (predict(model, features) != labels).astype(np.float64)
        best = max(best, abs(float(np.mean(sigma * losses))))
    return best


def rademacher_average(features, labels, trials: int, seed: int, c_reg: float = 1.0, threads: int = 1):
    """
    Array level estimator behind `rademacher_monte_carlo`; accepts any sample size, n = 1 included.

    @return: RademacherEstimate with the mean over trials and its standard error
    """
    features = np.asarray(features, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.float64)
    if features.ndim == 1:
        features = features[:, None]
    if features.ndim != 2 or labels.shape != (features.shape[0],):
        raise ShapeError(f"Features {features.shape} and labels {labels.shape} do not match.")
    if features.shape[0] == 0:
        raise InputError("Cannot estimate a Rademacher average on an empty sample.")
    if int(trials) != trials or trials < 1:
        raise ParameterDomainError(f"trials must be an integer >= 1, got {trials!r}.")

    trial_fn = functools.partial(_rademacher_trial, features=features, labels=labels, seed=seed, c_reg=c_reg)
    values = np.asarray(parallel_map(trial_fn, range(int(trials)), threads=threads, chunksize=16))
    stderr = float(values.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return RademacherEstimate(estimate=float(values.mean()), stderr=stderr, trials=int(trials),
                              n=features.shape[0])


def rademacher_monte_carlo(dataset, trials: int, seed: int, c_reg: float = 1.0,
                           threads: int = 1) -> RademacherEstimate:
    """
    Estimate the Rademacher average of the linear loss class on `dataset`. Every trial draws σ from its own seeded
    substream and takes the inner supremum by fitting the classifier to σ-derived pseudo labels in both directions.
    """
    return rademacher_average(dataset.features, dataset.labels, trials, seed, c_reg=c_reg, threads=threads)
