"""
Linear support vector machine trained by dual coordinate descent, and the 0-1 empirical risk of its decisions.

The bias is learned as the weight of an appended constant feature, so the solver minimizes
(1/2)(||w||^2 + b^2) + C·sum_i max(0, 1 - y_i(w·x_i + b)). Coordinates are visited in a fixed cyclic order, which
keeps the fit a deterministic function of its inputs.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np

from samkit.errors import InputError, ParameterDomainError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearClassifier:
    w: np.ndarray
    b: float
    c_reg: float
    converged: bool
    final_objective: float
    iterations: int = 0

    @property
    def k(self) -> int:
        return self.w.shape[0]

    def scaled(self, factor: float) -> "LinearClassifier":
        return replace(self, w=self.w * factor, b=self.b * factor)

    def to_dict(self) -> dict:
        return {
            "w": self.w.tolist(),
            "b": self.b,
            "c_reg": self.c_reg,
            "converged": self.converged,
            "final_objective": self.final_objective,
        }


@dataclass(frozen=True)
class RiskEstimate:
    empirical_risk: float
    empirical_accuracy: float
    n: int
    errors: int


def _as_scores(scores, k=None) -> np.ndarray:
    scores = np.asarray(scores, dtype=np.float64)
    if scores.ndim == 1:
        scores = scores[:, None]
    if scores.ndim != 2:
        raise ShapeError(f"Scores must be a 2d array, got shape {scores.shape}.")
    if k is not None and scores.shape[1] != k:
        raise ShapeError(f"Classifier expects {k} columns, got {scores.shape[1]}.")
    return scores


def _as_labels(y, n: int) -> np.ndarray:
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (n,):
        raise ShapeError(f"Expected {n} labels, got shape {y.shape}.")
    if not np.all(np.isin(y, (-1.0, 1.0))):
        raise InputError("Labels must be -1 or +1.")
    return y


def _primal_objective(w, x, y, c_reg) -> float:
    hinge = np.maximum(0.0, 1.0 - y * (x @ w))
    return float(0.5 * (w @ w) + c_reg * hinge.sum())


def svm_fit(scores, y, c_reg: float = 1.0, tol: float = 1e-6, max_iter: int = 1000,
            fit_intercept: bool = True) -> LinearClassifier:
    """
    Fit a linear SVM with the hinge loss.

    Args:
        scores: n x k feature matrix (a vector is read as one column)
        y: ±1 labels, both classes present
        c_reg: trade-off between margin and hinge loss, > 0
        tol: stop once the duality gap relative to max(1, primal) is at most tol
        max_iter: maximum number of passes over the sample; hitting it returns the last iterate with
            converged=False
        fit_intercept: False fits a separator through the origin (b = 0)
    """
    x = _as_scores(scores)
    n, k = x.shape
    if n < 2:
        raise InputError(f"Need at least 2 samples, got {n}.")
    y = _as_labels(y, n)
    if np.all(y == y[0]):
        raise InputError("Both classes must be present to fit a classifier.")
    if not c_reg > 0 or not tol > 0:
        raise ParameterDomainError(f"c_reg and tol must be positive, got c_reg={c_reg!r}, tol={tol!r}.")

    if fit_intercept:
        x = np.hstack([x, np.ones((n, 1))])
    q_diag = np.einsum("ij,ij->i", x, x)
    alpha = np.zeros(n)
    w = np.zeros(x.shape[1])

    converged = False
    primal = _primal_objective(w, x, y, c_reg)
    epoch = 0
    for epoch in range(1, int(max_iter) + 1):
        for i in range(n):
            xi = x[i]
            if q_diag[i] == 0.0:
                # a zero row is always on the wrong side of the margin, its multiplier sits at the upper bound
                alpha[i] = c_reg
                continue
            gradient = y[i] * (w @ xi) - 1.0
            updated = min(max(alpha[i] - gradient / q_diag[i], 0.0), c_reg)
            if updated != alpha[i]:
                w += (updated - alpha[i]) * y[i] * xi
                alpha[i] = updated
        primal = _primal_objective(w, x, y, c_reg)
        dual = float(alpha.sum() - 0.5 * (w @ w))
        if primal - dual <= tol * max(1.0, abs(primal)):
            converged = True
            break

    if not converged:
        logger.warning("SVM did not reach the duality gap tolerance %g in %d passes.", tol, max_iter)
    if fit_intercept:
        weights, bias = w[:-1].copy(), float(w[-1])
    else:
        weights, bias = w.copy(), 0.0
    return LinearClassifier(w=weights, b=bias, c_reg=float(c_reg), converged=converged, final_objective=primal,
                            iterations=epoch)


def majority_classifier(y, k: int) -> LinearClassifier:
    """Constant predictor of the most frequent label (+1 on ties), used where no direction can be fitted."""
    y = np.asarray(y, dtype=np.float64)
    bias = 1.0 if np.sum(y > 0) >= np.sum(y < 0) else -1.0
    return LinearClassifier(w=np.zeros(k), b=bias, c_reg=0.0, converged=True, final_objective=0.0)


def predict(model: LinearClassifier, scores) -> np.ndarray:
    """sign(w·x + b) per row, with an exact zero mapped to +1."""
    x = _as_scores(scores, k=model.k)
    return np.where(x @ model.w + model.b >= 0.0, 1, -1)


def empirical_risk(model: LinearClassifier, scores, y) -> RiskEstimate:
    x = _as_scores(scores, k=model.k)
    n = x.shape[0]
    if n < 1:
        raise InputError("Cannot evaluate the risk on an empty sample.")
    y = _as_labels(y, n)
    errors = int(np.count_nonzero(predict(model, x) != y))
    return RiskEstimate(empirical_risk=errors / n, empirical_accuracy=(n - errors) / n, n=n, errors=errors)
