"""
Partial least squares feature extraction for a single binary response.

Each component takes the unit direction ω maximizing cov(Xω, y)^2 on the current (deflated) matrix, which for one
response is X^T y / ||X^T y||, then removes the rank one part s·p^T explained by the score s = Xω.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from samkit.errors import DegenerateDirectionError, InputError, ParameterDomainError, ShapeError

logger = logging.getLogger(__name__)

# ||X^T y|| below this fraction of ||X||·||y|| counts as zero covariance
_ZERO_COVARIANCE = 1e-12


@dataclass(frozen=True)
class PlsModel:
    weights: np.ndarray
    loadings: np.ndarray
    x_mean: np.ndarray
    train_scores: np.ndarray

    @property
    def k(self) -> int:
        return self.weights.shape[1]

    @property
    def n_features(self) -> int:
        return self.weights.shape[0]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "weights": self.weights.tolist(),
            "loadings": self.loadings.tolist(),
            "x_mean": self.x_mean.tolist(),
        }


def _subtract_rank_one(x: np.ndarray, s: np.ndarray, p: np.ndarray) -> np.ndarray:
    return x - np.outer(s, p)


def deflate(x: np.ndarray, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Regress every column of x on the score s and remove the fit.

    @param x: n x d matrix
    @param s: score vector of length n
    @return: (x - s·p^T, p) with loadings p = x^T s / (s^T s), so that the deflated matrix is orthogonal to s
    """
    x = np.asarray(x, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)
    if x.ndim != 2 or s.shape != (x.shape[0],):
        raise ShapeError(f"Cannot deflate a matrix of shape {x.shape} with a score of shape {s.shape}.")
    ss = float(s @ s)
    if ss <= 0.0:
        raise DegenerateDirectionError("Score vector is zero, nothing to deflate with.")
    p = (x.T @ s) / ss
    return _subtract_rank_one(x, s, p), p


def _check_labels(y: np.ndarray, n: int) -> np.ndarray:
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (n,):
        raise ShapeError(f"Expected {n} labels, got shape {y.shape}.")
    if not np.all(np.isin(y, (-1.0, 1.0))):
        raise InputError("Labels must be -1 or +1.")
    if np.all(y == y[0]):
        raise InputError("Both classes must be present.")
    return y


def pls_fit(x: np.ndarray, y: np.ndarray, k: int = 1) -> PlsModel:
    """
    Extract k PLS components from x against the ±1 labels y.

    The columns of x are centered and the means stored for `pls_transform`; y is used as given. Every weight vector
    is signed so its score has non-negative covariance with y.

    Raises:
        DegenerateDirectionError: component j has zero covariance with the labels (j is reported 1-based)
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2:
        raise ShapeError(f"x must be a 2d array, got shape {x.shape}.")
    n, d = x.shape
    if n < 2:
        raise InputError(f"Need at least 2 samples, got {n}.")
    y = _check_labels(y, n)
    if int(k) != k or not 1 <= k <= d:
        raise ParameterDomainError(f"Number of components must be in [1, {d}], got {k!r}.")
    k = int(k)

    x_mean = x.mean(axis=0)
    xj = x - x_mean
    weights = np.empty((d, k))
    loadings = np.empty((d, k))
    scores = np.empty((n, k))
    y_norm = float(np.linalg.norm(y))
    for j in range(k):
        covariance = xj.T @ y
        norm = float(np.linalg.norm(covariance))
        if norm <= _ZERO_COVARIANCE * max(float(np.linalg.norm(xj)), 1.0) * y_norm:
            raise DegenerateDirectionError(f"Component {j + 1} has zero covariance with the labels.", component=j + 1)
        w = covariance / norm
        s = xj @ w
        if s @ y < 0:
            w = -w
            s = xj @ w
        xj, p = deflate(xj, s)
        weights[:, j] = w
        loadings[:, j] = p
        scores[:, j] = s
    return PlsModel(weights=weights, loadings=loadings, x_mean=x_mean, train_scores=scores)


def pls_transform(model: PlsModel, x: np.ndarray) -> np.ndarray:
    """
    Scores of new rows: the stored centering, then the same weight and deflation chain as in `pls_fit`. On the
    training matrix this repeats the fitting arithmetic step by step and returns `train_scores` exactly.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 1:
        x = x[None, :]
    if x.ndim != 2 or x.shape[1] != model.n_features:
        raise ShapeError(f"Model was fitted on {model.n_features} features, got shape {x.shape}.")
    xj = x - model.x_mean
    scores = np.empty((x.shape[0], model.k))
    for j in range(model.k):
        # contiguous copies, as in the fitting loop, so the products round the same way
        s = xj @ np.ascontiguousarray(model.weights[:, j])
        xj = _subtract_rank_one(xj, s, np.ascontiguousarray(model.loadings[:, j]))
        scores[:, j] = s
    return scores
