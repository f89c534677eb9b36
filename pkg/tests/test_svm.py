import logging

import numpy as np
import pytest

from samkit.errors import InputError, ParameterDomainError
from samkit.learners import LinearClassifier, empirical_risk, majority_classifier, predict, svm_fit


def _clusters(rng, n, shift, k=2):
    y = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    x = rng.normal(size=(n, k)) + shift * y[:, None]
    return x, y


def test_separable_sample_has_zero_risk(rng):
    for _ in range(20):
        x, y = _clusters(rng, 40, shift=4.0)
        model = svm_fit(x, y)
        assert model.converged
        assert empirical_risk(model, x, y).errors == 0


@pytest.mark.parametrize("k, shift", [(1, 3.0), (2, 2.0), (3, 2.0)])
def test_risk_close_to_best_random_classifier(rng, k, shift):
    for _ in range(100):
        x, y = _clusters(rng, 60, shift=shift, k=k)
        risk = empirical_risk(svm_fit(x, y), x, y).errors
        w = rng.normal(size=(500, k))
        b = rng.normal(scale=2.0, size=500)
        random_errors = np.count_nonzero(np.where(x @ w.T + b >= 0, 1.0, -1.0) != y[:, None], axis=0)
        assert risk <= random_errors.min() + 1


def test_one_dimensional_scores(rng):
    x, y = _clusters(rng, 50, shift=3.0, k=1)
    model = svm_fit(x[:, 0], y)
    assert model.k == 1
    assert model.w[0] > 0
    assert empirical_risk(model, x, y).empirical_accuracy >= 0.9


def test_without_intercept_bias_is_zero(rng):
    x, y = _clusters(rng, 30, shift=2.0)
    assert svm_fit(x, y, fit_intercept=False).b == 0.0


def test_iteration_cap_reports_no_convergence(rng, samkit_log):
    x, y = _clusters(rng, 200, shift=0.2)
    model = svm_fit(x, y, tol=1e-12, max_iter=1)
    assert not model.converged
    assert model.iterations == 1
    assert any(r.levelno == logging.WARNING and "duality gap" in r.getMessage() for r in samkit_log.records)


def test_fit_is_deterministic(rng):
    x, y = _clusters(rng, 80, shift=0.5)
    first, second = svm_fit(x, y), svm_fit(x, y)
    np.testing.assert_array_equal(first.w, second.w)
    assert first.b == second.b


def test_tie_predicts_positive():
    model = LinearClassifier(w=np.zeros(2), b=0.0, c_reg=1.0, converged=True, final_objective=0.0)
    np.testing.assert_array_equal(predict(model, np.ones((3, 2))), [1, 1, 1])


def test_majority_classifier():
    y = np.array([1.0, -1.0, -1.0, -1.0])
    risk = empirical_risk(majority_classifier(y, 2), np.zeros((4, 2)), y)
    assert risk.errors == 1
    assert risk.empirical_accuracy == 0.75
    assert risk.empirical_risk + risk.empirical_accuracy == 1.0
    assert majority_classifier(np.array([1.0, -1.0]), 1).b == 1.0


def test_argument_checks(rng):
    x, y = _clusters(rng, 10, shift=1.0)
    with pytest.raises(InputError):
        svm_fit(x, np.ones(10))
    with pytest.raises(ParameterDomainError):
        svm_fit(x, y, c_reg=0.0)
    with pytest.raises(InputError):
        svm_fit(x[:1], y[:1])


def test_separable_pair():
    model = svm_fit(np.array([[-1.0], [1.0]]), np.array([-1.0, 1.0]))
    assert model.w[0] > 0
    assert empirical_risk(model, [[-1.0], [1.0]], [-1.0, 1.0]).empirical_risk == 0.0


def test_irreducible_noise():
    x, y = np.zeros((2, 1)), np.array([1.0, -1.0])
    assert empirical_risk(svm_fit(x, y), x, y).empirical_risk == 0.5


def test_separable_with_margin(rng):
    direction = np.array([1.0, 1.0]) / np.sqrt(2.0)
    x = rng.uniform(-3.0, 3.0, size=(400, 2))
    x = x[np.abs(x @ direction) >= 0.5][:100]
    y = np.where(x @ direction > 0, 1.0, -1.0)
    assert empirical_risk(svm_fit(x, y, c_reg=10.0), x, y).empirical_risk == 0.0


def test_prediction_sign():
    model = LinearClassifier(w=np.array([1.0]), b=-2.0, c_reg=1.0, converged=True, final_objective=0.0)
    np.testing.assert_array_equal(predict(model, [[1.0]]), [-1])
    np.testing.assert_array_equal(predict(model.scaled(0.0), [[1.0]]), [1])


def test_risk_is_an_exact_fraction():
    model = LinearClassifier(w=np.array([1.0]), b=0.0, c_reg=1.0, converged=True, final_objective=0.0)
    x = np.array([[1.0], [2.0], [3.0], [-1.0], [-2.0], [4.0], [-3.0]])
    y = np.array([1.0, 1.0, -1.0, -1.0, -1.0, 1.0, 1.0])
    risk = empirical_risk(model, x, y)
    assert risk.errors == 2
    assert risk.empirical_risk == 2 / 7
    balanced = np.array([1.0, -1.0, 1.0, -1.0])
    constant = LinearClassifier(w=np.zeros(1), b=1.0, c_reg=1.0, converged=True, final_objective=0.0)
    assert empirical_risk(constant, np.zeros((4, 1)), balanced).empirical_risk == 0.5


@pytest.mark.parametrize("c_reg", [0.1, 1.0, 10.0])
def test_objective_below_the_zero_start(rng, c_reg):
    x, y = _clusters(rng, 60, shift=1.0)
    model = svm_fit(x, y, c_reg=c_reg)
    # w = 0, b = 0 leaves every hinge term at 1
    assert model.final_objective <= c_reg * 60


def test_prediction_invariant_under_positive_rescaling(rng):
    x, y = _clusters(rng, 40, shift=1.0, k=3)
    model = svm_fit(x, y)
    batch = rng.normal(scale=3.0, size=(100, 3))
    expected = predict(model, batch)
    for factor in (2.0, 0.5, 2.0 ** -20, 2.0 ** 20):
        np.testing.assert_array_equal(predict(model.scaled(factor), batch), expected)
