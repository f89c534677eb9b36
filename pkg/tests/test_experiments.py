import math

import pytest

from samkit.bounds import cover_bound
from samkit.data import SynthConfig, synth_generate
from samkit.errors import InputError, ParameterDomainError
from samkit.pipeline import PipelineConfig, bound_curve, coverage_experiment, overlap_scores, sample_size_sweep


def _allowed_rate(trials, delta=0.05):
    return delta + 3.0 * math.sqrt(delta * (1.0 - delta) / trials)


def test_coverage_holds_on_a_small_run():
    result = coverage_experiment(n=50, dim=1, method="cover", delta=0.05, trials=100, seed=7, holdout=2000)
    assert result.trials == 100
    assert result.violation_rate <= _allowed_rate(100)
    assert result.delta_n == cover_bound(50, 1, 0.05).delta_n
    assert 0.0 <= result.mean_empirical_risk <= 1.0
    assert result.mean_actual_risk < 0.5


def test_coverage_is_seeded_and_independent_of_workers():
    kwargs = dict(n=30, dim=2, method="vc", delta=0.05, trials=100, seed=3, holdout=500)
    first = coverage_experiment(**kwargs)
    assert coverage_experiment(**kwargs) == first
    assert coverage_experiment(threads=2, **kwargs) == first


def test_coverage_needs_enough_trials():
    with pytest.raises(ParameterDomainError):
        coverage_experiment(n=50, dim=1, method="cover", delta=0.05, trials=99, seed=0)
    with pytest.raises(ParameterDomainError):
        coverage_experiment(n=50, dim=1, method="cover", delta=1.5, trials=100, seed=0)


@pytest.mark.slow
@pytest.mark.parametrize("method", ["cover", "vc", "massart"])
@pytest.mark.parametrize("n", [50, 200])
@pytest.mark.parametrize("dim", [1, 2])
def test_coverage_acceptance_grid(method, n, dim):
    result = coverage_experiment(n=n, dim=dim, method=method, delta=0.05, trials=2000, seed=2024, threads=0)
    assert result.violation_rate <= _allowed_rate(2000)


def test_bound_curve():
    table = bound_curve([400, 100, 200, 100], [2, 1], "cover", 0.05)
    assert list(table.columns) == ["method", "n", "dim", "delta", "delta_n", "vacuous"]
    assert list(zip(table["dim"], table["n"])) == [(1, 100), (1, 200), (1, 400), (2, 100), (2, 200), (2, 400)]
    assert table["delta_n"].iloc[2] == cover_bound(400, 1, 0.05).delta_n
    with pytest.raises(InputError):
        bound_curve([], [1], "cover", 0.05)


def test_overlap_scores():
    scores = overlap_scores({0, 1, 5}, {0, 1, 2}, range(10))
    assert scores.sensitivity == pytest.approx(2 / 3)
    assert scores.specificity == pytest.approx(6 / 7)
    assert scores.dice == pytest.approx(4 / 6)
    assert scores.overlap == pytest.approx(2 / 3)
    empty = overlap_scores(set(), set(), range(4))
    assert (empty.sensitivity, empty.specificity, empty.dice, empty.overlap) == (1.0, 1.0, 1.0, 1.0)


def _sweep_data(seed):
    return synth_generate(SynthConfig(n=400, rois=20, voxels_per_roi=10, effect_rois=(0, 1, 2), effect_size=1.5,
                                      seed=seed))


def test_sample_size_sweep_is_nested():
    data = _sweep_data(8)
    result = sample_size_sweep(data.dataset, data.parcellation, PipelineConfig(), [400, 100, 200])
    assert sorted(result.reports) == [100, 200, 400]
    assert result.significant_sets()[400] == data.ground_truth
    assert list(result.stability["n_from"]) == [100, 200]
    assert result.stability["nested"].all()
    assert len(result.regions) == 3 * 20
    with pytest.raises(InputError):
        sample_size_sweep(data.dataset, data.parcellation, PipelineConfig(), [])


@pytest.mark.slow
def test_nesting_across_seeds():
    nested = 0
    for seed in range(100):
        data = _sweep_data(seed)
        result = sample_size_sweep(data.dataset, data.parcellation, PipelineConfig(), [100, 200, 400])
        nested += bool(result.stability["nested"].all())
    assert nested >= 90


def test_near_one_delta_degenerates():
    result = coverage_experiment(n=40, dim=1, method="cover", delta=0.999, trials=100, seed=1, holdout=500)
    assert result.violation_rate <= 0.999


@pytest.mark.slow
def test_vc_no_worse_than_cover():
    cover = coverage_experiment(n=200, dim=1, method="cover", delta=0.05, trials=2000, seed=5, threads=0)
    vc = coverage_experiment(n=200, dim=1, method="vc", delta=0.05, trials=2000, seed=5, threads=0)
    assert vc.violation_rate <= cover.violation_rate + 3.0 * math.sqrt(0.05 * 0.95 / 2000)
