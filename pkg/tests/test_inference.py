import math

import numpy as np
import pytest
from oracles import normal_upper_tail

from samkit.errors import InputError, ParameterDomainError
from samkit.inference import (ProportionTest, RoiAnalysis, SamReport, p_value_one_sided, proportion_z,
                              select_significant, worst_case_accuracy)


def _analysis(roi_id, worst_case, empirical=None, degenerate=False):
    empirical = worst_case + 0.1 if empirical is None else empirical
    return RoiAnalysis(roi_id=roi_id, roi_name=f"r{roi_id}", n=200, k=1, empirical_accuracy=empirical, delta_n=0.1,
                       worst_case_accuracy=worst_case, z=0.0, p_value=1.0, significant=False, degenerate=degenerate)


def test_p_value_at_the_five_percent_quantile():
    assert p_value_one_sided(1.6449) == pytest.approx(0.05, abs=1e-4)
    assert p_value_one_sided(0.0) == 0.5


def _check_against_oracle(points):
    z = np.linspace(-8.0, 8.0, points)
    expected = np.array([normal_upper_tail(v) for v in z])
    np.testing.assert_allclose(p_value_one_sided(z), expected, rtol=0, atol=1e-8)


def test_p_value_matches_oracle():
    _check_against_oracle(4001)


@pytest.mark.slow
def test_p_value_matches_oracle_dense():
    _check_against_oracle(100000)


def test_p_value_far_tails():
    assert 0.0 < p_value_one_sided(40.0) < 1e-300
    assert p_value_one_sided(-40.0) == 1.0
    assert p_value_one_sided(10.0) == pytest.approx(normal_upper_tail(10.0), rel=1e-10)


def test_scalar_and_array_inputs():
    assert isinstance(p_value_one_sided(1.0), float)
    assert p_value_one_sided(np.array([1.0, 2.0])).shape == (2,)
    assert isinstance(proportion_z(0.6, ProportionTest(l=100)), float)


def test_proportion_z():
    test = ProportionTest(l=100, pi0=0.5)
    assert test.sigma0 == pytest.approx(0.05)
    assert proportion_z(0.6, test) == pytest.approx(2.0)
    np.testing.assert_allclose(proportion_z([0.5, 0.55], test), [0.0, 1.0])


def test_test_parameters_validated():
    with pytest.raises(ParameterDomainError):
        ProportionTest(l=0)
    with pytest.raises(ParameterDomainError):
        ProportionTest(l=20, pi0=1.0)
    with pytest.raises(ParameterDomainError):
        ProportionTest(l=20, alpha=0.0)
    assert not ProportionTest(l=10).large_sample()
    assert ProportionTest(l=20).large_sample()


def test_worst_case_accuracy_is_clamped():
    assert worst_case_accuracy(0.8, 0.1) == pytest.approx(0.7)
    assert worst_case_accuracy(0.3, 0.5) == 0.0


def test_select_significant():
    analyses = [_analysis(2, 0.52), _analysis(0, 0.80), _analysis(1, 0.90, degenerate=True)]
    report = select_significant(analyses, ProportionTest(l=20))
    assert [a.roi_id for a in report.analyses] == [0, 1, 2]
    assert report.significant_ids == (0,)
    first = report.analyses[0]
    assert first.z == pytest.approx(0.30 / math.sqrt(0.25 / 20))
    assert first.p_value == p_value_one_sided(first.z)
    assert report.config["l"] == 20
    assert report.config["statistic"] == "worst_case"


def test_empirical_statistic_is_less_conservative():
    analyses = [_analysis(0, 0.60, empirical=0.75)]
    worst = select_significant(analyses, ProportionTest(l=20)).analyses[0]
    raw = select_significant(analyses, ProportionTest(l=20), statistic="empirical").analyses[0]
    assert raw.z > worst.z
    assert raw.significant and not worst.significant


def test_bonferroni_lowers_the_level():
    # z = 1.9 gives p ≈ 0.029: significant alone, not at 0.05 / 20
    worst_case = 0.5 + 1.9 * math.sqrt(0.25 / 20)
    analyses = [_analysis(i, worst_case) for i in range(20)]
    assert len(select_significant(analyses, ProportionTest(l=20)).significant_ids) == 20
    assert select_significant(analyses, ProportionTest(l=20), bonferroni=True).significant_ids == ()


def test_small_denominator_warns(samkit_log):
    select_significant([_analysis(0, 0.8)], ProportionTest(l=5))
    assert "large sample" in samkit_log.text


def test_empty_input_rejected():
    with pytest.raises(InputError):
        select_significant([], ProportionTest(l=20))


def test_report_records():
    report = select_significant([_analysis(0, 0.8), _analysis(1, 0.55)], ProportionTest(l=20))
    assert SamReport.from_dict(report.to_dict()) == report
    assert report.with_config(n=200).config["n"] == 200
    assert report.n_rois == 2


def test_documented_values():
    assert worst_case_accuracy(0.85, 0.0707) == pytest.approx(0.7793)
    assert worst_case_accuracy(0.73, 0.0) == 0.73
    test = ProportionTest(l=116)
    assert proportion_z(0.5, test) == 0.0
    assert proportion_z(0.6, test) == pytest.approx(2.1541, abs=1e-3)
    assert proportion_z(0.5 + test.sigma0, test) == pytest.approx(1.0)
    assert p_value_one_sided(2.1541) == pytest.approx(0.0156, abs=1e-3)


def test_chance_level_regions_are_not_significant():
    report = select_significant([_analysis(i, 0.5) for i in range(20)], ProportionTest(l=20))
    assert report.significant_ids == ()


def test_one_region_at_seventy_percent():
    report = select_significant([_analysis(0, 0.70)], ProportionTest(l=116))
    assert report.analyses[0].z == pytest.approx(4.31, abs=1e-2)
    assert report.significant_ids == (0,)


def test_significance_monotone_in_accuracy():
    seen_significant = False
    for worst_case in np.linspace(0.5, 0.9, 81):
        significant = select_significant([_analysis(0, worst_case)], ProportionTest(l=20)).significant_ids == (0,)
        assert significant or not seen_significant
        seen_significant = seen_significant or significant
    assert seen_significant
