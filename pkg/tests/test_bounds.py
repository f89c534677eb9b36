import math

import numpy as np
import pytest

from samkit.bounds import (BoundMethod, BoundRequest, compute_bound, cover_bound, hoeffding_term, log_growth_cover,
                           massart_bound, vc_bound)
from samkit.errors import ParameterDomainError


def test_cover_bound_at_500_subjects():
    result = cover_bound(500, 1, 0.05)
    assert result.delta_n == pytest.approx(0.0707, abs=1e-4)
    assert result.delta_n < 0.10
    assert not result.vacuous


def test_vc_bound_is_more_pessimistic_than_cover():
    vc = vc_bound(500, 2, 0.05)
    assert vc.delta_n == pytest.approx(0.1940, abs=1e-4)
    assert vc.delta_n > cover_bound(500, 1, 0.05).delta_n
    # h = dim + 1, the result reports the classifier dimension
    assert vc.dim == 1


def test_massart_with_cover_growth():
    log_n = log_growth_cover(500, 1).log_n_dichotomies
    assert log_n == pytest.approx(math.log(2.0))
    expected = 8.0 * math.sqrt(math.log(2.0) / 500) + math.sqrt(math.log(20.0) / 1000)
    assert massart_bound(500, log_n, 0.05).delta_n == pytest.approx(expected, rel=1e-12)


def test_massart_trivial_growth_is_vacuous():
    assert massart_bound(50, 50 * math.log(2.0), 0.05).vacuous


@pytest.mark.parametrize("method", list(BoundMethod))
def test_compute_bound_dispatch(method):
    request = BoundRequest(method, 300, 2, 0.05)
    result = compute_bound(request)
    if method is BoundMethod.COVER:
        expected = cover_bound(300, 2, 0.05).delta_n
    elif method is BoundMethod.VC:
        expected = vc_bound(300, 3, 0.05).delta_n
    else:
        expected = massart_bound(300, log_growth_cover(300, 2).log_n_dichotomies, 0.05).delta_n
    assert result.delta_n == expected
    assert result.method is method
    assert result.dim == 2


def test_cover_monotone_in_n_and_dim():
    values = [cover_bound(n, 2, 0.05).delta_n for n in (50, 100, 200, 400, 800)]
    assert np.all(np.diff(values) < 0)
    values = [cover_bound(200, d, 0.05).delta_n for d in (1, 2, 4, 8)]
    assert np.all(np.diff(values) > 0)


def test_smaller_delta_widens_the_bound():
    assert cover_bound(200, 1, 0.01).delta_n > cover_bound(200, 1, 0.05).delta_n


def test_tiny_sample_is_vacuous():
    result = cover_bound(1, 1, 0.05)
    assert result.vacuous
    assert result.delta_n > 1.0


def test_hoeffding_term():
    assert hoeffding_term(10, 1.0) == 0.0
    assert hoeffding_term(1000, 0.05) == pytest.approx(math.sqrt(math.log(20.0) / 2000))


@pytest.mark.parametrize("delta", [0.0, 1.0, -0.1, 1.5])
def test_delta_outside_open_interval_rejected(delta):
    with pytest.raises(ParameterDomainError):
        cover_bound(100, 1, delta)
    with pytest.raises(ParameterDomainError):
        BoundRequest("cover", 100, 1, delta)


def test_vc_needs_n_at_least_h():
    with pytest.raises(ParameterDomainError):
        vc_bound(2, 3, 0.05)
    with pytest.raises(ParameterDomainError):
        compute_bound(BoundRequest("vc", 2, 2, 0.05))


@pytest.mark.parametrize("n, dim", [(0, 1), (10, 0), (2.5, 1)])
def test_invalid_counts_rejected(n, dim):
    with pytest.raises(ParameterDomainError):
        BoundRequest("cover", n, dim, 0.05)


def test_negative_log_growth_rejected():
    with pytest.raises(ParameterDomainError):
        massart_bound(100, -1.0, 0.05)


def test_method_parsing():
    assert BoundMethod.parse("COVER") is BoundMethod.COVER
    assert BoundMethod.parse(BoundMethod.VC) is BoundMethod.VC
    with pytest.raises(ParameterDomainError):
        BoundMethod.parse("hoeffding")


def test_result_record():
    record = cover_bound(500, 1, 0.05).to_dict()
    assert set(record) == {"method", "n", "dim", "delta", "delta_n", "vacuous"}
    assert record["method"] == "cover"


def test_massart_examples():
    small = massart_bound(100, math.log(6.0), 0.05)
    assert small.delta_n == pytest.approx(1.1933, abs=1e-4)
    assert small.vacuous
    assert massart_bound(10 ** 8, math.log(2.0), 0.05).delta_n < 0.001
    trivial = massart_bound(1000, 1000 * math.log(2.0), 0.05)
    assert trivial.delta_n >= 8.0 * math.sqrt(math.log(2.0))
    assert trivial.vacuous


def test_hoeffding_example():
    assert hoeffding_term(200, 0.05) == pytest.approx(0.08654, abs=1e-5)


def test_bounds_are_pure():
    assert cover_bound(321, 3, 0.01) == cover_bound(321, 3, 0.01)
    assert compute_bound(BoundRequest("massart", 77, 2, 0.1)) == compute_bound(BoundRequest("massart", 77, 2, 0.1))


def test_method_members_parse_to_themselves():
    for method in BoundMethod:
        assert BoundMethod.parse(method) is method
    request = BoundRequest(BoundMethod.COVER, 500, 1, 0.05)
    assert compute_bound(request) == cover_bound(500, 1, 0.05)
