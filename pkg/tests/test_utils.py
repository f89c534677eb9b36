import logging
import os

import numpy as np
import pytest

from samkit.utils import log_every_n_seconds, parallel_map, resolve_threads, substream


def _square(value):
    return value * value


def test_parallel_map_keeps_order():
    items = list(range(25))
    expected = [v * v for v in items]
    assert parallel_map(_square, items) == expected
    assert parallel_map(_square, items, threads=3, chunksize=4) == expected
    assert parallel_map(_square, []) == []


def test_resolve_threads():
    assert resolve_threads(2) == 2
    assert resolve_threads(0) == (os.cpu_count() or 1)
    with pytest.raises(ValueError):
        resolve_threads(-1)


def test_substreams_depend_only_on_their_keys():
    np.testing.assert_array_equal(substream(5, 1, 2).normal(size=4), substream(5, 1, 2).normal(size=4))
    assert not np.array_equal(substream(5, 1).normal(size=4), substream(5, 2).normal(size=4))
    assert not np.array_equal(substream(5, 1).normal(size=4), substream(6, 1).normal(size=4))


def test_log_every_n_seconds_throttles(samkit_log):
    for _ in range(5):
        log_every_n_seconds(logging.INFO, "progress", n=60, name="samkit.test")
    assert sum(r.getMessage() == "progress" for r in samkit_log.records) == 1
