import logging

import numpy as np
import pytest

from samkit.data import SynthConfig, synth_generate
from samkit.utils import setup_logger


@pytest.fixture(autouse=True)
def reset_samkit_logger():
    yield
    # the cli installs stream handlers bound to the captured stderr of the test that ran it
    logger = logging.getLogger("samkit")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
    setup_logger.cache_clear()


@pytest.fixture
def samkit_log(caplog):
    """caplog that also sees the samkit namespace when it does not propagate."""
    logger = logging.getLogger("samkit")
    propagate = logger.propagate
    # records reach caplog once, through this handler only
    logger.propagate = False
    logger.addHandler(caplog.handler)
    caplog.set_level(logging.DEBUG, logger="samkit")
    yield caplog
    logger.removeHandler(caplog.handler)
    logger.propagate = propagate


@pytest.fixture
def rng():
    return np.random.default_rng(20240519)


@pytest.fixture(scope="session")
def planted():
    """20 regions of 50 voxels, regions 0, 1 and 2 shifted by 1.5 for class +1, n = 400."""
    return synth_generate(SynthConfig(n=400, rois=20, voxels_per_roi=50, effect_rois=(0, 1, 2), effect_size=1.5,
                                      seed=11))


@pytest.fixture(scope="session")
def null_data():
    """20 regions of 5 voxels, no effect, n = 200. Narrow enough that in-sample null accuracy stays near 0.5."""
    return synth_generate(SynthConfig(n=200, rois=20, voxels_per_roi=5, effect_size=0.0, seed=5))
