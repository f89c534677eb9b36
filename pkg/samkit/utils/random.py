import numpy as np


def substream(seed: int, *keys: int) -> np.random.Generator:
    """
    Independent generator for one unit of work (a trial, a region, ...) under a run seed. The stream depends only
    on (seed, keys), never on the order in which units are processed.
    """
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in keys)))
