# __init__.py

from .logger import setup_logger, log_every_n_seconds
from .parallel import parallel_map, resolve_threads
from .random import substream

__all__ = [
    "setup_logger",
    "log_every_n_seconds",
    "parallel_map",
    "resolve_threads",
    "substream"
]
