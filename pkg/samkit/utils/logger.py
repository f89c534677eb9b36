import functools
import logging
import os
import sys
import time
from collections import defaultdict

_FORMAT = "[%(asctime)s] %(name)s %(levelname)s: %(message)s"
_DATEFMT = "%m/%d %H:%M:%S"


@functools.lru_cache()  # so that calling setup_logger multiple times won't add many handlers
def setup_logger(output=None, name="samkit", level=logging.INFO):
    """
    Initialize the samkit logger and set its verbosity level. Messages go to stderr, so stdout stays free for the
    machine readable output of the command line.

    Args:
        output (str): a file name or a directory to save the log. If None, will not save a log file.
            If it ends with ".txt" or ".log", it is assumed to be a file name, otherwise logs are saved to
            `output/log.txt`.
        name (str): the root module name of this logger
        level (int): logging level of the handlers
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False

    formatter = logging.Formatter(_FORMAT, datefmt=_DATEFMT)
    ch = logging.StreamHandler(stream=sys.stderr)
    ch.setLevel(level)
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    if output is not None:
        if output.endswith(".txt") or output.endswith(".log"):
            filename = output
        else:
            filename = os.path.join(output, "log.txt")
        os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
        fh = logging.FileHandler(filename)
        fh.setLevel(level)
        fh.setFormatter(formatter)
        logger.addHandler(fh)
    return logger


_LOG_TIMER = defaultdict(float)


def log_every_n_seconds(lvl, msg, n=1, *, name=None):
    """
    Log no more than once every n seconds from the same call site.

    Args:
        lvl (int): the logging level
        msg (str):
        n (int):
        name (str): name of the logger to use. Will use the caller's module by default.
    """
    frame = sys._getframe(1)
    caller_key = (frame.f_code.co_filename, frame.f_lineno)
    if name is None:
        name = frame.f_globals.get("__name__", "samkit")
    last_logged = _LOG_TIMER.get(caller_key, None)
    current_time = time.time()
    if last_logged is None or current_time - last_logged >= n:
        logging.getLogger(name).log(lvl, msg)
        _LOG_TIMER[caller_key] = current_time
