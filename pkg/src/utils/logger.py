import logging
import sys

from src.utils.config import Defaults

ROOT_LOGGER = Defaults.APP_NAME
_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def get_logger(name: str) -> logging.Logger:
    """Child of the application logger, e.g. ``cdpcount.src.classes.counting.engine``."""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """Attach a single stderr handler; stdout is reserved for results."""
    level = logging.getLevelName(Defaults.LOG_LEVEL)
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(handler)
    root.propagate = False
    return root
