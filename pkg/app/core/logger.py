import logging

from app.core.config import Config

logger = logging.getLogger("qcubes")
if not logger.handlers:
    handler = logging.StreamHandler()
    formatter = logging.Formatter("[%(asctime)s] [%(levelname)s] %(message)s")
    handler.setFormatter(formatter)
    logger.addHandler(handler)
logger.setLevel(getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO))


def set_verbose(verbose: bool) -> None:
    logger.setLevel(logging.DEBUG if verbose else getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO))
