from .logger import logger, FinslerLogger, YELLOW_HEX
from .monitor import Timing

__all__ = ["logger",
           "FinslerLogger",
           "YELLOW_HEX",
           "Timing"]
