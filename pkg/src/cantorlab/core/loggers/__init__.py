from .logger import Logger
from .stdout_logger import StdOutLogger
