"""Centralized logging configuration for the verifier."""

import logging
import os
import sys
from pathlib import Path
from typing import Optional

try:
    import loguru  # noqa: F401
    LOGURU_AVAILABLE = True
except ImportError:
    LOGURU_AVAILABLE = False


CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"
STDLIB_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s:%(funcName)s:%(lineno)d - %(message)s"

LOG_FILE_ENV = "LORENTZ_VERIFIER_LOG_FILE"


class VerifierLogger:
    """Centralized logger for the verifier with configurable output."""

    def __init__(self, level: str = "INFO", quiet: bool = False, verbose: bool = False,
                 log_file: Optional[Path] = None):
        self.level = level.upper()
        self.quiet = quiet
        self.verbose = verbose
        self.log_file = log_file

        if quiet:
            self.effective_level = "ERROR"
        elif verbose:
            self.effective_level = "DEBUG"
        else:
            self.effective_level = self.level

        self._setup_logging()

    def _setup_logging(self):
        if LOGURU_AVAILABLE:
            self._setup_loguru()
        else:
            self._setup_stdlib_logging()

    def _setup_loguru(self):
        from loguru import logger

        logger.remove()

        # stdout carries reports, so the console sink is stderr
        if not self.quiet:
            logger.add(sys.stderr, level=self.effective_level,
                       format=CONSOLE_FORMAT, colorize=True)

        if self.log_file:
            logger.add(self.log_file, level="DEBUG", format=FILE_FORMAT,
                       rotation="10 MB", retention="7 days")

        self.logger = logger

    def _setup_stdlib_logging(self):
        logger = logging.getLogger("lorentz_verifier")
        logger.setLevel(getattr(logging, self.effective_level))
        logger.handlers.clear()
        formatter = logging.Formatter(STDLIB_FORMAT)

        if not self.quiet:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(getattr(logging, self.effective_level))
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        if self.log_file:
            file_handler = logging.FileHandler(self.log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        self.logger = logger

    def debug(self, message: str, **kwargs):
        self.logger.debug(message, **kwargs)

    def info(self, message: str, **kwargs):
        self.logger.info(message, **kwargs)

    def warning(self, message: str, **kwargs):
        self.logger.warning(message, **kwargs)

    def error(self, message: str, **kwargs):
        self.logger.error(message, **kwargs)

    def exception(self, message: str, **kwargs):
        """Log exception with traceback."""
        self.logger.exception(message, **kwargs)


_logger: Optional[VerifierLogger] = None


def get_default_log_file() -> Path:
    """Log file path, overridable through ``LORENTZ_VERIFIER_LOG_FILE``."""
    override = os.environ.get(LOG_FILE_ENV)
    if override:
        log_file = Path(override).expanduser()
        log_file.parent.mkdir(parents=True, exist_ok=True)
        return log_file

    log_dir = Path.home() / ".lorentz-verifier" / "logs"
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir / "lorentz-verifier.log"


def setup_logging(level: str = "INFO", quiet: bool = False, verbose: bool = False,
                  log_file: Optional[Path] = None,
                  enable_file_logging: bool = False) -> VerifierLogger:
    """Setup global logging configuration."""
    global _logger

    if log_file is None and enable_file_logging:
        log_file = get_default_log_file()

    _logger = VerifierLogger(level, quiet, verbose, log_file)
    return _logger


def get_logger() -> VerifierLogger:
    """Get the global logger instance."""
    global _logger
    if _logger is None:
        _logger = VerifierLogger()
    return _logger
