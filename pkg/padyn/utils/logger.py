"""
padyn Logging System
Coloured console logging on stderr plus optional rotating file output
"""

import logging
import logging.handlers
import sys
from datetime import datetime
from pathlib import Path
from typing import Iterable, Optional

import colorlog


CONSOLE_FORMAT = '%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
LOG_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}
LOG_FILE_BYTES = 10 * 1024 * 1024
LOG_FILE_BACKUPS = 5


def _level(name: str) -> int:
    value = logging.getLevelName(str(name).upper())
    if not isinstance(value, int):
        raise ValueError(f"unknown log level {name!r}")
    return value


class PadynLogger:
    """
    Named logger with a colour console handler and an optional file handler
    The console handler writes to stderr: stdout belongs to the CLI's JSON output
    """

    def __init__(self, name: str, level: str = "WARNING", log_file: Optional[Path] = None):
        self.name = name
        self.logger = logging.getLogger(name)
        # the file handler takes everything, the console only `level` and above
        self.logger.setLevel(logging.DEBUG if log_file else _level(level))
        self.logger.propagate = False
        self.logger.handlers.clear()
        self._add_console(level)
        if log_file:
            self._add_file(log_file)

    def _add_console(self, level: str):
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(_level(level))
        handler.setFormatter(colorlog.ColoredFormatter(CONSOLE_FORMAT, datefmt='%H:%M:%S',
                                                       log_colors=LOG_COLORS))
        self.logger.addHandler(handler)

    def _add_file(self, log_file: Path):
        try:
            log_file.parent.mkdir(parents=True, exist_ok=True)
            handler = logging.handlers.RotatingFileHandler(
                log_file, maxBytes=LOG_FILE_BYTES, backupCount=LOG_FILE_BACKUPS, encoding='utf-8'
            )
        except OSError as e:
            self.logger.warning(f"Could not open log file {log_file}: {e}")
            return
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
        self.logger.addHandler(handler)

    def debug(self, message: str, *args, **kwargs):
        self.logger.debug(message, *args, **kwargs)

    def info(self, message: str, *args, **kwargs):
        self.logger.info(message, *args, **kwargs)

    def warning(self, message: str, *args, **kwargs):
        self.logger.warning(message, *args, **kwargs)

    def error(self, message: str, *args, **kwargs):
        self.logger.error(message, *args, **kwargs)

    def log_verdict(self, subject: str, prime: int, verdict: str, routes: Iterable[str] = ()):
        """One structured line per certificate check"""
        certified_by = ",".join(routes) or "-"
        self.info(f"VERDICT | {subject} | p={prime} | {verdict} | certified by: {certified_by}")


class Logger:
    """
    Logger factory used throughout the package
    Instances are cached per name and rebuilt by configure_global
    """

    _instances = {}
    _global_config = {
        'level': 'WARNING',
        'log_file': None
    }

    def __new__(cls, name: str):
        if name not in cls._instances:
            cls._instances[name] = PadynLogger(
                name,
                cls._global_config['level'],
                cls._global_config['log_file']
            )
        return cls._instances[name]

    @classmethod
    def configure_global(cls, level: str = "WARNING", log_file: Optional[Path] = None):
        # modules hold on to their old wrapper; rebuilding re-wires the shared logging.Logger
        _level(level)
        cls._global_config['level'] = level
        cls._global_config['log_file'] = log_file
        for name in list(cls._instances):
            cls._instances[name] = PadynLogger(name, level, log_file)


def setup_logging(level: str = "WARNING", log_file: Optional[Path] = None) -> bool:
    """
    Setup global logging configuration

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Path to log file

    Returns:
        bool: True if setup successful, False otherwise
    """
    try:
        Logger.configure_global(level, log_file)
    except ValueError as e:
        sys.stderr.write(f"Failed to setup logging: {e}\n")
        return False
    Logger("padyn").debug("padyn logging initialized")
    if log_file:
        Logger("padyn").info(f"Log file: {log_file}")
    return True


class PerformanceTimer:
    """Context manager for timing long computations"""

    def __init__(self, operation_name: str, logger: Optional[PadynLogger] = None):
        self.operation_name = operation_name
        self.logger = logger or Logger("padyn.timer")
        self.start_time = None
        self.duration = 0.0

    def __enter__(self):
        self.start_time = datetime.now()
        self.logger.debug(f"Starting {self.operation_name}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = (datetime.now() - self.start_time).total_seconds()
        if exc_type:
            self.logger.error(f"{self.operation_name} failed after {self.duration:.3f}s: {exc_val}")
        else:
            self.logger.debug(f"{self.operation_name} completed in {self.duration:.3f}s")
