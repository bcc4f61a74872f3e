"""
padyn Utilities Module
Logging helpers shared by the library and the CLI
"""

from .logger import Logger, setup_logging, PerformanceTimer

__all__ = [
    'Logger',
    'setup_logging',
    'PerformanceTimer',
]
