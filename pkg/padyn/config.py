"""
padyn Configuration Management
Centralizes size caps, numeric tolerances and logging settings
"""

import os
from pathlib import Path
from typing import Dict, Any, List, Optional
from dotenv import load_dotenv


VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def load_environment(env_path: Optional[Path] = None):
    """Load environment variables from a .env file (project root by default)"""
    env_path = env_path or Path.cwd() / ".env"
    if env_path.exists():
        load_dotenv(env_path)


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


class Config:
    """
    Centralized configuration for padyn
    Every value can be overridden through the environment (or a .env file)
    """

    def __init__(self):
        self.PROJECT_ROOT = Path(__file__).parent.parent
        self.load_settings()

    def load_settings(self):
        """Load all configuration settings"""
        self.APP_NAME = "padyn"
        self.APP_VERSION = "1.0.0"
        self.DEBUG_MODE = _env_bool("DEBUG", "false")

        # Logging
        self.LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
        log_file = os.getenv("LOG_FILE", "")
        self.LOG_FILE = Path(log_file) if log_file else None

        # Size caps
        self.MAX_DEGREE = int(os.getenv("PADYN_MAX_DEGREE", "4096"))
        self.MAX_HEIGHT_STEPS = int(os.getenv("PADYN_MAX_HEIGHT_STEPS", "256"))
        self.MAX_PUSHFORWARD_STEPS = int(os.getenv("PADYN_MAX_PUSHFORWARD_STEPS", "24"))
        self.ORBIT_CYCLE_STEPS = int(os.getenv("PADYN_ORBIT_CYCLE_STEPS", "32"))
        self.EXACT_BITS = int(os.getenv("PADYN_EXACT_BITS", "4096"))

        # Complex root finding
        self.ROOT_TOLERANCE = float(os.getenv("PADYN_ROOT_TOLERANCE", "1e-12"))
        self.ROOT_MAX_ITERATIONS = int(os.getenv("PADYN_ROOT_MAX_ITERATIONS", "500"))

        # Gap search
        self.WORKERS = int(os.getenv("PADYN_WORKERS", "1"))

    def validate_config(self) -> List[str]:
        """Validate configuration and return any errors"""
        errors = []

        for name in ("MAX_DEGREE", "MAX_HEIGHT_STEPS", "MAX_PUSHFORWARD_STEPS",
                     "ORBIT_CYCLE_STEPS", "EXACT_BITS", "ROOT_MAX_ITERATIONS", "WORKERS"):
            if getattr(self, name) <= 0:
                errors.append(f"{name} must be greater than 0")

        if not 0 < self.ROOT_TOLERANCE < 1:
            errors.append("ROOT_TOLERANCE must be between 0 and 1")

        if self.LOG_LEVEL not in VALID_LOG_LEVELS:
            errors.append(f"Unknown log level: {self.LOG_LEVEL}")

        return errors

    def as_dict(self) -> Dict[str, Any]:
        """Active settings, as echoed by the CLI"""
        return {
            "max_degree": self.MAX_DEGREE,
            "max_height_steps": self.MAX_HEIGHT_STEPS,
            "max_pushforward_steps": self.MAX_PUSHFORWARD_STEPS,
            "orbit_cycle_steps": self.ORBIT_CYCLE_STEPS,
            "exact_bits": self.EXACT_BITS,
            "root_tolerance": self.ROOT_TOLERANCE,
            "root_max_iterations": self.ROOT_MAX_ITERATIONS,
            "workers": self.WORKERS,
            "log_level": self.LOG_LEVEL,
        }


# Global config instance
config = Config()
