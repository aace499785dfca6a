"""Configuration management for einflag."""

import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional
import yaml

from .logger import get_logger

logger = get_logger("config")

_config: Optional["Config"] = None

PRECISION_ENV = "EINFLAG_PRECISION"
MIN_WIDTH_EXPONENT = 8


class Config:
    """Application configuration loaded from YAML files."""

    def __init__(self, config_dir: Optional[Path] = None):
        if config_dir is None:
            config_dir = Path(__file__).parent.parent.parent / "config"

        self.config_dir = config_dir
        self._default: dict[str, Any] = {}

        self._load_configs()

    def _load_configs(self) -> None:
        """Load configuration files and the environment override."""
        default_path = self.config_dir / "default.yaml"
        user_path = self.config_dir / "user.yaml"

        self._default = {}
        if default_path.exists():
            with open(default_path, "r", encoding="utf-8") as f:
                self._default = yaml.safe_load(f) or {}
            logger.debug(f"Loaded default config from {default_path}")
        else:
            logger.warning(f"Default config not found at {default_path}")

        if user_path.exists():
            with open(user_path, "r", encoding="utf-8") as f:
                user_config = yaml.safe_load(f) or {}
                self._merge_config(self._default, user_config)
            logger.debug(f"Loaded user config from {user_path}")

        self._apply_environment()

    def _apply_environment(self) -> None:
        raw = os.environ.get(PRECISION_ENV)
        if raw is None:
            return
        try:
            exponent = int(raw)
        except ValueError:
            logger.warning(f"Ignoring {PRECISION_ENV}={raw!r}: not an integer")
            return
        if exponent < MIN_WIDTH_EXPONENT:
            logger.warning(f"Ignoring {PRECISION_ENV}={exponent}: must be at least {MIN_WIDTH_EXPONENT}")
            return
        self._merge_config(self._default, {"precision": {"width_exponent": exponent}})
        logger.debug(f"Certification width exponent set to {exponent} from environment")

    def _merge_config(self, base: dict, override: dict) -> None:
        """Recursively merge override config into base config."""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value using dot notation."""
        keys = key.split(".")
        value = self._default

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    @property
    def app_name(self) -> str:
        return self.get("app.name", "einflag")

    @property
    def app_version(self) -> str:
        return self.get("app.version", "0.1.0")

    @property
    def width_exponent(self) -> int:
        return int(self.get("precision.width_exponent", 80))

    @property
    def max_width_exponent(self) -> int:
        return int(self.get("precision.max_width_exponent", 4096))

    @property
    def certification_width(self) -> Fraction:
        """Target width of certified root intervals."""
        return Fraction(1, 2 ** self.width_exponent)

    @property
    def minimum_width(self) -> Fraction:
        """Width below which refinement gives up on a sign decision."""
        return Fraction(1, 2 ** self.max_width_exponent)

    @property
    def report_digits(self) -> int:
        return int(self.get("report.digits", 30))

    @property
    def report_format(self) -> str:
        return self.get("report.format", "table")

    @property
    def sweep_jobs(self) -> int:
        return int(self.get("sweep.jobs", 1))

    @property
    def newton_grid_density(self) -> int:
        return int(self.get("newton.grid_density", 10))

    @property
    def newton_upper(self) -> float:
        return float(self.get("newton.upper", 6.0))

    @property
    def newton_max_iterations(self) -> int:
        return int(self.get("newton.max_iterations", 60))

    @property
    def newton_tolerance(self) -> float:
        return float(self.get("newton.tolerance", 1e-12))

    @property
    def newton_cluster_radius(self) -> float:
        return float(self.get("newton.cluster_radius", 1e-6))

    @property
    def log_level(self) -> str:
        return self.get("logging.level", "INFO")

    @property
    def log_to_file(self) -> bool:
        return bool(self.get("logging.to_file", False))

    @property
    def log_dir(self) -> Path:
        """Log directory; relative paths resolve against the project root."""
        path = Path(self.get("logging.dir", "data/logs"))
        if path.is_absolute():
            return path
        return Path(__file__).resolve().parents[2] / path


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = Config()
    return _config


def reset_config() -> None:
    """Drop the global instance so the next get_config() reloads."""
    global _config
    _config = None
