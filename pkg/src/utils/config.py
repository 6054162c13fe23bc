"""
Configuration management for indatt.

Loads config/config.json (falling back to config.example.json, then to
built-in defaults) and validates the command-line overrides.
"""

import copy
import json
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

from .error_handler import ConfigError, validate_fields

logger = logging.getLogger('indatt.utils.config')

MAX_DEPTH = 20
MAX_CAP = 1_000_000
OUTPUT_FORMATS = ("text", "json", "csv", "ppm", "graph6")

DEFAULT_CONFIG: Dict[str, Any] = {
    "logging": {
        "level": "INFO",
        "file": ""
    },
    "dynamics": {
        "depth": 12,
        "cap": 200000,
        "tol": 1e-9,
        "threads": 0,
        "root_tol": 1e-12,
        "max_iterations": 500,
        "polish_steps": 2
    },
    "polynomials": {
        "max_coefficient_digits": 1000000,
        "max_degree": 100000
    },
    "enumeration": {
        "max_vertices": 12,
        "progress": False
    },
    "classifier": {
        "corroborate": True,
        "depth": 10,
        "cap": 200000
    },
    "raster": {
        "width": 400,
        "height": 400,
        "max_iter": 200
    },
    "verify": {
        "seed": 20240601,
        "random_graphs": 200
    }
}


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Loads and exposes the application configuration."""

    def __init__(self, config_dir: Optional[str] = None):
        """
        Initialize the configuration manager.

        Args:
            config_dir: Directory holding config.json; None uses defaults only
        """
        self.config_dir = config_dir
        self.config_file = os.path.join(config_dir, "config.json") if config_dir else None
        self.example_file = os.path.join(config_dir, "config.example.json") if config_dir else None
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, merged over the defaults."""
        for path in (self.config_file, self.example_file):
            if path and os.path.exists(path):
                try:
                    with open(path, "r") as f:
                        loaded = json.load(f)
                except (OSError, json.JSONDecodeError) as e:
                    raise ConfigError(f"Error loading config {path}: {e}", details={"path": path})
                if not isinstance(loaded, dict):
                    raise ConfigError(f"Config {path} must contain a JSON object")
                logger.debug(f"Loaded config from {path}")
                return _deep_merge(DEFAULT_CONFIG, loaded)
        logger.debug("No config file found, using defaults")
        return copy.deepcopy(DEFAULT_CONFIG)

    def section(self, name: str) -> Dict[str, Any]:
        """
        Get a configuration section.

        Args:
            name: Section name

        Returns:
            dict: The section (validated to carry every default key)

        Raises:
            ConfigError: If the section is unknown
        """
        if name not in DEFAULT_CONFIG:
            raise ConfigError(f"Unknown config section: {name}")
        section = self.config.get(name, {})
        return validate_fields(section, list(DEFAULT_CONFIG[name].keys()),
                               f"Invalid config section '{name}'")

    def get(self, section: str, key: str) -> Any:
        return self.section(section)[key]


@dataclass(frozen=True)
class CliConfig:
    """Run-time options shared by the subcommands."""

    threads: int = 0
    depth: int = 12
    cap: int = 200000
    tol: float = 1e-9
    output_path: Optional[str] = None
    format: str = "text"

    def __post_init__(self):
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if not 0 <= self.depth <= MAX_DEPTH:
            raise ConfigError(f"depth must be in 0..{MAX_DEPTH}, got {self.depth}")
        if not 1 <= self.cap <= MAX_CAP:
            raise ConfigError(f"cap must be in 1..{MAX_CAP}, got {self.cap}")
        if self.threads < 0:
            raise ConfigError(f"threads must be non-negative, got {self.threads}")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format: {self.format}")

    @classmethod
    def from_config(cls, config_manager: ConfigManager, **overrides) -> "CliConfig":
        """
        Build a CliConfig from the dynamics section plus command-line overrides.

        Args:
            config_manager: Loaded configuration
            **overrides: Values from the command line; None means "not given"

        Returns:
            CliConfig: The validated options
        """
        dynamics = config_manager.section("dynamics")
        values = {
            "threads": dynamics["threads"],
            "depth": dynamics["depth"],
            "cap": dynamics["cap"],
            "tol": dynamics["tol"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def worker_count(self) -> int:
        """Number of worker threads; 0 means one per CPU."""
        if self.threads == 0:
            return os.cpu_count() or 1
        return self.threads
