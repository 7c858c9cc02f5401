"""
Configuration System
====================

Loads and manages budgets, size limits and verification settings from
ppart_config.yaml (or the file named by the PPART_CONFIG environment variable).
"""

import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import yaml

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "ppart_config.yaml"
CONFIG_ENV_VAR = "PPART_CONFIG"


@dataclass
class OracleBudget:
    """Upper bounds for brute-force enumeration."""

    max_candidate_maps: int = 10**7
    max_linear_extensions: int = 10**6

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'OracleBudget':
        """Create budget from dictionary."""
        return cls(
            max_candidate_maps=data.get('max_candidate_maps', 10**7),
            max_linear_extensions=data.get('max_linear_extensions', 10**6),
        )


@dataclass
class SizeLimits:
    """Input size limits for the closed-form applications."""

    macmahon_total: int = 10
    chromatic_vertices: int = 8
    kreweras_cells: int = 12
    stirling_k: int = 6
    lambda_p: int = 5
    lambda_s: int = 3
    polytope_p: int = 6
    polytope_m: int = 5

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SizeLimits':
        """Create limits from dictionary."""
        defaults = cls()
        return cls(**{name: data.get(name, getattr(defaults, name)) for name in defaults.__dataclass_fields__})


@dataclass
class VerifySettings:
    """Parameters of the `verify` oracle suite."""

    m_max: int = 4
    t_max: int = 10
    n_vars: int = 3
    enabled_checks: List[str] = field(default_factory=list)  # empty = all

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerifySettings':
        """Create settings from dictionary."""
        return cls(
            m_max=data.get('m_max', 4),
            t_max=data.get('t_max', 10),
            n_vars=data.get('n_vars', 3),
            enabled_checks=list(data.get('enabled_checks') or []),
        )

    def is_enabled(self, check_name: str) -> bool:
        """Check if a named verification is enabled."""
        return not self.enabled_checks or check_name in self.enabled_checks


@dataclass
class PpartConfig:
    """Complete ppart configuration."""

    budget: OracleBudget = field(default_factory=OracleBudget)
    limits: SizeLimits = field(default_factory=SizeLimits)
    verify: VerifySettings = field(default_factory=VerifySettings)
    verbose_logging: bool = False

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PpartConfig':
        """Create configuration from dictionary."""
        return cls(
            budget=OracleBudget.from_dict(data.get('budget') or {}),
            limits=SizeLimits.from_dict(data.get('limits') or {}),
            verify=VerifySettings.from_dict(data.get('verify') or {}),
            verbose_logging=data.get('verbose_logging', False),
        )

    @classmethod
    def load(cls, config_path: Path) -> 'PpartConfig':
        """
        Load configuration from YAML file.

        Args:
            config_path: Path to ppart_config.yaml

        Returns:
            PpartConfig instance (defaults if the file is missing or empty)

        Raises:
            yaml.YAMLError: If config file is invalid YAML
        """
        if not config_path.exists():
            logger.debug("No config at %s, using defaults", config_path)
            return cls()

        with open(config_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)

        if data is None:
            return cls()

        logger.debug("Loaded config from %s", config_path)
        return cls.from_dict(data)

    @classmethod
    def discover(cls, directory: Optional[Path] = None) -> 'PpartConfig':
        """
        Load configuration from $PPART_CONFIG or from the given directory.

        Args:
            directory: Directory holding ppart_config.yaml (defaults to cwd)
        """
        env_path = os.environ.get(CONFIG_ENV_VAR)
        if env_path:
            return cls.load(Path(env_path))
        return cls.load((directory or Path.cwd()) / CONFIG_FILENAME)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            'budget': {
                'max_candidate_maps': self.budget.max_candidate_maps,
                'max_linear_extensions': self.budget.max_linear_extensions,
            },
            'limits': {name: getattr(self.limits, name) for name in self.limits.__dataclass_fields__},
            'verify': {
                'm_max': self.verify.m_max,
                't_max': self.verify.t_max,
                'n_vars': self.verify.n_vars,
                'enabled_checks': list(self.verify.enabled_checks),
            },
            'verbose_logging': self.verbose_logging,
        }

    def save(self, config_path: Path) -> None:
        """
        Save configuration to YAML file.

        Args:
            config_path: Path where to save ppart_config.yaml
        """
        with open(config_path, 'w', encoding='utf-8') as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)


# Singleton instance for easy access
_config_instance: Optional[PpartConfig] = None


def get_config(directory: Optional[Path] = None) -> PpartConfig:
    """
    Get current configuration instance.

    Args:
        directory: Optional directory to discover ppart_config.yaml in

    Returns:
        PpartConfig instance
    """
    global _config_instance

    if _config_instance is None:
        if directory is not None or os.environ.get(CONFIG_ENV_VAR):
            _config_instance = PpartConfig.discover(directory)
        else:
            _config_instance = PpartConfig()

    return _config_instance


def set_config(config: PpartConfig) -> None:
    """
    Set the configuration instance (useful for testing).

    Args:
        config: PpartConfig to use
    """
    global _config_instance
    _config_instance = config


def reset_config() -> None:
    """Reset configuration to None (useful for testing)."""
    global _config_instance
    _config_instance = None


@contextmanager
def use_config(config: PpartConfig) -> Iterator[PpartConfig]:
    """
    Install config as the current instance for the duration of a block.

    The previous instance (possibly None) is restored on exit.
    """
    global _config_instance
    previous = _config_instance
    _config_instance = config
    try:
        yield config
    finally:
        _config_instance = previous
