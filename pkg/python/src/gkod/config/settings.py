"""
CLI settings and factor-cache resolution.
"""

import enum
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..const import DEFAULT_MAX_N, FACTOR_CACHE_ENV
from ..factor import FactorCache, bundled_cache, cache_load
from .manager import ConfigError, ConfigManager, ConfigSpec

logger = logging.getLogger(__name__)

PACKAGE_CONFIG_PATH = Path(__file__).parent

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OutputFormat(enum.StrEnum):
    TABLE = "table"
    DOT = "dot"
    STRUCTURED = "structured"


@dataclass
class CliConfig:
    cache_path: Optional[str] = field(
        default=None,
        metadata={"doc": "Factor cache file; the bundled table if unset"},
    )
    output_format: OutputFormat = field(
        default=OutputFormat.TABLE,
        metadata={"doc": "table, dot or structured"},
    )
    max_n: int = field(
        default=DEFAULT_MAX_N,
        metadata={"doc": "Largest n for table2 when --max-n is not given"},
    )
    log_level: str = field(default="WARNING", metadata={"doc": "Log level"})

    def __post_init__(self):
        try:
            self.output_format = OutputFormat(self.output_format)
        except ValueError as e:
            raise ConfigError(
                message=f"unknown output_format {self.output_format!r}",
                spec_name="settings",
                cause=e,
            )
        if (
            isinstance(self.max_n, bool)
            or not isinstance(self.max_n, int)
            or self.max_n < 2
        ):
            raise ConfigError(
                message=f"max_n must be an integer >= 2, got {self.max_n!r}",
                spec_name="settings",
            )
        self.log_level = str(self.log_level).upper()
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(
                message=f"unknown log_level {self.log_level!r}",
                spec_name="settings",
            )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CliConfig":
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ConfigError(
                message=f"unknown settings: {', '.join(unknown)}",
                spec_name="settings",
            )
        return cls(**known)


def create_config_manager(
    search_paths: Optional[List[Path]] = None,
) -> ConfigManager:
    manager = ConfigManager(
        search_paths=search_paths, package_config_path=PACKAGE_CONFIG_PATH
    )
    manager.register(
        ConfigSpec(
            name="settings", pattern="settings.yaml", dataclass=CliConfig
        )
    )
    return manager


def load_settings(search_paths: Optional[List[Path]] = None) -> CliConfig:
    return create_config_manager(search_paths).get("settings")


def resolve_cache_path(
    flag: Optional[str], config: Optional[CliConfig] = None
) -> Optional[Path]:
    """--cache, then $GK_FACTOR_CACHE, then the cache_path setting."""
    for source, value in (
        ("--cache", flag),
        (FACTOR_CACHE_ENV, os.environ.get(FACTOR_CACHE_ENV)),
        ("settings", config.cache_path if config else None),
    ):
        if value:
            logger.debug(f"factor cache from {source}: {value}")
            return Path(value).expanduser()
    return None


def load_factor_cache(
    flag: Optional[str] = None, config: Optional[CliConfig] = None
) -> FactorCache:
    path = resolve_cache_path(flag, config)
    if path is None:
        return bundled_cache()
    return cache_load(path)
