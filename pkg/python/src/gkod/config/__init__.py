"""Settings loading for the gkod command line."""

from .manager import (
    ConfigError,
    ConfigManager,
    ConfigSpec,
    DefaultFileLoader,
    FileLoader,
)
from .settings import (
    CliConfig,
    OutputFormat,
    create_config_manager,
    load_factor_cache,
    load_settings,
    resolve_cache_path,
)

__all__ = [
    "CliConfig",
    "ConfigError",
    "ConfigManager",
    "ConfigSpec",
    "DefaultFileLoader",
    "FileLoader",
    "OutputFormat",
    "create_config_manager",
    "load_factor_cache",
    "load_settings",
    "resolve_cache_path",
]
