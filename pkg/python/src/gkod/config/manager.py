"""
Configuration file discovery and merging.

Settings files are looked up in a fixed set of directories and deep-merged,
later directories overriding earlier ones:

1. package defaults (``gkod/config``)
2. user configuration (``$XDG_CONFIG_HOME/gkod``, ``~/.config/gkod`` or
   ``~/.gkod``)
3. project-local ``./.gkod``

Explicit search paths replace all of the above (used by tests).
"""

import json
import logging
import os
from dataclasses import dataclass
from fnmatch import fnmatch
from pathlib import Path
from typing import Any, Dict, List, Optional, Protocol, Type

from ruamel.yaml import YAML

from ..const import APP_NAME

logger = logging.getLogger(__name__)


class FileLoader(Protocol):
    """Filesystem access used by ConfigManager."""

    def exists(self, path: Path) -> bool: ...

    def is_file(self, path: Path) -> bool: ...

    def list_directory(self, path: Path) -> List[Path]: ...

    def load_file(self, path: Path) -> Dict[str, Any]: ...


@dataclass
class ConfigError(Exception):
    """Raised when a settings file cannot be loaded or validated."""

    message: str
    spec_name: str
    file_path: Optional[Path] = None
    cause: Optional[Exception] = None

    def __str__(self) -> str:
        parts = [f"Config '{self.spec_name}': {self.message}"]
        if self.file_path:
            parts.append(f" in {self.file_path}")
        if self.cause:
            parts.append(f" ({type(self.cause).__name__}: {self.cause})")
        return "".join(parts)


class DefaultFileLoader:
    """Reads YAML and JSON files from disk."""

    def __init__(self):
        self._yaml = YAML(typ="safe")

    def exists(self, path: Path) -> bool:
        return path.exists()

    def is_file(self, path: Path) -> bool:
        return path.is_file()

    def list_directory(self, path: Path) -> List[Path]:
        if not path.exists():
            return []
        return sorted(path.iterdir())

    def load_file(self, path: Path) -> Dict[str, Any]:
        suffix = path.suffix.lower()
        with open(path, "r", encoding="utf-8") as f:
            if suffix == ".json":
                return json.load(f)
            if suffix in (".yaml", ".yml"):
                return self._yaml.load(f) or {}
        raise ConfigError(
            message=f"Unsupported file type: {suffix}",
            spec_name="unknown",
            file_path=path,
        )


@dataclass
class ConfigSpec:
    """A named settings file, optionally converted to a dataclass."""

    name: str
    pattern: str  # file name glob, e.g. "settings.yaml"
    dataclass: Optional[Type] = None

    def matches(self, filename: str) -> bool:
        return fnmatch(filename, self.pattern)


class ConfigManager:
    """Loads, merges and caches registered settings files."""

    def __init__(
        self,
        app_name: str = APP_NAME,
        search_paths: Optional[List[Path]] = None,
        file_loader: Optional[FileLoader] = None,
        package_config_path: Optional[Path] = None,
    ):
        self.app_name = app_name
        self._explicit_paths = search_paths
        self._package_config_path = package_config_path
        self.specs: Dict[str, ConfigSpec] = {}
        self._cache: Dict[str, Any] = {}
        self._loader = file_loader or DefaultFileLoader()

    @property
    def search_paths(self) -> List[Path]:
        """Directories in increasing precedence."""
        if self._explicit_paths is not None:
            return self._explicit_paths

        paths = []
        package = self._package_config_path
        if package and self._loader.exists(package):
            paths.append(package)

        xdg_config = os.environ.get("XDG_CONFIG_HOME")
        if xdg_config:
            user_dir = Path(xdg_config) / self.app_name
        else:
            user_dir = Path.home() / ".config" / self.app_name
        if self._loader.exists(user_dir):
            paths.append(user_dir)
        else:
            home_dir = Path.home() / f".{self.app_name}"
            if self._loader.exists(home_dir):
                paths.append(home_dir)

        local_dir = Path.cwd() / f".{self.app_name}"
        if self._loader.exists(local_dir):
            paths.append(local_dir)
        return paths

    def register(self, spec: ConfigSpec) -> None:
        if spec.name in self.specs:
            raise ValueError(f"Config '{spec.name}' already registered")
        self.specs[spec.name] = spec

    def get(self, name: str, force_reload: bool = False) -> Any:
        """
        Load (or return the cached) configuration `name`.

        Raises:
            ValueError: name was never registered
            ConfigError: a file failed to load, validate or convert
        """
        if not force_reload and name in self._cache:
            return self._cache[name]
        spec = self.specs.get(name)
        if not spec:
            raise ValueError(f"Unknown config: {name}")
        try:
            result = self._load(spec)
        except ConfigError:
            raise
        except Exception as e:
            raise ConfigError(
                message="Failed to load configuration", spec_name=name, cause=e
            )
        self._cache[name] = result
        return result

    def _load(self, spec: ConfigSpec) -> Any:
        merged: Dict[str, Any] = {}
        for directory in self.search_paths:
            data = self._load_from_directory(directory, spec)
            if data:
                logger.debug(f"merging {spec.name} from {directory}")
                merged = self._deep_merge(merged, data)

        if spec.dataclass is None:
            return merged
        try:
            if hasattr(spec.dataclass, "from_dict"):
                return spec.dataclass.from_dict(merged)
            return spec.dataclass(**merged)
        except ConfigError:
            raise
        except Exception as e:
            raise ConfigError(
                message=f"Failed to create {spec.dataclass.__name__}",
                spec_name=spec.name,
                cause=e,
            )

    def _load_from_directory(
        self, directory: Path, spec: ConfigSpec
    ) -> Optional[Dict[str, Any]]:
        if not self._loader.exists(directory):
            return None
        for file_path in self._loader.list_directory(directory):
            if not self._loader.is_file(file_path):
                continue
            if spec.matches(file_path.name):
                try:
                    return self._loader.load_file(file_path)
                except Exception as e:
                    raise ConfigError(
                        message="Failed to load file",
                        spec_name=spec.name,
                        file_path=file_path,
                        cause=e,
                    )
        return None

    def _deep_merge(
        self, base: Dict[str, Any], override: Dict[str, Any]
    ) -> Dict[str, Any]:
        """Recursive merge; lists and scalars are replaced."""
        result = base.copy()
        for key, value in override.items():
            if (
                key in result
                and isinstance(result[key], dict)
                and isinstance(value, dict)
            ):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result
