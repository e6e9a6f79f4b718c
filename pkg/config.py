"""Configuration loader with validation."""

import json
from pathlib import Path
from typing import Optional

from errors import ConfigError

DEFAULT_CONFIG_FILE = "config.json"

DEFAULTS = {
    "max_k_vertex": 6,
    "max_k_edge": 6,
    "timeout_seconds": 10.0,
    "parallel": 1,
    "debug_mode": False,
    "enumerator_max_vertices": 10,
    "dot_palette": [
        "#e41a1c",
        "#377eb8",
        "#4daf4a",
        "#984ea3",
        "#ff7f00",
        "#ffff33",
    ],
    "schema_version": 1,
}


class Config:
    """Load and validate configuration from JSON file.

    The default file is optional (DEFAULTS apply); a file named explicitly must exist.
    """

    def __init__(self, config_file: Optional[str] = None, overrides: Optional[dict] = None):
        data = dict(DEFAULTS)
        path = Path(config_file or DEFAULT_CONFIG_FILE)
        if path.exists():
            try:
                with open(path) as f:
                    data.update(json.load(f))
            except json.JSONDecodeError as e:
                raise ConfigError(f"Config {path} is not valid JSON: {e}")
        elif config_file is not None:
            raise ConfigError(f"Config not found: {path}")

        if overrides:
            data.update({k: v for k, v in overrides.items() if v is not None})
        self._data = data
        self._validate()

    def _validate(self):
        for key in ("max_k_vertex", "max_k_edge", "parallel", "enumerator_max_vertices"):
            value = self._data[key]
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"'{key}' must be a positive integer, got {value!r}")
        timeout = self._data["timeout_seconds"]
        if timeout is not None and (not isinstance(timeout, (int, float)) or timeout <= 0):
            raise ConfigError(f"'timeout_seconds' must be positive or null, got {timeout!r}")
        palette = self._data["dot_palette"]
        if not isinstance(palette, list) or len(palette) < 6:
            raise ConfigError("'dot_palette' must list at least 6 colors")
        if self._data["schema_version"] != 1:
            raise ConfigError("Only schema_version 1 is supported")

    @property
    def max_k_vertex(self) -> int:
        return self._data["max_k_vertex"]

    @property
    def max_k_edge(self) -> int:
        return self._data["max_k_edge"]

    @property
    def timeout_seconds(self) -> Optional[float]:
        return self._data["timeout_seconds"]

    @property
    def parallel(self) -> int:
        return self._data["parallel"]

    @property
    def debug_mode(self) -> bool:
        return bool(self._data["debug_mode"])

    @property
    def enumerator_max_vertices(self) -> int:
        return self._data["enumerator_max_vertices"]

    @property
    def dot_palette(self) -> list:
        return list(self._data["dot_palette"])

    @property
    def schema_version(self) -> int:
        return self._data["schema_version"]
