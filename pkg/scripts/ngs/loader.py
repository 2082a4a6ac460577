"""Configuration file loading.

config/defaults.yaml holds every compute bound. A file given with --config
replaces it; keys it leaves out fall back to the ComputeConfig defaults.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, TypeVar

import yaml
from pydantic import BaseModel, ValidationError

from scripts.ngs.models import ComputeConfig

M = TypeVar("M", bound=BaseModel)

DEFAULT_CONFIG = Path(__file__).resolve().parents[2] / "config" / "defaults.yaml"


class YAMLLoadError(Exception):
    """A config file exists but does not hold a YAML mapping."""

    def __init__(self, path: Path, message: str, cause: Exception | None = None):
        self.path = path
        self.message = message
        self.cause = cause
        super().__init__(f"{path}: {message}")


class YAMLValidationError(Exception):
    """A config mapping was rejected by its pydantic model."""

    def __init__(self, path: Path, model_name: str, validation_error: ValidationError):
        self.path = path
        self.model_name = model_name
        self.validation_error = validation_error
        count = validation_error.error_count()
        super().__init__(f"{path}: {count} error(s) for {model_name}\n{validation_error}")


def _read_mapping(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise YAMLLoadError(path, f"not UTF-8 ({e.reason} at byte {e.start})", cause=e) from e
    except OSError as e:
        raise YAMLLoadError(path, f"unreadable: {e.strerror}", cause=e) from e

    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise YAMLLoadError(path, f"YAML syntax: {e}", cause=e) from e

    if data is None:
        raise YAMLLoadError(path, "no settings (empty document)")
    if not isinstance(data, dict):
        raise YAMLLoadError(path, f"expected a mapping of settings, found {type(data).__name__}")
    return data


def load_yaml_strict(path: Path | str, model_class: type[M]) -> M:
    """Read a YAML mapping and validate it as model_class.

    Raises:
        FileNotFoundError: If path does not exist.
        YAMLLoadError: If the file is unreadable, not UTF-8, malformed or not a mapping.
        YAMLValidationError: If the mapping is rejected by the model.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no config file at {path}")
    data = _read_mapping(path)
    try:
        return model_class.model_validate(data)
    except ValidationError as e:
        raise YAMLValidationError(path, model_class.__name__, e) from e


def load_compute_config(path: Path | str = DEFAULT_CONFIG) -> ComputeConfig:
    """Compute bounds from path, defaulting to config/defaults.yaml."""
    return load_yaml_strict(path, ComputeConfig)
