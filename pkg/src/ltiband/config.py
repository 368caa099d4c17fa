"""
Run configuration for ltiband.

Precedence, highest first: explicit CLI flags, a JSON config file (from
--config or the LTIBAND_CONFIG environment variable), built-in defaults.
The defaults reproduce the reference chain: alpha = -0.17 eV, beta = -0.24 eV,
a = 1, k in [0, pi] on 256 points.
"""

import json
import math
import os
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .exceptions import ConfigError
from .lattice import DEFAULT_ALPHA, DEFAULT_BETA, KGrid, LatticeParams, make_kgrid

CONFIG_ENV_VAR = "LTIBAND_CONFIG"

EngineChoice = Literal["lti", "tb", "fd", "all"]
OutputFormat = Literal["csv", "json", "svg"]


def _field_errors(error: ValidationError) -> list[tuple[str, str]]:
    return [(".".join(str(p) for p in e["loc"]) or "config", e["msg"]) for e in error.errors()]


class RunConfig(BaseModel):
    """Resolved settings for one CLI invocation."""

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    # Chain
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    a: float = Field(default=1.0, gt=0)

    # Cell and engine
    cell_size: int = Field(default=1, ge=1)
    engine: EngineChoice = "lti"

    # k-grid
    k_min: float = 0.0
    k_max: float = math.pi
    k_count: int = Field(default=256, ge=2)

    # Output
    format: OutputFormat = "csv"
    out: Path | None = None  # None = stdout

    # Verification and benchmarking
    parallel: bool = False
    tol: float = Field(default=1e-9, gt=0)
    repetitions: int = Field(default=5, ge=3)

    @model_validator(mode="after")
    def _grid_order(self) -> Self:
        if self.k_min >= self.k_max:
            raise ValueError(f"k_min ({self.k_min}) must be below k_max ({self.k_max})")
        return self

    def cell_sizes(self, flags: list[int] | None, default: Sequence[int]) -> list[int]:
        """Cell sizes for a sweep: the flags, else cell_size when the file set it, else default."""
        if flags:
            return list(flags)
        if "cell_size" in self.model_fields_set:
            return [self.cell_size]
        return list(default)

    def lattice_params(self) -> LatticeParams:
        return LatticeParams(alpha=self.alpha, beta=self.beta, a=self.a)

    def kgrid(self) -> KGrid:
        return make_kgrid(self.k_min, self.k_max, self.k_count)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunConfig":
        """Validate a mapping; failures become a ConfigError with field-level messages."""
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            fields = _field_errors(e)
            summary = "; ".join(f"{name}: {msg}" for name, msg in fields)
            raise ConfigError(f"invalid configuration: {summary}", fields=fields) from None

    @classmethod
    def load(cls, path: Path) -> "RunConfig":
        """Load configuration from a JSON file."""
        return cls.from_dict(read_config_file(path))

    def save(self, path: Path) -> None:
        """Save configuration to a JSON file."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(self.model_dump(mode="json"), f, indent=2)
            f.write("\n")


def read_config_file(path: Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}", fields=[("config", str(path))]) from None
    except OSError as e:
        reason = e.strerror or str(e)
        raise ConfigError(f"cannot read config file {path}: {reason}", fields=[("config", reason)]) from None
    except UnicodeDecodeError as e:
        raise ConfigError(f"config file {path} is not UTF-8 text", fields=[("config", str(e))]) from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not valid JSON: {e}", fields=[("config", str(e))]) from None
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def config_file_path(explicit: Path | None = None) -> Path | None:
    """Which config file applies.

    Priority:
    1. --config flag
    2. LTIBAND_CONFIG environment variable
    3. none (built-in defaults)
    """
    if explicit is not None:
        return explicit
    env_path = os.environ.get(CONFIG_ENV_VAR)
    if env_path:
        return Path(env_path).expanduser()
    return None


def resolve_config(
    config_path: Path | None = None, overrides: dict[str, Any] | None = None
) -> RunConfig:
    """Merge defaults, the config file and non-None CLI overrides into one RunConfig."""
    data: dict[str, Any] = {}
    path = config_file_path(config_path)
    if path is not None:
        data.update(read_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    return RunConfig.from_dict(data)
