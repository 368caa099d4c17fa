"""Unit tests for run configuration."""

import json
import math
from pathlib import Path

import pytest

from ltiband.config import CONFIG_ENV_VAR, RunConfig, config_file_path, resolve_config
from ltiband.exceptions import ConfigError


@pytest.fixture(autouse=True)
def _no_env_config(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


class TestRunConfig:
    """Tests for RunConfig defaults and validation."""

    def test_defaults_reproduce_reference_chain(self) -> None:
        config = RunConfig()
        assert (config.alpha, config.beta, config.a) == (-0.17, -0.24, 1.0)
        assert (config.k_min, config.k_max, config.k_count) == (0.0, math.pi, 256)
        assert config.engine == "lti"
        assert config.format == "csv"

    def test_builds_domain_values(self) -> None:
        config = RunConfig(alpha=0.1, beta=0.2, a=2.0, k_count=5)
        assert config.lattice_params().a == 2.0
        assert config.kgrid().count == 5

    def test_field_level_errors(self) -> None:
        """Invalid values name the offending field."""
        with pytest.raises(ConfigError) as excinfo:
            RunConfig.from_dict({"cell_size": 0, "engine": "magic"})
        names = {name for name, _ in excinfo.value.fields}
        assert {"cell_size", "engine"} <= names

    def test_unknown_key_rejected(self) -> None:
        with pytest.raises(ConfigError):
            RunConfig.from_dict({"colour": "blue"})

    def test_reversed_grid_rejected(self) -> None:
        with pytest.raises(ConfigError, match="k_min"):
            RunConfig.from_dict({"k_min": 2.0, "k_max": 1.0})

    def test_nan_rejected(self) -> None:
        with pytest.raises(ConfigError):
            RunConfig.from_dict({"alpha": float("nan")})

    def test_repetitions_minimum(self) -> None:
        with pytest.raises(ConfigError):
            RunConfig.from_dict({"repetitions": 2})

    def test_save_and_load(self, tmp_path: Path) -> None:
        path = tmp_path / "nested" / "run.json"
        RunConfig(cell_size=3, engine="all", out=tmp_path / "bands.csv").save(path)
        loaded = RunConfig.load(path)
        assert loaded.cell_size == 3
        assert loaded.engine == "all"
        assert loaded.out == tmp_path / "bands.csv"


class TestConfigFile:
    """Tests for config file discovery and reading."""

    def test_no_file_by_default(self) -> None:
        assert config_file_path() is None

    def test_env_var(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "env.json"))
        assert config_file_path() == tmp_path / "env.json"

    def test_explicit_beats_env(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "env.json"))
        assert config_file_path(tmp_path / "flag.json") == tmp_path / "flag.json"

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigError, match="not found"):
            resolve_config(tmp_path / "missing.json")

    def test_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="JSON"):
            resolve_config(path)

    def test_non_object(self, tmp_path: Path) -> None:
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(ConfigError):
            resolve_config(path)

    def test_directory(self, tmp_path: Path) -> None:
        """A directory in place of the file is a config error, not an OSError."""
        with pytest.raises(ConfigError, match="cannot read") as excinfo:
            resolve_config(tmp_path)
        assert excinfo.value.fields[0][0] == "config"

    def test_not_utf8(self, tmp_path: Path) -> None:
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"engine": "\xe9"}')
        with pytest.raises(ConfigError, match="UTF-8") as excinfo:
            resolve_config(path)
        assert excinfo.value.fields[0][0] == "config"


class TestCellSizes:
    """Tests for the cell sizes used by multi-M commands."""

    def test_flags_win(self, tmp_path: Path) -> None:
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"cell_size": 6}))
        assert resolve_config(path).cell_sizes([2, 3], [1, 2, 3, 4]) == [2, 3]

    def test_file_cell_size(self, tmp_path: Path) -> None:
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"cell_size": 6}))
        assert resolve_config(path).cell_sizes(None, [1, 2, 3, 4]) == [6]

    def test_default_list(self) -> None:
        assert resolve_config().cell_sizes(None, [1, 2, 3, 4]) == [1, 2, 3, 4]
        assert resolve_config().cell_sizes([], (4,)) == [4]


class TestResolveConfig:
    """Tests for precedence: flags > config file > defaults."""

    def test_defaults_only(self) -> None:
        assert resolve_config() == RunConfig()

    def test_file_overrides_defaults(self, tmp_path: Path) -> None:
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"cell_size": 3, "beta": -0.5}))
        config = resolve_config(path, {"cell_size": None})
        assert config.cell_size == 3
        assert config.beta == -0.5
        assert config.alpha == -0.17

    def test_flags_override_file(self, tmp_path: Path) -> None:
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"cell_size": 3}))
        assert resolve_config(path, {"cell_size": 5}).cell_size == 5

    def test_env_file_used(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        path = tmp_path / "env.json"
        path.write_text(json.dumps({"engine": "tb"}))
        monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
        assert resolve_config().engine == "tb"

    def test_invalid_override(self) -> None:
        with pytest.raises(ConfigError):
            resolve_config(None, {"format": "png"})
