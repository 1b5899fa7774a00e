"""Tests for configuration and logging setup."""

import logging

import pytest

from scindex.config import (
    THREADS_ENV,
    RunConfig,
    config_defaults,
    load_config_file,
    resolve_workers,
    setup_logging,
)


class TestRunConfig:
    """Tests for RunConfig validation."""

    def test_valid(self, tmp_path) -> None:
        """Test existing input and output directory."""
        source = tmp_path / "in.csv"
        source.write_text("")
        RunConfig("index", source, tmp_path / "out.csv").validate()

    def test_unknown_format(self) -> None:
        """Test error for unknown output formats."""
        with pytest.raises(ValueError, match="Unknown output format"):
            RunConfig("index", output_format="xml").validate()

    def test_missing_input(self, tmp_path) -> None:
        """Test error for missing input files."""
        with pytest.raises(ValueError, match="does not exist"):
            RunConfig("index", tmp_path / "missing.csv").validate()

    def test_missing_output_directory(self, tmp_path) -> None:
        """Test error for output paths in missing directories."""
        with pytest.raises(ValueError, match="Output directory"):
            RunConfig("index", output_path=tmp_path / "nope" / "out.csv").validate()


class TestConfigFile:
    """Tests for TOML configuration files."""

    def test_defaults(self, tmp_path) -> None:
        """Test the command table overrides global keys."""
        path = tmp_path / "scindex.toml"
        path.write_text(
            'log-level = "INFO"\nindices = "h"\n\n[index]\nindices = "hprime,w"\n'
        )
        config = load_config_file(path)
        assert config_defaults(config, "index") == {"log_level": "INFO", "indices": "hprime,w"}
        assert config_defaults(config, "simulate") == {"log_level": "INFO", "indices": "h"}

    def test_invalid_toml(self, tmp_path) -> None:
        """Test error for malformed files."""
        path = tmp_path / "bad.toml"
        path.write_text("indices = \n")
        with pytest.raises(ValueError, match="Invalid config file"):
            load_config_file(path)

    def test_section_must_be_table(self) -> None:
        """Test error when a command entry is not a table."""
        with pytest.raises(ValueError, match="must be a table"):
            config_defaults({"index": 3}, "index")


class TestWorkersAndLogging:
    """Tests for worker resolution and logging setup."""

    def test_explicit_workers(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test the option wins over the environment."""
        monkeypatch.setenv(THREADS_ENV, "8")
        assert resolve_workers(3) == 3
        assert resolve_workers() == 8

    def test_default_workers(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test one worker without option or environment."""
        monkeypatch.delenv(THREADS_ENV, raising=False)
        assert resolve_workers() == 1

    @pytest.mark.parametrize("value", ["0", "many"])
    def test_invalid_environment(self, monkeypatch: pytest.MonkeyPatch, value: str) -> None:
        """Test error for bad environment values."""
        monkeypatch.setenv(THREADS_ENV, value)
        with pytest.raises(ValueError, match="SCINDEX_THREADS must be a positive integer"):
            resolve_workers()

    def test_setup_logging(self) -> None:
        """Test level names are accepted."""
        setup_logging("debug")
        assert logging.getLogger().level == logging.DEBUG
        setup_logging()
        assert logging.getLogger().level == logging.WARNING
