"""Class which tests the Config util class."""
import pytest

from seqrsp.util.config import Config
from seqrsp.util.exceptions import ConfigurationError


class TestConfig:
    """Class which tests the Config util class."""

    def test_defaults(self, monkeypatch):
        """Test the defaults when no environment variable is set."""
        for name in ("RSP_QUAD_NODES", "RSP_MAX_CHAIN", "RSP_LOG_LEVEL"):
            monkeypatch.delenv(name, raising=False)
        assert Config.quad_nodes() == 64
        assert Config.max_chain() == 12
        assert Config.get("log_level") == "WARNING"

    def test_environment_override(self, monkeypatch):
        """Test that the environment variable overrides the default."""
        monkeypatch.setenv("RSP_QUAD_NODES", "128")
        monkeypatch.setenv("RSP_LOG_LEVEL", "debug")
        assert Config.quad_nodes() == 128
        assert Config.get("log_level") == "DEBUG"

    def test_empty_environment_value(self, monkeypatch):
        """Test that an empty environment variable falls back to the default."""
        monkeypatch.setenv("RSP_TRIALS", " ")
        assert Config.get("trials") == 100000

    def test_below_minimum(self, monkeypatch):
        """Test that a node count below the minimum is rejected."""
        monkeypatch.setenv("RSP_QUAD_NODES", "8")
        with pytest.raises(ConfigurationError):
            Config.quad_nodes()

    def test_not_an_integer(self, monkeypatch):
        """Test that a non-numeric value is rejected."""
        monkeypatch.setenv("RSP_MAX_CHAIN", "many")
        with pytest.raises(ConfigurationError):
            Config.max_chain()

    def test_unknown_choice(self, monkeypatch):
        """Test that an unknown log level is rejected."""
        monkeypatch.setenv("RSP_LOG_LEVEL", "LOUD")
        with pytest.raises(ConfigurationError):
            Config.get("log_level")

    def test_unknown_option(self):
        """Test that an unknown option name raises ConfigurationError."""
        with pytest.raises(ConfigurationError):
            Config.get("colour")
