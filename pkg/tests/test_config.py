"""Tests for configuration management module."""

import dataclasses

import pytest
from pydantic import ValidationError

from src.core.config import DEFAULT_WINDOW, TOLERANCES, Settings


class TestSettings:
    """Test Settings loading."""

    def test_default_max_workers(self, monkeypatch):
        """Test scans run on one worker by default."""
        monkeypatch.delenv("RINGGATE_MAX_WORKERS", raising=False)
        assert Settings().max_workers == 1

    def test_max_workers_from_env(self, monkeypatch):
        """Test the worker count is read from the environment."""
        monkeypatch.setenv("RINGGATE_MAX_WORKERS", "8")
        assert Settings().max_workers == 8

    def test_env_case_insensitive(self, monkeypatch):
        """Test lower-case variable names are accepted."""
        monkeypatch.setenv("ringgate_max_workers", "3")
        assert Settings().max_workers == 3

    @pytest.mark.parametrize("value", ["0", "65", "many"])
    def test_invalid_max_workers(self, monkeypatch, value):
        """Test out-of-range and non-numeric worker counts are rejected."""
        monkeypatch.setenv("RINGGATE_MAX_WORKERS", value)
        with pytest.raises(ValidationError):
            Settings()

    def test_unrelated_env_ignored(self, monkeypatch):
        """Test unknown RINGGATE_ variables do not break loading."""
        monkeypatch.setenv("RINGGATE_COLOR", "blue")
        Settings()


class TestTables:
    """Test the fixed numerical tables."""

    def test_tolerances_frozen(self):
        """Test tolerances cannot be changed at run time."""
        with pytest.raises(dataclasses.FrozenInstanceError):
            TOLERANCES.lossless = 1.0

    def test_tolerance_values(self):
        """Test the published thresholds."""
        assert TOLERANCES.singular_condition == 1e12
        assert TOLERANCES.conservation_failure == 1e-8
        assert TOLERANCES.on_curve == 1e-8
        assert TOLERANCES.lossless == 1e-6

    def test_default_window(self):
        """Test the default window brackets ka = 20.4 and the curve window avoids x = 0."""
        lo, hi = DEFAULT_WINDOW.ka_range
        assert lo < 20.4 < hi
        assert DEFAULT_WINDOW.curve_x_range[0] > 0
        assert DEFAULT_WINDOW.scan_resolution == (500, 350)
