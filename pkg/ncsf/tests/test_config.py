"""
Tests for environment-driven settings.
"""

from __future__ import annotations

import pytest

from ncsf.backend import config


def test_integer_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("NCSF_TEST_INT", "5")
    assert config._get_int_env("NCSF_TEST_INT", 1) == 5
    monkeypatch.setenv("NCSF_TEST_INT", " ")
    assert config._get_int_env("NCSF_TEST_INT", 1) == 1
    monkeypatch.setenv("NCSF_TEST_INT", "five")
    with pytest.raises(EnvironmentError):
        config._get_int_env("NCSF_TEST_INT", 1)


def test_unknown_log_level() -> None:
    with pytest.raises(ValueError):
        config.configure_logging("chatty")
    config.configure_logging("debug")
