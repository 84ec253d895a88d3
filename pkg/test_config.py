"""
Settings load, validation and the default-spec builders.
"""

import pytest
from pydantic import ValidationError

from config import Settings, settings
from kernel.models import QuadratureSpec
from scanner.models import ScanPolicy


def test_defaults_loaded():
    assert settings.app_name == "turing-bounds"
    assert settings.log_level in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
    assert settings.worker_threads >= 1
    assert settings.significant_digits >= 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("WORKER_THREADS", "3")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("TAIL_TOL", "1e-8")
    fresh = Settings(_env_file=None)
    assert fresh.worker_threads == 3
    assert fresh.log_level == "DEBUG"
    assert fresh.tail_tol == 1e-8


def test_unknown_environment_keys_ignored(monkeypatch):
    monkeypatch.setenv("SOMETHING_UNRELATED", "1")
    Settings(_env_file=None)


@pytest.mark.parametrize("key, value", [
    ("LOG_LEVEL", "LOUD"),
    ("TAIL_TOL", "-1"),
    ("WORKER_THREADS", "0"),
    ("DEFAULT_OUTPUT_FORMAT", "xml"),
    ("SCAN_FLOOR", "20"),
])
def test_invalid_values_rejected(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_empty_log_file_means_no_file(monkeypatch):
    monkeypatch.setenv("LOG_FILE", "  ")
    assert Settings(_env_file=None).log_file is None


def test_quadrature_spec_from_settings():
    spec = settings.quadrature_spec()
    assert isinstance(spec, QuadratureSpec)
    assert spec.tail_tol == settings.tail_tol
    assert spec.prime_cutoff == settings.prime_cutoff


def test_quadrature_spec_overrides_skip_none():
    spec = settings.quadrature_spec(tail_tol=1e-8, prime_cutoff=None)
    assert spec.tail_tol == 1e-8
    assert spec.prime_cutoff == settings.prime_cutoff


def test_scan_policy_from_settings():
    policy = settings.scan_policy(max_step=0.05)
    assert isinstance(policy, ScanPolicy)
    assert policy.max_depth == settings.scan_max_depth
    assert policy.max_step == 0.05
