"""
Configuration management for the Turing-method toolkit.
Uses pydantic-settings for environment variable loading and validation.
"""

import os
from pathlib import Path
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Application
    app_name: str = "turing-bounds"
    app_version: str = "1.0.0"

    # Logging
    log_level: str = Field(
        default="WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )
    log_file: Optional[Path] = Field(
        default=None,
        description="Log file path; file logging is off when unset"
    )

    # Parallelism
    worker_threads: int = Field(
        default_factory=lambda: min(8, os.cpu_count() or 1),
        ge=1,
        description="Default number of worker threads for lattice evaluation"
    )

    # Real-axis kernel
    tail_tol: float = Field(default=1e-9, gt=0, description="Required bound on every truncation tail")
    prime_cutoff: int = Field(default=10_000, ge=2, description="Largest prime in prime-power sums")
    power_cutoff: int = Field(default=12, ge=1, description="Largest prime-power exponent")
    em_terms: int = Field(default=8, ge=1, description="Euler-Maclaurin correction order")
    em_shift: int = Field(default=10, ge=2, description="Direct terms summed before Euler-Maclaurin")
    series_onset: float = Field(
        default=3.0,
        gt=1,
        description="Abscissa from which log-zeta integrals use the prime-power series"
    )

    # Riemann-Siegel
    rs_order: int = Field(default=2, ge=0, le=2, description="Number of Riemann-Siegel correction terms")
    rs_min_height: float = Field(
        default=30.0,
        ge=5,
        description="Below this height Z(t) is evaluated by Euler-Maclaurin"
    )
    rs_remainder_safety: float = Field(
        default=2.0,
        ge=1,
        description="Multiplier applied to the empirical remainder envelope"
    )

    # Scanning
    scan_max_depth: int = Field(default=4, ge=1, description="Maximum 4x refinement passes")
    scan_floor: float = Field(default=10.0, ge=10, le=14, description="Lowest height scanned for zeros (below the first zero)")

    # Reports
    significant_digits: int = Field(default=6, ge=1, le=17, description="Digits in text and CSV output")
    default_output_format: str = Field(default="text", description="json, csv or text")

    @field_validator("log_level")
    @classmethod
    def check_log_level(cls, v: str) -> str:
        """Reject unknown logging levels."""
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("log_file", mode="before")
    @classmethod
    def ensure_path(cls, v):
        """Convert string to Path object."""
        if isinstance(v, str):
            return Path(v) if v.strip() else None
        return v

    @field_validator("default_output_format")
    @classmethod
    def check_format(cls, v: str) -> str:
        v = v.lower()
        if v not in ("json", "csv", "text"):
            raise ValueError(f"Unknown output format: {v}")
        return v

    def quadrature_spec(self, **overrides):
        """Build the default QuadratureSpec, applying any overrides."""
        from kernel.models import QuadratureSpec

        values = {
            "prime_cutoff": self.prime_cutoff,
            "power_cutoff": self.power_cutoff,
            "em_terms": self.em_terms,
            "em_shift": self.em_shift,
            "tail_tol": self.tail_tol,
            "series_onset": self.series_onset,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return QuadratureSpec(**values)

    def scan_policy(self, **overrides):
        """Build the default ScanPolicy, applying any overrides."""
        from scanner.models import ScanPolicy

        values = {
            "max_depth": self.scan_max_depth,
            "order": self.rs_order,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return ScanPolicy(**values)


# Global settings instance
settings = Settings()
