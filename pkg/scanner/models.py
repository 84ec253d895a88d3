"""
Pydantic models for sign scanning, Gram blocks and certification reports.
"""

from typing import List, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from constants.models import TuringConstants


class ScanPolicy(BaseModel):
    """How densely and how often Z is sampled."""

    model_config = ConfigDict(frozen=True)

    max_depth: int = Field(4, ge=1, description="Maximum 4x refinement passes")
    order: int = Field(2, ge=0, le=2, description="Riemann-Siegel correction order")
    max_step: Optional[float] = Field(None, gt=0, description="Cap on the base sampling step")


class SignBracket(BaseModel):
    """Heights t_lo < t_hi where Z has determinate, opposite signs."""

    model_config = ConfigDict(frozen=True)

    t_lo: float
    t_hi: float


class ScanGrid(NamedTuple):
    """Final sampling of a scan."""
    t: np.ndarray
    values: np.ndarray
    bounds: np.ndarray
    brackets: List[SignBracket]
    depth: int

    @property
    def determinate(self) -> np.ndarray:
        return np.abs(self.values) > self.bounds


class GramBlock(BaseModel):
    """
    Run of Gram intervals [g_start, g_{start+length}) between consecutive
    good Gram points. Partial blocks touch the end of the scanned range and
    are not classified.
    """

    start_index: int
    length: int = Field(..., ge=1)
    counts: List[int] = Field(..., description="Sign changes per Gram interval")
    rosser_ok: bool
    indeterminate: bool = False
    partial: bool = False

    @model_validator(mode="after")
    def check_counts(self) -> "GramBlock":
        if len(self.counts) != self.length:
            raise ValueError(f"{len(self.counts)} counts for a block of length {self.length}")
        if any(c < 0 for c in self.counts):
            raise ValueError("Sign-change counts must be nonnegative")
        return self

    @property
    def end_index(self) -> int:
        return self.start_index + self.length

    @property
    def total(self) -> int:
        return sum(self.counts)


class CertificationReport(BaseModel):
    """Outcome of applying Turing's method on [g_n, g_p)."""

    n: int
    p: int
    g_n: float
    g_p: float
    blocks_used: int = Field(..., ge=0)
    required_blocks: int = Field(..., ge=1)
    certified: bool
    lower_count: int = Field(..., ge=0, description="Zeros located in [scan_floor, g_p)")
    upper_bound: int = Field(..., ge=0, description="Upper bound on N(g_p)")
    exact_count: Optional[int] = Field(None, description="N(g_p) when certified")
    range_count: int = Field(..., ge=0, description="Zeros located in [g_n, g_p)")
    indeterminate: bool = False
    constants_used: TuringConstants
    blocks: List[GramBlock] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_certified(self) -> "CertificationReport":
        if self.certified and not (self.lower_count == self.upper_bound == self.exact_count):
            raise ValueError("A certified report needs lower_count = upper_bound = exact_count")
        return self
