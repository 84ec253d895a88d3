"""
Pydantic models for the Riemann-Siegel Z function and Gram points.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class ZMethod(str, Enum):
    """How a Z value was computed."""
    RIEMANN_SIEGEL = "riemann-siegel"
    EULER_MACLAURIN = "euler-maclaurin"


class GramPoint(BaseModel):
    """Solution g_n of θ(g_n) = nπ."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=-1, description="Gram index n")
    ordinate: float = Field(..., gt=7, description="g_n")
    residual: float = Field(0.0, ge=0, description="|θ(g_n) − nπ|")


class ZValue(BaseModel):
    """Z(t) with an estimate of its truncation error."""

    model_config = ConfigDict(frozen=True)

    t: float
    value: float
    remainder_bound: float = Field(..., ge=0, description="Estimated truncation error")
    order: int = Field(..., ge=0, le=2, description="Correction terms used")
    method: ZMethod = ZMethod.RIEMANN_SIEGEL

    @property
    def determinate(self) -> bool:
        """True when the sign of value is trustworthy."""
        return abs(self.value) > self.remainder_bound

    @property
    def sign(self) -> int:
        """+1, −1, or 0 when indeterminate."""
        if not self.determinate:
            return 0
        return 1 if self.value > 0 else -1


class GrowthReport(BaseModel):
    """Sampled maximum of |Z(t)| / t^(1/4) on an interval."""

    t_lo: float
    t_hi: float
    samples: int = Field(..., ge=2)
    max_ratio: float = Field(..., ge=0)
    argmax: float
    bound: float = Field(2.53, gt=0)
    passed: bool
