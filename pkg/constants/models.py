"""
Pydantic models for the explicit constants of Turing's method.
"""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from utils.validators import require_open_closed


TURING_THRESHOLD = 168 * math.pi


class Family(str, Enum):
    """Zeta-function family the constants belong to."""
    ZETA = "zeta"
    DIRICHLET = "dirichlet"
    DEDEKIND = "dedekind"


class ConvexityParams(BaseModel):
    """Convexity abscissa c and shift d."""

    model_config = ConfigDict(frozen=True)

    c: float = Field(..., description="Convexity abscissa, 1 < c ≤ 5/4")
    d: float = Field(..., description="Shift parameter, 1/2 < d ≤ 1")

    @field_validator("c")
    @classmethod
    def check_c(cls, v: float) -> float:
        if not (1.0 < v <= 1.25):
            raise ValueError(f"c must lie in (1, 5/4], got {v}")
        return v

    @field_validator("d")
    @classmethod
    def check_d(cls, v: float) -> float:
        if not (0.5 < v <= 1.0):
            raise ValueError(f"d must lie in (1/2, 1], got {v}")
        return v

    @classmethod
    def of(cls, c: float, d: float) -> "ConvexityParams":
        """Build from raw numbers, raising DomainError instead of a ValidationError."""
        return cls(
            c=require_open_closed("c", c, 1.0, 1.25),
            d=require_open_closed("d", d, 0.5, 1.0),
        )


class GrowthBound(BaseModel):
    """Assumed bound |ζ(½+it)| ≤ K t^θ for t > t_min."""

    model_config = ConfigDict(frozen=True)

    K: float = Field(..., gt=0, description="Multiplicative constant")
    theta: float = Field(..., gt=0, lt=0.5, description="Exponent")
    t_min: float = Field(128 * math.pi, gt=0, description="Height above which the bound is assumed")


class TuringConstants(BaseModel):
    """
    Constants a, b (and g for Dedekind) in the bound on ∫S(t)dt.

    For zeta and Dirichlet: |∫_{t1}^{t2} S| ≤ a + b·log(t2/2π) (Dirichlet: log(Q t2/2π)).
    For Dedekind: the bound is g·L + b·N + a with L = log(|D_K|(t2/2π)^N).
    """

    model_config = ConfigDict(frozen=True)

    a: float = Field(..., gt=0, description="Constant term")
    b: float = Field(..., gt=0, description="Coefficient of the logarithm")
    g: Optional[float] = Field(None, gt=0, description="Dedekind coefficient of the field logarithm")
    family: Family = Field(..., description="Zeta-function family")
    t0: float = Field(..., gt=0, description="Height above which the constants hold")

    @model_validator(mode="after")
    def check_g(self) -> "TuringConstants":
        if self.family == Family.DEDEKIND and self.g is None:
            raise ValueError("Dedekind constants need g")
        if self.family != Family.DEDEKIND and self.g is not None:
            raise ValueError(f"g is only defined for dedekind constants, not {self.family.value}")
        return self


class DedekindShape(BaseModel):
    """Degree, signature and discriminant of a number field."""

    model_config = ConfigDict(frozen=True)

    degree: int = Field(..., ge=1, description="Degree N of the field")
    r1: int = Field(..., ge=0, description="Number of real embeddings")
    r2: int = Field(..., ge=0, description="Number of pairs of complex embeddings")
    abs_discriminant: float = Field(..., gt=1, description="|D_K|")

    @model_validator(mode="after")
    def check_signature(self) -> "DedekindShape":
        if self.r1 + 2 * self.r2 != self.degree:
            raise ValueError(
                f"Signature ({self.r1}, {self.r2}) does not match degree {self.degree}"
            )
        return self

    @classmethod
    def totally_complex(cls, degree: int, abs_discriminant: float) -> "DedekindShape":
        """Shape with r1 = 0 (degree must be even)."""
        return cls(degree=degree, r1=0, r2=degree // 2, abs_discriminant=abs_discriminant)


class PublishedConstants(BaseModel):
    """A constants triple as printed in the literature."""

    model_config = ConfigDict(frozen=True)

    label: str
    constants: TuringConstants
    note: str = ""
