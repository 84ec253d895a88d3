"""
Pydantic models for lattice searches over (c, d).
"""

import math
from enum import Enum
from typing import ClassVar, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from constants.models import (
    ConvexityParams,
    DedekindShape,
    Family,
    GrowthBound,
    TuringConstants,
)
from constants.engine import DEFAULT_GROWTH, DIRICHLET_MIN_T0


class Coupling(str, Enum):
    """How the c-axis and d-axis of a lattice advance."""
    STAGE1 = "stage1"   # d advances 2Δ per step
    STAGE2 = "stage2"   # both advance Δ
    FULL_GRID = "full_grid"


class LatticeSpec(BaseModel):
    """
    Lattice of (c, d) points.

    c_k = c_start + k·c_step for k < count. d_j = d_start + j·s for j < d_count
    (defaults to count), where s = 2·d_step for stage1 and d_step
    otherwise. Points are the product of the two axes in c-major order.
    """

    model_config = ConfigDict(frozen=True)

    c_start: float = Field(..., description="First c value")
    d_start: float = Field(..., description="First d value")
    c_step: float = Field(..., description="Step Δ along c (may be negative)")
    d_step: float = Field(..., description="Step Δ along d (may be negative)")
    count: int = Field(..., ge=1, description="Number of c values")
    d_count: Optional[int] = Field(None, ge=1, description="Number of d values (defaults to count)")
    coupling: Coupling = Field(Coupling.FULL_GRID, description="Axis coupling")

    @field_validator("c_start", "d_start", "c_step", "d_step")
    @classmethod
    def check_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("Lattice coordinates must be finite")
        return v

    @property
    def d_size(self) -> int:
        return self.d_count if self.d_count is not None else self.count

    @property
    def cardinality(self) -> int:
        return self.count * self.d_size

    def c_values(self) -> List[float]:
        return [round(self.c_start + k * self.c_step, 12) for k in range(self.count)]

    def d_values(self) -> List[float]:
        stride = 2 * self.d_step if self.coupling == Coupling.STAGE1 else self.d_step
        return [round(self.d_start + j * stride, 12) for j in range(self.d_size)]


class ZetaContext(BaseModel):
    """Scalars for the zeta objective F = b log(g_p/2π) + a."""

    model_config = ConfigDict(frozen=True)

    family: ClassVar[Family] = Family.ZETA
    g_p: float = Field(..., gt=2 * math.pi, description="Height of the last Gram point")
    growth: GrowthBound = Field(DEFAULT_GROWTH, description="Assumed growth bound")


class DirichletContext(BaseModel):
    """Scalars for the Dirichlet budget B(Q, t2)."""

    model_config = ConfigDict(frozen=True)

    family: ClassVar[Family] = Family.DIRICHLET
    Q: int = Field(..., gt=1, description="Conductor")
    t2: float = Field(..., gt=0, description="Upper height")
    t0: float = Field(DIRICHLET_MIN_T0, ge=DIRICHLET_MIN_T0, description="Height threshold")


class DedekindContext(BaseModel):
    """Scalars for the Dedekind budget B(D_K, t2, N)."""

    model_config = ConfigDict(frozen=True)

    family: ClassVar[Family] = Family.DEDEKIND
    shape: DedekindShape
    t2: float = Field(..., gt=0, description="Upper height")
    t0: float = Field(40.0, gt=0, description="Height threshold")


SearchContext = Union[ZetaContext, DirichletContext, DedekindContext]


class SearchRow(BaseModel):
    """One evaluated lattice point."""

    index: int = Field(..., ge=0, description="Position in the lattice (c-major)")
    c: float
    d: float
    a: float
    b: float
    g: Optional[float] = None
    objective: float

    @classmethod
    def from_constants(cls, index: int, params: ConvexityParams,
                       consts: TuringConstants, objective: float) -> "SearchRow":
        return cls(
            index=index, c=params.c, d=params.d,
            a=consts.a, b=consts.b, g=consts.g,
            objective=objective,
        )

    @property
    def params(self) -> ConvexityParams:
        return ConvexityParams(c=self.c, d=self.d)


class SkippedPoint(BaseModel):
    """A lattice point that was not evaluated, and why."""

    index: int = Field(..., ge=0)
    c: float
    d: float
    reason: str


class SearchResult(BaseModel):
    """Outcome of a lattice search."""

    family: Family
    best_params: ConvexityParams
    best_value: float
    table: List[SearchRow] = Field(default_factory=list)
    skipped: List[SkippedPoint] = Field(default_factory=list)
    lattice: Optional[LatticeSpec] = None

    @model_validator(mode="after")
    def check_best(self) -> "SearchResult":
        if self.table and self.best_value > min(row.objective for row in self.table):
            raise ValueError("best_value must be the minimum objective of the table")
        return self

    @property
    def best_row(self) -> SearchRow:
        return next(
            row for row in self.table
            if row.c == self.best_params.c and row.d == self.best_params.d
        )
