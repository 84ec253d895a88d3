"""
Pydantic models for command-line runs and the reports they emit.
"""

from enum import Enum
from pathlib import Path
from typing import Dict, FrozenSet, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from constants.models import DedekindShape, Family, TuringConstants
from utils.errors import ParameterError
from utils.validators import parse_integer, parse_number


class Command(str, Enum):
    """Subcommands."""
    CONSTANTS = "constants"
    OPTIMIZE = "optimize"
    BUDGET = "budget"
    BLOCKS_REQUIRED = "blocks-required"
    GROWTH_CHECK = "growth-check"
    CERTIFY = "certify"


class OutputFormat(str, Enum):
    """Report formats."""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class LatticeChoice(str, Enum):
    """Lattice used by the optimize command."""
    STAGE1 = "stage1"
    STAGE2 = "stage2"
    FULL_GRID = "full-grid"
    REFINE = "refine"


INTEGER_KEYS = frozenset({"Q", "n", "p", "samples", "degree", "r1", "r2"})

ALLOWED: Dict[Command, FrozenSet[str]] = {
    Command.CONSTANTS: frozenset({"c", "d", "K", "theta", "t0"}),
    Command.OPTIMIZE: frozenset({
        "gp", "Q", "t2", "t0", "degree", "r1", "r2", "abs_discriminant",
        "K", "theta", "seed_c", "seed_d", "radius", "step",
    }),
    Command.BUDGET: frozenset({
        "a", "b", "g", "gp", "Q", "t2", "t0", "degree", "r1", "r2", "abs_discriminant",
    }),
    Command.BLOCKS_REQUIRED: frozenset({"a", "b", "gp"}),
    Command.GROWTH_CHECK: frozenset({"t_lo", "t_hi", "samples", "K"}),
    Command.CERTIFY: frozenset({"n", "p", "a", "b"}),
}

REQUIRED: Dict[Tuple[Command, Family], FrozenSet[str]] = {
    (Command.CONSTANTS, Family.ZETA): frozenset({"c", "d"}),
    (Command.CONSTANTS, Family.DIRICHLET): frozenset({"c", "d"}),
    (Command.CONSTANTS, Family.DEDEKIND): frozenset({"c", "d"}),
    (Command.OPTIMIZE, Family.ZETA): frozenset({"gp"}),
    (Command.OPTIMIZE, Family.DIRICHLET): frozenset({"Q", "t2"}),
    (Command.OPTIMIZE, Family.DEDEKIND): frozenset({"degree", "abs_discriminant", "t2"}),
    (Command.BUDGET, Family.ZETA): frozenset({"a", "b", "gp"}),
    (Command.BUDGET, Family.DIRICHLET): frozenset({"a", "b", "Q", "t2"}),
    (Command.BUDGET, Family.DEDEKIND): frozenset({"a", "b", "g", "degree", "abs_discriminant", "t2"}),
    (Command.BLOCKS_REQUIRED, Family.ZETA): frozenset({"a", "b", "gp"}),
    (Command.GROWTH_CHECK, Family.ZETA): frozenset({"t_lo", "t_hi", "samples"}),
    (Command.CERTIFY, Family.ZETA): frozenset({"n", "p"}),
}


class QuadratureOverrides(BaseModel):
    """Optional overrides of the QuadratureSpec defaults."""

    model_config = ConfigDict(extra="forbid")

    tail_tol: Optional[float] = Field(None, gt=0)
    prime_cutoff: Optional[int] = Field(None, ge=2)
    power_cutoff: Optional[int] = Field(None, ge=1)
    em_terms: Optional[int] = Field(None, ge=1, le=40)


class RunConfig(BaseModel):
    """One command-line invocation."""

    model_config = ConfigDict(extra="forbid")

    command: Command
    family: Family = Family.ZETA
    parameters: Dict[str, Union[int, float]] = Field(default_factory=dict)
    lattice: Optional[LatticeChoice] = None
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Optional[Path] = None
    quadrature: QuadratureOverrides = Field(default_factory=QuadratureOverrides)
    threads: Optional[int] = Field(None, ge=1)
    digits: Optional[int] = Field(None, ge=1, le=17)

    @field_validator("parameters", mode="before")
    @classmethod
    def parse_parameters(cls, v):
        """Numbers may arrive as text in decimal or scientific notation."""
        parsed = {}
        for key, value in (v or {}).items():
            if value is None:
                continue
            if key in INTEGER_KEYS:
                parsed[key] = parse_integer(value, key)
            else:
                parsed[key] = parse_number(value, key)
        return parsed

    @model_validator(mode="after")
    def check_parameters(self) -> "RunConfig":
        required = REQUIRED.get((self.command, self.family))
        if required is None:
            raise ParameterError(
                f"{self.command.value} is not available for the {self.family.value} family",
                field="family",
            )
        unknown = sorted(set(self.parameters) - ALLOWED[self.command])
        if unknown:
            raise ParameterError(
                f"Unknown parameters for {self.command.value}: {', '.join(unknown)}",
                field=unknown[0],
            )
        missing = sorted(required - set(self.parameters))
        if missing:
            raise ParameterError(
                f"{self.command.value} --family {self.family.value} needs: {', '.join(missing)}",
                field=missing[0],
            )
        if self.lattice is not None and self.command != Command.OPTIMIZE:
            raise ParameterError("--lattice only applies to optimize", field="lattice")
        if self.lattice == LatticeChoice.REFINE and not {"seed_c", "seed_d"} <= set(self.parameters):
            raise ParameterError("--lattice refine needs --seed-c and --seed-d", field="seed_c")
        return self


class BudgetReport(BaseModel):
    """Value of a family's objective for given constants."""

    constants: TuringConstants
    value: float = Field(..., description="F (zeta) or B (Dirichlet, Dedekind)")
    log_term: float = Field(..., description="The logarithm the budget is built from")
    g_p: Optional[float] = None
    Q: Optional[int] = None
    t2: Optional[float] = None
    shape: Optional[DedekindShape] = None


class BlockRequirementReport(BaseModel):
    """Gram blocks needed at g_p."""

    constants: TuringConstants
    g_p: float
    required_blocks: int = Field(..., ge=1)
    quadratic_coefficient: float = Field(..., description="Coefficient of log² g_p")
    linear_coefficient: float = Field(..., description="Coefficient of log g_p")
