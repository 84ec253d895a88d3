"""
Pydantic models for the real-axis kernel.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kernel.primes import series_tail_bound


class QuadratureSpec(BaseModel):
    """Cutoffs and tolerance shared by every kernel evaluation."""

    model_config = ConfigDict(frozen=True)

    prime_cutoff: int = Field(10_000, ge=2, description="Largest prime in prime-power sums")
    power_cutoff: int = Field(12, ge=1, description="Largest prime-power exponent")
    em_terms: int = Field(8, ge=1, le=40, description="Euler-Maclaurin correction order")
    em_shift: int = Field(10, ge=2, description="Direct terms summed before the Euler-Maclaurin tail")
    tail_tol: float = Field(1e-9, gt=0, description="Required bound on every truncation tail")
    series_onset: float = Field(
        3.0,
        gt=1,
        description="Abscissa from which log-zeta integrals are taken from the prime-power series"
    )

    @model_validator(mode="after")
    def check_tail(self) -> "QuadratureSpec":
        """The series truncation must be within tolerance where the series is used."""
        bound = series_tail_bound(self.series_onset, self.prime_cutoff, self.power_cutoff)
        if bound > self.tail_tol:
            raise ValueError(
                f"prime_cutoff={self.prime_cutoff}, power_cutoff={self.power_cutoff} leave a "
                f"series tail of {bound:.3e} at σ={self.series_onset}, above tail_tol={self.tail_tol:.1e}"
            )
        return self

    def doubled(self) -> "QuadratureSpec":
        """Same spec with twice the Euler-Maclaurin order, capped at 40 (self-check)."""
        return self.model_copy(update={"em_terms": min(2 * self.em_terms, 40)})


class IOfD(BaseModel):
    """Value of the four-integral combination I(d)."""

    model_config = ConfigDict(frozen=True)

    d: float = Field(..., description="Shift parameter in (1/2, 1]")
    value: float = Field(..., description="I(d)")

    @field_validator("d")
    @classmethod
    def check_d(cls, v: float) -> float:
        if not (0.5 < v <= 1.0):
            raise ValueError(f"d must lie in (1/2, 1], got {v}")
        return v
