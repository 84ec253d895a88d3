"""
Custom exception classes for the Turing-method toolkit.

Every exception carries the process exit status the CLI reports for it.
"""

from typing import Any, Dict, Optional


class TuringError(Exception):
    """Base exception class for all toolkit errors."""

    def __init__(self, message: str, exit_code: int = 1):
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Structured form emitted on the error stream."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
        }


class ParameterError(TuringError):
    """Raised when an input fails validation."""

    def __init__(self, message: str = "Invalid parameter", field: Optional[str] = None, exit_code: int = 2):
        self.field = field
        super().__init__(message, exit_code)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        if self.field:
            data["field"] = self.field
        return data


class DomainError(ParameterError):
    """Raised when an argument lies outside the domain of an operation."""


class ThresholdError(DomainError):
    """Raised when a height lies below the validity threshold of a theorem."""


class EmptyLatticeError(DomainError):
    """Raised when a parameter lattice contains no points."""

    def __init__(self, message: str = "Lattice contains no points"):
        super().__init__(message, field="lattice")


class FamilyMismatchError(DomainError):
    """Raised when constants of one family are passed to another family's formula."""

    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"Expected {expected} constants, got {got}", field="family")


class ConvergenceError(TuringError):
    """Raised when a numerical tolerance cannot be met."""

    def __init__(self, message: str = "Numerical convergence failure", exit_code: int = 3):
        super().__init__(message, exit_code)


class IndeterminateSignError(ConvergenceError):
    """Raised when sign-change scanning cannot stabilise."""

    def __init__(self, message: str = "Sign pattern did not stabilise", t_lo: float = None, t_hi: float = None):
        self.t_lo = t_lo
        self.t_hi = t_hi
        super().__init__(message)


class CertificationError(TuringError):
    """Raised when a zero count cannot be certified."""

    def __init__(self, message: str = "Certification failed", exit_code: int = 4):
        super().__init__(message, exit_code)


class RosserViolationError(CertificationError):
    """Raised when a Gram block in a certification run violates Rosser's rule."""

    def __init__(self, block: Any, message: str = None):
        self.block = block
        if message is None:
            message = (
                f"Gram block starting at index {block.start_index} "
                f"(length {block.length}, counts {list(block.counts)}) violates Rosser's rule"
            )
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["block"] = self.block.model_dump(mode="json")
        return data


class ReportIOError(TuringError):
    """Raised when a report cannot be written."""

    def __init__(self, message: str = "Could not write report", path: str = None, exit_code: int = 5):
        self.path = path
        super().__init__(message, exit_code)
