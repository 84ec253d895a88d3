"""
Input validation utilities shared by the models and the CLI.
"""

import math
from typing import Optional, Union

from .errors import DomainError, ParameterError


Number = Union[int, float]


def require_finite(name: str, value: Number) -> float:
    """
    Ensure a value is a finite real number.

    Args:
        name: Parameter name used in the error message
        value: Value to check

    Returns:
        The value as a float

    Raises:
        ParameterError: If the value is not a finite number
    """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ParameterError(f"{name} must be a real number, got {value!r}", field=name)
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value!r}", field=name)
    return value


def require_positive(name: str, value: Number) -> float:
    """Ensure a value is strictly positive."""
    value = require_finite(name, value)
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}", field=name)
    return value


def require_above(name: str, value: Number, bound: float, inclusive: bool = False) -> float:
    """
    Ensure a value lies above a lower bound.

    Args:
        name: Parameter name
        value: Value to check
        bound: Lower bound
        inclusive: Whether the bound itself is admissible

    Returns:
        The value as a float
    """
    value = require_finite(name, value)
    ok = value >= bound if inclusive else value > bound
    if not ok:
        relation = "≥" if inclusive else ">"
        raise DomainError(f"{name} must be {relation} {bound:g}, got {value}", field=name)
    return value


def require_open_closed(name: str, value: Number, lo: float, hi: float) -> float:
    """
    Ensure lo < value ≤ hi.

    Args:
        name: Parameter name
        value: Value to check
        lo: Excluded lower end
        hi: Included upper end

    Returns:
        The value as a float
    """
    value = require_finite(name, value)
    if not (lo < value <= hi):
        raise DomainError(f"{name} must lie in ({lo:g}, {hi:g}], got {value}", field=name)
    return value


def in_open_closed(value: float, lo: float, hi: float) -> bool:
    """Non-raising form of require_open_closed."""
    return lo < value <= hi


def parse_number(text: Union[str, Number], name: str = "value") -> float:
    """
    Parse a real number given in decimal or scientific notation.

    Args:
        text: Text such as "6.283185e12" or "1E12"
        name: Parameter name for error messages

    Returns:
        Parsed float
    """
    if isinstance(text, (int, float)):
        return require_finite(name, text)
    cleaned = str(text).strip().replace("_", "")
    try:
        value = float(cleaned)
    except ValueError:
        raise ParameterError(f"{name} is not a number: {text!r}", field=name)
    return require_finite(name, value)


def parse_integer(text: Union[str, Number], name: str = "value", minimum: Optional[int] = None) -> int:
    """
    Parse an integer, accepting integral values written in scientific notation.

    Args:
        text: Text such as "100" or "1e3"
        name: Parameter name for error messages
        minimum: Optional inclusive lower bound

    Returns:
        Parsed integer
    """
    value = parse_number(text, name)
    if value != int(value):
        raise ParameterError(f"{name} must be an integer, got {text!r}", field=name)
    value = int(value)
    if minimum is not None and value < minimum:
        raise DomainError(f"{name} must be ≥ {minimum}, got {value}", field=name)
    return value
