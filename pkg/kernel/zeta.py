"""
ζ(σ) and ζ′(σ)/ζ(σ) on the real axis σ > 1 by Euler-Maclaurin summation.

    ζ(s) = Σ_{n<N} n^(−s) + N^(1−s)/(s−1) + N^(−s)/2
           + Σ_{j=1..m} B_2j/(2j)! · s(s+1)…(s+2j−2) · N^(1−s−2j) + R

For real s the remainder R is bounded by the first omitted correction, so the
next term doubles as the error estimate. Every public value is also compared
with the same sum at twice the correction order.
"""

import math
from functools import lru_cache
from typing import NamedTuple, Union

import numpy as np
from scipy.special import bernoulli

from kernel.models import QuadratureSpec
from utils.errors import ConvergenceError
from utils.validators import require_above
from utils.logging_config import get_logger

logger = get_logger(__name__)

Scalar = Union[float, complex]


class EulerMaclaurinResult(NamedTuple):
    """ζ and ζ′ with the magnitudes of the first omitted corrections."""
    value: Scalar
    derivative: Scalar
    remainder: float
    derivative_remainder: float


@lru_cache(maxsize=16)
def _correction_coefficients(order: int) -> np.ndarray:
    """B_2j / (2j)! for j = 1 .. order+1 (the last one sizes the remainder)."""
    b = bernoulli(2 * order + 2)
    return np.array([b[2 * j] / math.factorial(2 * j) for j in range(1, order + 2)])


def euler_maclaurin(s: Scalar, shift: int, order: int) -> EulerMaclaurinResult:
    """
    Evaluate ζ(s) and ζ′(s) for real or complex s ≠ 1.

    Args:
        s: Argument
        shift: Number N of leading terms summed directly
        order: Number m of Bernoulli corrections

    Returns:
        EulerMaclaurinResult
    """
    N = shift
    logN = math.log(N)
    n = np.arange(1, N, dtype=float)
    logn = np.log(n)
    powers = np.exp(-s * logn)

    value = powers.sum()
    derivative = -(logn * powers).sum()

    Np = np.exp((1 - s) * logN)
    tail = Np / (s - 1)
    value += tail
    derivative += -logN * tail - tail / (s - 1)

    half = 0.5 * np.exp(-s * logN)
    value += half
    derivative += -logN * half

    coefficients = _correction_coefficients(order)
    poly = s              # s(s+1)…(s+2j−2), starts at j=1
    dpoly_ratio = 1 / s   # Σ 1/(s+i)
    next_term = 0.0
    next_dterm = 0.0
    for j in range(1, order + 2):
        if j > 1:
            poly = poly * (s + 2 * j - 3) * (s + 2 * j - 2)
            dpoly_ratio = dpoly_ratio + 1 / (s + 2 * j - 3) + 1 / (s + 2 * j - 2)
        scale = coefficients[j - 1] * np.exp((1 - s - 2 * j) * logN)
        term = scale * poly
        dterm = scale * poly * (dpoly_ratio - logN)
        if j <= order:
            value += term
            derivative += dterm
        else:
            next_term = abs(term)
            next_dterm = abs(dterm)

    return EulerMaclaurinResult(value, derivative, float(next_term), float(next_dterm))


@lru_cache(maxsize=4096)
def _real_zeta(sigma: float, spec: QuadratureSpec) -> EulerMaclaurinResult:
    return euler_maclaurin(float(sigma), spec.em_shift, spec.em_terms)


def _check_doubled(label: str, value: float, doubled: float, spec: QuadratureSpec) -> None:
    drift = abs(value - doubled)
    if drift > spec.tail_tol:
        raise ConvergenceError(
            f"{label} moves by {drift:.2e} when the Euler-Maclaurin order is doubled "
            f"(tail_tol {spec.tail_tol:.1e})"
        )


def zeta_real(sigma: float, spec: QuadratureSpec) -> float:
    """
    Riemann zeta-function at a real argument σ > 1.

    Args:
        sigma: Argument, strictly greater than 1
        spec: Quadrature settings; tail_tol bounds the absolute error

    Returns:
        ζ(σ)

    Raises:
        DomainError: If sigma ≤ 1
        ConvergenceError: If the Euler-Maclaurin remainder exceeds tail_tol, or the
            value moves by more than tail_tol when the order is doubled
    """
    sigma = require_above("sigma", sigma, 1.0)
    result = _real_zeta(sigma, spec)
    if result.remainder > spec.tail_tol:
        raise ConvergenceError(
            f"ζ({sigma}) remainder {result.remainder:.2e} exceeds tail_tol {spec.tail_tol:.1e}"
        )
    value = float(result.value)
    _check_doubled(f"ζ({sigma})", value, float(_real_zeta(sigma, spec.doubled()).value), spec)
    return value


def zeta_log_deriv(sigma: float, spec: QuadratureSpec) -> float:
    """
    Logarithmic derivative ζ′(σ)/ζ(σ) for σ > 1 (always negative).

    Args:
        sigma: Argument, strictly greater than 1
        spec: Quadrature settings

    Returns:
        ζ′(σ)/ζ(σ)

    Raises:
        DomainError: If sigma ≤ 1
        ConvergenceError: If the propagated remainder exceeds tail_tol, or the
            value moves by more than tail_tol when the order is doubled
    """
    sigma = require_above("sigma", sigma, 1.0)
    result = _real_zeta(sigma, spec)
    zeta = float(result.value)
    dzeta = float(result.derivative)
    error = result.derivative_remainder / zeta + abs(dzeta) * result.remainder / zeta ** 2
    if error > spec.tail_tol:
        raise ConvergenceError(
            f"ζ′/ζ({sigma}) error estimate {error:.2e} exceeds tail_tol {spec.tail_tol:.1e}"
        )
    check = _real_zeta(sigma, spec.doubled())
    _check_doubled(f"ζ′/ζ({sigma})", dzeta / zeta, float(check.derivative) / float(check.value), spec)
    return dzeta / zeta


def log_zeta(sigma: float, spec: QuadratureSpec) -> float:
    """log ζ(σ) without remainder checks, for use inside quadrature."""
    return math.log(float(_real_zeta(float(sigma), spec).value))
