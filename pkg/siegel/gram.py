"""
Gram points: solutions of θ(g_n) = nπ.
"""

import math
from functools import lru_cache
from typing import List

import numpy as np
from scipy.optimize import brentq
from scipy.special import lambertw

from siegel.models import GramPoint
from siegel.theta import TWO_PI, theta_array, theta_deriv_array
from utils.errors import ConvergenceError, DomainError
from utils.logging_config import get_logger

logger = get_logger(__name__)

RESIDUAL_TOL = 1e-9
NEWTON_ITERATIONS = 50
LOWEST_BRACKET = 7.0


def initial_guess(n: int) -> float:
    """
    Invert the leading terms of θ: (t/2) log(t/2π) − t/2 − π/8 = nπ gives
    t = 2π exp(1 + W((n + 1/8)/e)).
    """
    w = lambertw((n + 0.125) / math.e).real
    return TWO_PI * math.exp(1.0 + w)


def _residual(t: float, n: int) -> float:
    return float(theta_array(t)) - n * math.pi


def _newton(n: int, t: float) -> float:
    for _ in range(NEWTON_ITERATIONS):
        step = _residual(t, n) / float(theta_deriv_array(t))
        t -= step
        if not math.isfinite(t) or t <= LOWEST_BRACKET:
            raise ConvergenceError(f"Newton iteration for g_{n} left the domain")
        if abs(step) <= 1e-14 * t:
            break
    return t


def _bisect(n: int, guess: float) -> float:
    gap = math.pi / max(float(theta_deriv_array(guess)), 1e-3)
    lo = max(LOWEST_BRACKET, guess - 2 * gap)
    hi = guess + 2 * gap
    for _ in range(20):
        if _residual(lo, n) < 0 < _residual(hi, n):
            break
        lo = max(LOWEST_BRACKET, lo - gap)
        hi += gap
    else:
        raise ConvergenceError(f"Could not bracket g_{n}")
    return brentq(_residual, lo, hi, args=(n,), xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)


@lru_cache(maxsize=65536)
def gram_point(n: int) -> GramPoint:
    """
    Gram point g_n.

    Args:
        n: Gram index, n ≥ −1

    Returns:
        GramPoint with |θ(g_n) − nπ| < 1e-9

    Raises:
        DomainError: If n < −1
        ConvergenceError: If neither Newton nor bisection reaches the tolerance
    """
    if int(n) != n or n < -1:
        raise DomainError(f"Gram index must be an integer ≥ −1, got {n}", field="n")
    n = int(n)

    guess = initial_guess(n)
    try:
        t = _newton(n, guess)
        if abs(_residual(t, n)) >= RESIDUAL_TOL:
            raise ConvergenceError(f"Newton residual too large for g_{n}")
    except ConvergenceError as e:
        logger.debug(f"{e.message}; falling back to bisection")
        t = _bisect(n, guess)

    residual = abs(_residual(t, n))
    if residual >= RESIDUAL_TOL:
        raise ConvergenceError(f"g_{n} residual {residual:.2e} exceeds {RESIDUAL_TOL:g}")
    return GramPoint(index=n, ordinate=t, residual=residual)


def gram_points(n_lo: int, n_hi: int) -> List[GramPoint]:
    """Gram points g_n for n_lo ≤ n ≤ n_hi."""
    return [gram_point(n) for n in range(n_lo, n_hi + 1)]
