"""
Riemann-Siegel theta function and its derivative by Stirling asymptotics.

    θ(t)  = (t/2) log(t/2π) − t/2 − π/8 + 1/(48t) + 7/(5760t³) + 31/(80640t⁵)
    θ′(t) = ½ log(t/2π) − 1/(48t²) − 7/(1920t⁴) − 31/(16128t⁶)
"""

import math
from typing import Union

import numpy as np

from utils.validators import require_above

ArrayLike = Union[float, np.ndarray]

TWO_PI = 2.0 * math.pi


def theta_array(t: ArrayLike) -> ArrayLike:
    """θ(t) without argument checks; accepts numpy arrays."""
    inv = 1.0 / t
    inv2 = inv * inv
    return (
        0.5 * t * np.log(t / TWO_PI) - 0.5 * t - math.pi / 8
        + inv * (1.0 / 48 + inv2 * (7.0 / 5760 + inv2 * 31.0 / 80640))
    )


def theta_deriv_array(t: ArrayLike) -> ArrayLike:
    """θ′(t) without argument checks; accepts numpy arrays."""
    inv2 = 1.0 / (t * t)
    return 0.5 * np.log(t / TWO_PI) - inv2 * (1.0 / 48 + inv2 * (7.0 / 1920 + inv2 * 31.0 / 16128))


def theta(t: float) -> float:
    """
    Riemann-Siegel theta function.

    Args:
        t: Height, t > 1

    Returns:
        θ(t)
    """
    t = require_above("t", t, 1.0)
    return float(theta_array(t))


def theta_deriv(t: float) -> float:
    """
    Derivative θ′(t); positive for t > 2πe.

    Args:
        t: Height, t > 1

    Returns:
        θ′(t)
    """
    t = require_above("t", t, 1.0)
    return float(theta_deriv_array(t))
