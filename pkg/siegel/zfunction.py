"""
Riemann-Siegel Z function.

    Z(t) = 2 Σ_{n ≤ N} n^(−½) cos(θ(t) − t log n)
           + (−1)^(N−1) (t/2π)^(−¼) [C0(z) + C1(z)(t/2π)^(−½) + C2(z)(t/2π)^(−1)]

with N = ⌊√(t/2π)⌋, p = √(t/2π) − N and z = 2p − 1. Below rs_min_height
the main sum is too short, and Z is taken from the Euler-Maclaurin value of
ζ(½+it) rotated by e^(iθ).
"""

import math
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from config import settings
from kernel.zeta import euler_maclaurin
from siegel.models import ZMethod, ZValue
from siegel.theta import TWO_PI, theta_array
from utils.errors import DomainError
from utils.logging_config import get_logger

logger = get_logger(__name__)

MIN_HEIGHT = 5.0
CHUNK = 4096

# Coefficients of C0, C1, C2 in powers of z² (C1 carries an extra factor z)
C0 = np.array([
    0.38268343236508977, 0.43724046807752044, 0.13237657548034352,
    -0.01360502604767418, -0.01356762197010358, -0.00162372532314446,
    0.00029705353733379, 0.00007943300879521, 0.00000046556124614,
    -0.00000143272516309, -0.00000010354847112, 0.00000001235792708,
    0.00000000178810838, -0.00000000003391414, -0.00000000001632663,
])
C1 = np.array([
    -0.02682510262837534, 0.01378477342635185, 0.03849125048223508,
    0.00987106629906208, -0.00331075976085840, -0.00146478085779542,
    -0.00001320794062488, 0.00005922748701847, 0.00000598024258537,
    -0.00000096413224562, -0.00000018334733722, 0.00000000446708757,
    0.00000000270963509, 0.00000000007785289, -0.00000000002343763,
    -0.00000000000158302,
])
C2 = np.array([
    0.00518854283029316, 0.00030946583880634, -0.01133594107822937,
    0.00223304574195814, 0.00519663740886233, 0.00034399144076208,
    -0.00059106484274705, -0.00010229972547935, 0.00002088839221699,
    0.00000592766549309, -0.00000016423838362, -0.00000015161199700,
    -0.00000000590780369, 0.00000000209115148, 0.00000000017815649,
    -0.00000000001616407, -0.00000000000238069,
])

# |first omitted correction| ≤ ENVELOPE[order] · t^(−(2·order+3)/4)
ENVELOPE = (0.127, 0.053, 0.035)

EM_ORDER = 10


def remainder_envelope(t: np.ndarray, order: int, safety: float) -> np.ndarray:
    """Empirical truncation bound of the Riemann-Siegel formula at `order`."""
    return safety * ENVELOPE[order] * np.power(t, -(2 * order + 3) / 4.0)


def _riemann_siegel(t: np.ndarray, order: int) -> np.ndarray:
    tt = np.sqrt(t / TWO_PI)
    N = np.floor(tt).astype(np.int64)
    nmax = int(N.max())
    n = np.arange(1, nmax + 1, dtype=float)

    th = theta_array(t)
    phase = th[:, None] - t[:, None] * np.log(n)[None, :]
    mask = n[None, :] <= N[:, None]
    main = 2.0 * np.sum(np.where(mask, np.cos(phase) / np.sqrt(n)[None, :], 0.0), axis=1)

    z = 2.0 * (tt - N) - 1.0
    z2 = z * z
    correction = P.polyval(z2, C0)
    if order >= 1:
        correction = correction + z * P.polyval(z2, C1) / tt
    if order >= 2:
        correction = correction + P.polyval(z2, C2) / (tt * tt)
    sign = np.where(N % 2 == 1, 1.0, -1.0)
    return main + sign * correction / np.sqrt(tt)


def _euler_maclaurin_z(t: float) -> Tuple[float, float]:
    """Z(t) = Re(e^(iθ) ζ(½+it)) and an error estimate."""
    s = complex(0.5, t)
    shift = int(t / math.pi) + 10
    result = euler_maclaurin(s, shift, EM_ORDER)
    rotated = complex(np.exp(1j * theta_array(t)) * result.value)
    # Real-part remainder scales by |s + 2m + 1| / (σ + 2m + 1)
    growth = abs(s + 2 * EM_ORDER + 1) / (0.5 + 2 * EM_ORDER + 1)
    return rotated.real, result.remainder * growth + abs(rotated.imag)


def z_values(
    ts,
    order: Optional[int] = None,
    safety: Optional[float] = None,
    min_height: Optional[float] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized Z(t) with remainder bounds.

    Args:
        ts: Heights, all ≥ 5
        order: Riemann-Siegel correction order 0..2 (default settings.rs_order)
        safety: Multiplier on the empirical envelope (default settings.rs_remainder_safety)
        min_height: Below this height use Euler-Maclaurin (default settings.rs_min_height)

    Returns:
        (values, remainder_bounds) as float arrays shaped like ts

    Raises:
        DomainError: If any t < 5 or the order is not 0, 1 or 2
    """
    order = settings.rs_order if order is None else order
    safety = settings.rs_remainder_safety if safety is None else safety
    min_height = settings.rs_min_height if min_height is None else min_height
    if order not in (0, 1, 2):
        raise DomainError(f"order must be 0, 1 or 2, got {order}", field="order")

    shape = np.shape(ts)
    t = np.asarray(ts, dtype=float).ravel()
    if t.size == 0:
        return t.reshape(shape), t.reshape(shape).copy()
    if not np.all(np.isfinite(t)) or t.min() < MIN_HEIGHT:
        raise DomainError(f"Z(t) needs finite t ≥ {MIN_HEIGHT:g}, got min {t.min()}", field="t")

    values = np.empty_like(t)
    bounds = np.empty_like(t)

    low = t < min_height
    for i in np.flatnonzero(low):
        values[i], bounds[i] = _euler_maclaurin_z(float(t[i]))

    high = np.flatnonzero(~low)
    for start in range(0, high.size, CHUNK):
        idx = high[start:start + CHUNK]
        values[idx] = _riemann_siegel(t[idx], order)
        bounds[idx] = remainder_envelope(t[idx], order, safety)

    return values.reshape(shape), bounds.reshape(shape)


def z_function(t: float, order: Optional[int] = None) -> ZValue:
    """
    Z(t) at a single height.

    Args:
        t: Height, t ≥ 5
        order: Riemann-Siegel correction order 0..2

    Returns:
        ZValue
    """
    order = settings.rs_order if order is None else order
    values, bounds = z_values([t], order=order)
    method = ZMethod.EULER_MACLAURIN if t < settings.rs_min_height else ZMethod.RIEMANN_SIEGEL
    return ZValue(
        t=float(t),
        value=float(values[0]),
        remainder_bound=float(bounds[0]),
        order=order,
        method=method,
    )
