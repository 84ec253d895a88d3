"""
Sign-change scanning of Z(t).

The base grid steps by at most a quarter of the mean zero gap, π/(4θ′(t)).
Each pass inserts three points between neighbours (4x density); the scan is
accepted once a pass finds no new sign changes. Samples whose |Z| is within
the remainder bound are nudged inside their gap before counting.
"""

import math
from typing import List, Optional, Sequence

import numpy as np

from config import settings
from scanner.models import ScanGrid, ScanPolicy, SignBracket
from siegel.theta import theta_deriv_array
from siegel.zfunction import z_values
from utils.errors import DomainError, IndeterminateSignError
from utils.validators import require_above, require_finite
from utils.logging_config import get_logger

logger = get_logger(__name__)

SCAN_MIN_HEIGHT = 10.0

# Trial shifts of an indeterminate sample, as fractions of half its smaller gap
RESAMPLE_FRACTIONS = (0.25, -0.25, 0.45, -0.45, 0.1, -0.1)


def base_grid(t_lo: float, t_hi: float, max_step: Optional[float] = None,
              nodes: Sequence[float] = ()) -> np.ndarray:
    """
    Sample heights with spacing ≤ π/(4θ′(t)), including both ends and nodes.

    θ′ increases, so the step is taken from θ′ at the far end of each step.
    """
    points = [t_lo]
    t = t_lo
    while t < t_hi:
        h = math.pi / (4.0 * float(theta_deriv_array(t)))
        h = math.pi / (4.0 * float(theta_deriv_array(t + h)))
        if max_step is not None:
            h = min(h, max_step)
        t += h
        points.append(min(t, t_hi))
    grid = np.asarray(points)
    if len(nodes):
        inside = np.asarray([x for x in nodes if t_lo <= x <= t_hi], dtype=float)
        grid = np.union1d(grid, inside)
    return grid


def refine_grid(t: np.ndarray) -> np.ndarray:
    """Insert three equally spaced points between neighbours."""
    if t.size < 2:
        return t.copy()
    fractions = np.array([0.25, 0.5, 0.75])
    gaps = np.diff(t)
    inner = (t[:-1, None] + gaps[:, None] * fractions[None, :]).ravel()
    return np.union1d(t, inner)


def resolve_indeterminate(
    t: np.ndarray,
    values: np.ndarray,
    bounds: np.ndarray,
    order: int,
    fixed: np.ndarray,
):
    """
    Move interior samples with |Z| ≤ bound to a nearby height where the sign
    is determinate. Fixed samples (ends and nodes) never move; a sample stays
    indeterminate only if every trial shift fails.

    A shift never exceeds 0.225 of either neighbouring gap, so the grid stays
    strictly increasing even when neighbours move too.

    Returns:
        (t, values, bounds), copies with resolved samples replaced
    """
    t, values, bounds = t.copy(), values.copy(), bounds.copy()
    pending = np.flatnonzero((np.abs(values) <= bounds) & ~fixed)
    pending = pending[(pending > 0) & (pending < t.size - 1)]
    if pending.size == 0:
        return t, values, bounds

    origin = t[pending]
    half_gap = 0.5 * np.minimum(origin - t[pending - 1], t[pending + 1] - origin)
    for fraction in RESAMPLE_FRACTIONS:
        trial = origin + fraction * half_gap
        v, b = z_values(trial, order=order)
        hit = np.abs(v) > b
        moved = pending[hit]
        t[moved], values[moved], bounds[moved] = trial[hit], v[hit], b[hit]
        pending, origin, half_gap = pending[~hit], origin[~hit], half_gap[~hit]
        if pending.size == 0:
            break

    if pending.size:
        logger.debug(f"{pending.size} samples stay indeterminate near t={t[pending[0]]:.6f}")
    return t, values, bounds


def _sample(t: np.ndarray, order: int, nodes: np.ndarray):
    values, bounds = z_values(t, order=order)
    fixed = np.isin(t, nodes)
    fixed[[0, -1]] = True
    return resolve_indeterminate(t, values, bounds, order, fixed)


def sign_brackets(t: np.ndarray, values: np.ndarray, bounds: np.ndarray) -> List[SignBracket]:
    """
    Brackets between consecutive determinate samples of opposite sign.
    Indeterminate samples are skipped.
    """
    determinate = np.abs(values) > bounds
    idx = np.flatnonzero(determinate)
    if idx.size < 2:
        return []
    signs = np.sign(values[idx])
    change = np.flatnonzero(signs[1:] != signs[:-1])
    return [SignBracket(t_lo=float(t[idx[k]]), t_hi=float(t[idx[k + 1]])) for k in change]


def scan(
    t_lo: float,
    t_hi: float,
    policy: Optional[ScanPolicy] = None,
    nodes: Sequence[float] = (),
) -> ScanGrid:
    """
    Scan [t_lo, t_hi] until the sign-change count is stable under 4x refinement.

    Args:
        t_lo: Lower end, ≥ 10
        t_hi: Upper end, ≥ t_lo
        policy: Sampling policy (defaults from settings)
        nodes: Heights that must be sampled (e.g. Gram points)

    Returns:
        ScanGrid of the accepted sampling

    Raises:
        DomainError: If t_lo < 10 or t_hi < t_lo
        IndeterminateSignError: If the count is still changing at max_depth
    """
    policy = policy if policy is not None else settings.scan_policy()
    t_lo = require_above("t_lo", t_lo, SCAN_MIN_HEIGHT, inclusive=True)
    t_hi = require_finite("t_hi", t_hi)
    if t_hi < t_lo:
        raise DomainError(f"t_hi must be ≥ t_lo, got [{t_lo}, {t_hi}]", field="t_hi")

    empty = np.empty(0)
    if t_hi == t_lo:
        return ScanGrid(empty, empty, empty, [], 0)

    node_array = np.asarray(nodes, dtype=float)
    t, values, bounds = _sample(base_grid(t_lo, t_hi, policy.max_step, nodes), policy.order, node_array)
    brackets = sign_brackets(t, values, bounds)

    for depth in range(1, policy.max_depth + 1):
        t_fine, v_fine, b_fine = _sample(refine_grid(t), policy.order, node_array)
        fine = sign_brackets(t_fine, v_fine, b_fine)
        logger.debug(
            f"Scan [{t_lo:.6f}, {t_hi:.6f}] pass {depth}: {len(t_fine)} samples, "
            f"{len(fine)} sign changes (previous {len(brackets)})"
        )
        t, values, bounds = t_fine, v_fine, b_fine
        if len(fine) == len(brackets):
            return ScanGrid(t, values, bounds, fine, depth)
        brackets = fine

    logger.warning(f"Sign pattern on [{t_lo}, {t_hi}] did not stabilise after {policy.max_depth} passes")
    raise IndeterminateSignError(
        f"Sign-change count on [{t_lo}, {t_hi}] still changing after {policy.max_depth} refinements",
        t_lo=t_lo,
        t_hi=t_hi,
    )


def scan_interval(t_lo: float, t_hi: float, policy: Optional[ScanPolicy] = None) -> List[SignBracket]:
    """
    Sign-change brackets of Z on [t_lo, t_hi].

    Args:
        t_lo: Lower end, ≥ 10
        t_hi: Upper end
        policy: Sampling policy

    Returns:
        Brackets (t1, t2) with determinate opposite signs, in increasing order
    """
    return scan(t_lo, t_hi, policy).brackets


def count_zeros(t_lo: float, t_hi: float, policy: Optional[ScanPolicy] = None) -> int:
    """Number of sign changes of Z located on [t_lo, t_hi]."""
    return len(scan_interval(t_lo, t_hi, policy))
