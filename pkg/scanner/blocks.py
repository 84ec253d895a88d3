"""
Gram blocks and Rosser's rule.

g_k is good when (−1)^k Z(g_k) > 0. A Gram block is the run of intervals
between two consecutive good points: its first and last intervals hold an
even number of sign changes, interior intervals an odd number (a single
interval holds an odd number). Rosser's rule holds for the block when it
holds exactly as many sign changes as intervals.
"""

from typing import List, Optional, Tuple

import numpy as np

from scanner.models import GramBlock, ScanGrid, ScanPolicy
from scanner.scan import scan
from siegel.gram import gram_points
from utils.errors import DomainError
from utils.logging_config import get_logger

logger = get_logger(__name__)


def parity_ok(counts: List[int]) -> bool:
    """Parity pattern of a Gram block."""
    if len(counts) == 1:
        return counts[0] % 2 == 1
    ends_even = counts[0] % 2 == 0 and counts[-1] % 2 == 0
    return ends_even and all(c % 2 == 1 for c in counts[1:-1])


def rosser_ok(counts: List[int]) -> bool:
    """Parity pattern holds and the block holds as many sign changes as intervals."""
    return parity_ok(counts) and sum(counts) == len(counts)


def interval_counts(grid: ScanGrid, ordinates: np.ndarray) -> Tuple[List[int], List[bool]]:
    """
    Sign changes in each [g_k, g_{k+1}] and whether the interval held an
    indeterminate sample.
    """
    determinate = grid.determinate
    counts, unsure = [], []
    for left, right in zip(ordinates[:-1], ordinates[1:]):
        lo = int(np.searchsorted(grid.t, left, side="left"))
        hi = int(np.searchsorted(grid.t, right, side="right"))
        window = slice(lo, hi)
        keep = determinate[window]
        signs = np.sign(grid.values[window][keep])
        counts.append(int(np.count_nonzero(signs[1:] != signs[:-1])))
        unsure.append(not bool(keep.all()))
    return counts, unsure


def _block(start: int, counts: List[int], unsure: List[bool], partial: bool) -> GramBlock:
    indeterminate = any(unsure)
    return GramBlock(
        start_index=start,
        length=len(counts),
        counts=counts,
        rosser_ok=(not partial) and (not indeterminate) and rosser_ok(counts),
        indeterminate=indeterminate,
        partial=partial,
    )


def classify_blocks(n_lo: int, n_hi: int, policy: Optional[ScanPolicy] = None) -> List[GramBlock]:
    """
    Partition [g_{n_lo}, g_{n_hi}) into Gram blocks.

    Segments before the first and after the last good Gram point in the
    range are returned with partial=True.

    Args:
        n_lo: First Gram index
        n_hi: Last Gram index, > n_lo
        policy: Sampling policy

    Returns:
        Blocks in increasing order covering every interval exactly once
    """
    if n_hi <= n_lo:
        raise DomainError(f"n_hi must exceed n_lo, got [{n_lo}, {n_hi}]", field="n_hi")

    grams = gram_points(n_lo, n_hi)
    ordinates = np.array([g.ordinate for g in grams])
    grid = scan(float(ordinates[0]), float(ordinates[-1]), policy, nodes=ordinates)

    at_gram = np.searchsorted(grid.t, ordinates)
    z_gram = grid.values[at_gram]
    sure_gram = grid.determinate[at_gram]
    parity = np.where(np.arange(n_lo, n_hi + 1) % 2 == 0, 1.0, -1.0)
    good = sure_gram & (parity * z_gram > 0)

    counts, unsure = interval_counts(grid, ordinates)
    # A Gram point of unknown sign taints both neighbouring intervals
    for k in np.flatnonzero(~sure_gram):
        if k > 0:
            unsure[k - 1] = True
        if k < len(unsure):
            unsure[k] = True

    good_offsets = np.flatnonzero(good)
    blocks: List[GramBlock] = []
    cursor = 0
    for offset in good_offsets:
        if offset > cursor:
            blocks.append(_block(
                n_lo + cursor, counts[cursor:offset], unsure[cursor:offset],
                partial=(cursor == 0 and not good[0]),
            ))
        cursor = offset
    if cursor < len(counts):
        blocks.append(_block(n_lo + cursor, counts[cursor:], unsure[cursor:], partial=True))

    for block in blocks:
        if block.indeterminate:
            logger.warning(f"Gram block at {block.start_index} has indeterminate signs")
        elif not block.partial and not block.rosser_ok:
            logger.warning(
                f"Gram block at {block.start_index} (counts {block.counts}) violates Rosser's rule"
            )
    return blocks
