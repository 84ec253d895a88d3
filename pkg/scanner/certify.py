"""
Turing's method: certify N(g_p) from a run of Rosser-satisfying Gram blocks.

If N consecutive Gram blocks with union [g_n, g_p) satisfy Rosser's rule and
N is at least the requirement computed from the constants (a, b), then
N(g_n) ≤ n + 1 and N(g_p) ≥ p + 1. The blocks hold exactly p − n zeros, so
N(g_p) ≤ p + 1; zeros located up to g_p supply the matching lower bound.
"""

import math
from typing import Optional

from config import settings
from constants.engine import gram_block_requirement
from constants.models import TURING_THRESHOLD, Family, TuringConstants
from scanner.blocks import classify_blocks
from scanner.models import CertificationReport, ScanPolicy
from scanner.scan import count_zeros
from siegel.gram import gram_point
from siegel.theta import theta
from utils.errors import (
    CertificationError,
    DomainError,
    FamilyMismatchError,
    RosserViolationError,
    ThresholdError,
)
from utils.logging_config import get_logger

logger = get_logger(__name__)


def certify(
    n: int,
    p: int,
    consts: TuringConstants,
    policy: Optional[ScanPolicy] = None,
    scan_floor: Optional[float] = None,
) -> CertificationReport:
    """
    Certify the number of zeros up to g_p.

    Args:
        n: Gram index where the block run starts (g_n must be good)
        p: Gram index where the block run ends (g_p must be good), p > n
        consts: Zeta constants
        policy: Sampling policy
        scan_floor: Height from which zeros are counted (below the first zero)

    Returns:
        CertificationReport; certified is False when there are too few
        blocks, indeterminate signs, or located zeros fall short

    Raises:
        FamilyMismatchError: If consts are not zeta constants
        ThresholdError: If g_n ≤ 168π
        RosserViolationError: If a block in the run violates Rosser's rule
        CertificationError: If the run is not block-aligned or counts disagree
    """
    if consts.family != Family.ZETA:
        raise FamilyMismatchError(Family.ZETA.value, consts.family.value)
    if int(p) != p or int(n) != n or p <= n:
        raise DomainError(f"Need integers p > n, got n={n}, p={p}", field="p")
    n, p = int(n), int(p)
    scan_floor = settings.scan_floor if scan_floor is None else scan_floor

    g_n = gram_point(n).ordinate
    g_p = gram_point(p).ordinate
    threshold = max(TURING_THRESHOLD, consts.t0)
    if g_n <= threshold:
        raise ThresholdError(
            f"g_{n} = {g_n:.6f} must exceed {threshold:.6f} for these constants",
            field="n",
        )

    logger.info(f"Certifying N(g_{p}) from Gram blocks on [g_{n}, g_{p}) = [{g_n:.6f}, {g_p:.6f})")
    blocks = classify_blocks(n, p, policy)

    partial = [b for b in blocks if b.partial]
    if partial:
        raise CertificationError(
            f"[g_{n}, g_{p}) is not a union of Gram blocks; partial segment at index "
            f"{partial[0].start_index} (length {partial[0].length})"
        )
    for block in blocks:
        if not block.indeterminate and not block.rosser_ok:
            raise RosserViolationError(block)

    required = gram_block_requirement(consts, g_p)
    indeterminate = any(b.indeterminate for b in blocks)
    range_count = sum(b.total for b in blocks)
    upper_bound = p + 1
    lower_count = count_zeros(scan_floor, g_n, policy) + range_count

    if lower_count > upper_bound:
        raise CertificationError(
            f"Located {lower_count} zeros below g_{p} but the bound allows {upper_bound}"
        )

    certified = len(blocks) >= required and not indeterminate and lower_count == upper_bound
    exact_count = None
    if certified:
        exact_count = upper_bound
        expected = round(theta(g_p) / math.pi + 1)
        if exact_count != expected:
            raise CertificationError(
                f"Certified count {exact_count} disagrees with θ(g_p)/π + 1 = {expected}"
            )
        logger.info(f"Certified N(g_{p}) = {exact_count} with {len(blocks)} blocks (need {required})")
    else:
        logger.warning(
            f"Not certified: {len(blocks)} blocks (need {required}), "
            f"indeterminate={indeterminate}, located {lower_count} of {upper_bound}"
        )

    return CertificationReport(
        n=n,
        p=p,
        g_n=g_n,
        g_p=g_p,
        blocks_used=len(blocks),
        required_blocks=required,
        certified=certified,
        lower_count=lower_count,
        upper_bound=upper_bound,
        exact_count=exact_count,
        range_count=range_count,
        indeterminate=indeterminate,
        constants_used=consts,
        blocks=blocks,
    )
