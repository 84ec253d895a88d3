"""
Sampled check of the growth bound |ζ(½+it)| ≤ K t^(1/4).
"""

import numpy as np

from siegel.models import GrowthReport
from siegel.zfunction import MIN_HEIGHT, z_values
from utils.errors import DomainError
from utils.validators import require_above, require_positive
from utils.logging_config import get_logger

logger = get_logger(__name__)


def growth_check(t_lo: float, t_hi: float, samples: int, bound: float = 2.53) -> GrowthReport:
    """
    Maximum of |Z(t)| / t^(1/4) over equally spaced samples of [t_lo, t_hi].

    Args:
        t_lo: Lower end, ≥ 5
        t_hi: Upper end, > t_lo
        samples: Number of sample points, ≥ 2
        bound: K to compare against

    Returns:
        GrowthReport; passed iff the sampled maximum is ≤ bound
    """
    t_lo = require_above("t_lo", t_lo, MIN_HEIGHT, inclusive=True)
    t_hi = require_above("t_hi", t_hi, t_lo)
    bound = require_positive("bound", bound)
    if int(samples) != samples or samples < 2:
        raise DomainError(f"samples must be an integer ≥ 2, got {samples}", field="samples")
    samples = int(samples)

    t = np.linspace(t_lo, t_hi, samples)
    values, _ = z_values(t)
    ratio = np.abs(values) / np.power(t, 0.25)
    k = int(np.argmax(ratio))

    report = GrowthReport(
        t_lo=t_lo,
        t_hi=t_hi,
        samples=samples,
        max_ratio=float(ratio[k]),
        argmax=float(t[k]),
        bound=bound,
        passed=bool(ratio[k] <= bound),
    )
    logger.info(
        f"Growth check on [{t_lo:g}, {t_hi:g}]: max |Z|/t^(1/4) = {report.max_ratio:.4f} "
        f"at t = {report.argmax:.4f} ({'pass' if report.passed else 'FAIL'})"
    )
    return report
