"""
Integrals of log ζ along the real axis and the combination I(d).

∫_c^∞ log ζ(σ) dσ integrates the Euler product termwise:

    ∫_c^∞ log ζ = Σ_p Σ_k p^(−kc) / (k² log p)

The series converges like Σ p^(1−c), so below spec.series_onset the
integral over [c, series_onset] is taken by adaptive quadrature of log ζ and
only the remainder comes from the series.
"""

from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from kernel.models import QuadratureSpec, IOfD
from kernel.primes import prime_table, series_tail_bound
from kernel.zeta import log_zeta
from utils.errors import ConvergenceError, DomainError
from utils.validators import require_above, require_open_closed
from utils.logging_config import get_logger

logger = get_logger(__name__)


def prime_power_tail_bound(c: float, spec: QuadratureSpec) -> float:
    """
    Analytic bound on the truncation error of the prime-power series at c.

    Args:
        c: Abscissa, c > 1
        spec: Cutoffs

    Returns:
        Upper bound on the omitted part of the series
    """
    c = require_above("c", c, 1.0)
    return series_tail_bound(c, spec.prime_cutoff, spec.power_cutoff)


def _prime_power_series(c: float, spec: QuadratureSpec) -> float:
    """Σ_{p ≤ P} Σ_{k ≤ K} p^(−kc) / (k² log p)."""
    primes = prime_table(spec.prime_cutoff)
    logp = np.log(primes)
    k = np.arange(1, spec.power_cutoff + 1, dtype=float)
    terms = np.exp(-c * np.outer(logp, k)) / (np.outer(logp, k * k))
    return float(terms.sum())


@lru_cache(maxsize=2048)
def _tail(c: float, spec: QuadratureSpec) -> float:
    onset = spec.series_onset
    if c >= onset:
        bound = series_tail_bound(c, spec.prime_cutoff, spec.power_cutoff)
        if bound > spec.tail_tol:
            raise ConvergenceError(f"Series tail bound {bound:.2e} at c={c} exceeds tail_tol")
        return _prime_power_series(c, spec)

    head, error = quad(
        log_zeta, c, onset,
        args=(spec,),
        epsabs=spec.tail_tol / 10,
        epsrel=0.0,
        limit=200,
    )
    if error > spec.tail_tol:
        raise ConvergenceError(
            f"Quadrature of log ζ on [{c}, {onset}] reached only {error:.2e}"
        )
    logger.debug(f"∫ log ζ on [{c}, {onset}] = {head:.12f} (err {error:.1e})")
    return head + _prime_power_series(onset, spec)


def log_zeta_tail(c: float, spec: QuadratureSpec) -> float:
    """
    Semi-infinite integral ∫_c^∞ log ζ(σ) dσ.

    Args:
        c: Lower limit, c > 1
        spec: Quadrature settings

    Returns:
        The integral (positive, strictly decreasing in c)

    Raises:
        DomainError: If c ≤ 1
        ConvergenceError: If tail_tol cannot be met
    """
    c = require_above("c", c, 1.0)
    return _tail(c, spec)


def log_zeta_integral(lo: float, hi: float, spec: QuadratureSpec) -> float:
    """
    Finite integral ∫_lo^hi log ζ(σ) dσ as a difference of tails.

    Args:
        lo: Lower limit, lo > 1
        hi: Upper limit, hi > lo
        spec: Quadrature settings

    Returns:
        The integral (positive)
    """
    lo = require_above("lo", lo, 1.0)
    hi = require_above("hi", hi, 1.0)
    if hi <= lo:
        raise DomainError(f"Integral limits out of order: lo={lo}, hi={hi}", field="hi")
    return _tail(lo, spec) - _tail(hi, spec)


def i_of_d(d: float, spec: QuadratureSpec) -> IOfD:
    """
    I(d) = ½∫_{1+2d}^∞ log ζ − ∫_{½+d}^∞ log ζ
           + ½∫_{1+2d}^{1+4d} log ζ − ∫_{½+d}^{½+2d} log ζ

    Args:
        d: Shift parameter in (1/2, 1]
        spec: Quadrature settings

    Returns:
        IOfD
    """
    d = require_open_closed("d", d, 0.5, 1.0)
    value = (
        0.5 * log_zeta_tail(1 + 2 * d, spec)
        - log_zeta_tail(0.5 + d, spec)
        + 0.5 * log_zeta_integral(1 + 2 * d, 1 + 4 * d, spec)
        - log_zeta_integral(0.5 + d, 0.5 + 2 * d, spec)
    )
    return IOfD(d=d, value=value)
