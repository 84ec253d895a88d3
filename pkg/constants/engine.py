"""
Closed-form constants of Turing's method for the Riemann zeta-function,
Dirichlet L-functions and Dedekind zeta-functions, with the objective and
budget functions used to choose between them.
"""

import math
from typing import Dict, Optional, Tuple

from constants.models import (
    TURING_THRESHOLD,
    ConvexityParams,
    DedekindShape,
    Family,
    GrowthBound,
    PublishedConstants,
    TuringConstants,
)
from kernel import QuadratureSpec, i_of_d, log_zeta_tail, zeta_log_deriv, zeta_real
from utils.errors import DomainError, FamilyMismatchError
from utils.validators import require_above, require_positive, parse_integer
from utils.logging_config import get_logger

logger = get_logger(__name__)

LOG4 = math.log(4.0)
LOG2PI = math.log(2.0 * math.pi)
MU = 3e-6
DIRICHLET_MIN_T0 = 50.0

DEFAULT_GROWTH = GrowthBound(K=2.53, theta=0.25, t_min=128 * math.pi)


def _spec(spec: Optional[QuadratureSpec]) -> QuadratureSpec:
    if spec is not None:
        return spec
    from config import settings
    return settings.quadrature_spec()


def _require_family(consts: TuringConstants, family: Family) -> None:
    if consts.family != family:
        raise FamilyMismatchError(family.value, consts.family.value)


# ---------------------------------------------------------------------------
# Riemann zeta-function
# ---------------------------------------------------------------------------

def zeta_slope(p: ConvexityParams, growth: GrowthBound = DEFAULT_GROWTH) -> float:
    """2πb = θ(c − ½) + d²(log 4 − 1)."""
    return (growth.theta * (p.c - 0.5) + p.d ** 2 * (LOG4 - 1.0)) / (2.0 * math.pi)


def zeta_constants(
    p: ConvexityParams,
    growth: GrowthBound = DEFAULT_GROWTH,
    spec: Optional[QuadratureSpec] = None,
) -> TuringConstants:
    """
    Constants (a, b) with |∫S(t)dt| ≤ a + b log t2 for t2 > t1 > 168π.

    Args:
        p: Convexity parameters
        growth: Assumed bound |ζ(½+it)| ≤ K t^θ
        spec: Quadrature settings (defaults from settings)

    Returns:
        TuringConstants of the zeta family
    """
    spec = _spec(spec)
    c, d = p.c, p.d

    pi_a = (
        d ** 2 * LOG4 * (-zeta_log_deriv(0.5 + d, spec) - 0.5 * LOG2PI + 0.25)
        + 0.5 * d ** 2 * math.log(math.pi)
        - i_of_d(d, spec).value
        + 0.5 * (c - 0.5) * math.log(growth.K * zeta_real(c, spec))
        + log_zeta_tail(c, spec)
        + MU
    )

    t0 = TURING_THRESHOLD
    if growth.t_min > TURING_THRESHOLD:
        # The growth bound is only assumed above t_min
        t0 = growth.t_min
        logger.info(f"Growth bound assumed above {growth.t_min:.4g}; constants valid above it")

    return TuringConstants(
        a=pi_a / math.pi,
        b=zeta_slope(p, growth),
        family=Family.ZETA,
        t0=t0,
    )


def zeta_objective(consts: TuringConstants, g_p: float) -> float:
    """
    F = b log(g_p/2π) + a.

    Args:
        consts: Zeta constants
        g_p: Height of the last Gram point, g_p > 2π

    Returns:
        The objective value
    """
    _require_family(consts, Family.ZETA)
    g_p = require_above("g_p", g_p, 2.0 * math.pi)
    return consts.b * math.log(g_p / (2.0 * math.pi)) + consts.a


def block_requirement_coefficients(consts: TuringConstants) -> Tuple[float, float]:
    """
    Coefficients (α, β) of the Gram-block bound N ≥ α log² g_p + β log g_p.

    α = b/6π and β = (a − b log 2π)/6π.
    """
    _require_family(consts, Family.ZETA)
    six_pi = 6.0 * math.pi
    return consts.b / six_pi, (consts.a - consts.b * LOG2PI) / six_pi


def gram_block_requirement(consts: TuringConstants, g_p: float) -> int:
    """
    Least number of consecutive Rosser-satisfying Gram blocks ending at g_p
    needed to certify N(g_p) = p + 1.

    Args:
        consts: Zeta constants
        g_p: Height of the last Gram point, g_p > 2π

    Returns:
        Required block count (at least 1)
    """
    g_p = require_above("g_p", g_p, 2.0 * math.pi)
    alpha, beta = block_requirement_coefficients(consts)
    log_gp = math.log(g_p)
    bound = alpha * log_gp ** 2 + beta * log_gp
    return max(1, math.ceil(bound))


def zeta_slope_infimum(growth: GrowthBound = DEFAULT_GROWTH) -> float:
    """Limit of b as c → 1⁺ and d → ½⁺: θ/4π + (log 4 − 1)/8π."""
    return growth.theta / (4.0 * math.pi) + (LOG4 - 1.0) / (8.0 * math.pi)


def van_der_corput_growth(A: float, eta: float, t0: float) -> GrowthBound:
    """
    Growth pair (A·A′, 1/6 + η) from |ζ(½+it)| ≤ A t^(1/6) log t, with
    A′ = max_{t ≥ t0} log t / t^η.

    Args:
        A: Constant of the van der Corput bound
        eta: Extra exponent, 0 < η < 1/3
        t0: Height above which the pair is used

    Returns:
        GrowthBound valid above t0 (given the A supplied)
    """
    A = require_positive("A", A)
    eta = require_positive("eta", eta)
    if eta >= 1.0 / 3.0:
        raise DomainError(f"eta must be below 1/3, got {eta}", field="eta")
    t0 = require_above("t0", t0, 1.0)

    # log t / t^η peaks at t = e^(1/η)
    peak = math.exp(1.0 / eta)
    t_star = max(t0, peak)
    a_prime = math.log(t_star) / t_star ** eta
    return GrowthBound(K=A * a_prime, theta=1.0 / 6.0 + eta, t_min=t0)


# ---------------------------------------------------------------------------
# Dirichlet L-functions
# ---------------------------------------------------------------------------

def dirichlet_constants(
    p: ConvexityParams,
    t0: float = DIRICHLET_MIN_T0,
    spec: Optional[QuadratureSpec] = None,
) -> TuringConstants:
    """
    Constants (a, b) with |∫S(t,χ)dt| ≤ a + b log(Q t2/2π) for t2 > t1 > t0.

    Args:
        p: Convexity parameters
        t0: Height threshold, t0 ≥ 50
        spec: Quadrature settings

    Returns:
        TuringConstants of the Dirichlet family
    """
    t0 = require_above("t0", t0, DIRICHLET_MIN_T0, inclusive=True)
    spec = _spec(spec)
    c, d = p.c, p.d

    pi_a = (
        729.0 / (2048.0 * t0 ** 2)
        + (c - 0.5) * math.log(zeta_real(c, spec))
        + log_zeta_tail(c, spec)
        - d ** 2 * LOG4 * zeta_log_deriv(0.5 + d, spec)
        - i_of_d(d, spec).value
        + 15.0 * d ** 2 / t0 ** 2
    )
    two_pi_b = 0.5 * (c - 0.5) ** 2 + d ** 2 * (LOG4 - 1.0)

    return TuringConstants(
        a=pi_a / math.pi,
        b=two_pi_b / (2.0 * math.pi),
        family=Family.DIRICHLET,
        t0=t0,
    )


def dirichlet_budget(consts: TuringConstants, Q: int, t2: float) -> float:
    """
    B(Q, t2) = 0.1592 L (a + b L) with L = log(Q t2/2π).

    Args:
        consts: Dirichlet constants
        Q: Conductor, Q > 1
        t2: Upper height

    Returns:
        The budget
    """
    _require_family(consts, Family.DIRICHLET)
    Q = parse_integer(Q, "Q", minimum=2)
    t2 = require_positive("t2", t2)
    ratio = Q * t2 / (2.0 * math.pi)
    if ratio <= 1.0:
        raise DomainError(f"Q·t2/2π must exceed 1, got {ratio:.6g}", field="t2")
    L = math.log(ratio)
    return 0.1592 * L * (consts.a + consts.b * L)


# ---------------------------------------------------------------------------
# Dedekind zeta-functions
# ---------------------------------------------------------------------------

def dedekind_constants(
    p: ConvexityParams,
    t0: float,
    spec: Optional[QuadratureSpec] = None,
) -> TuringConstants:
    """
    Constants (a, b, g) with |∫S_K(t)dt| ≤ a + bN + g log(|D_K|(t2/2π)^N).

    Args:
        p: Convexity parameters
        t0: Height threshold, t0 > 0
        spec: Quadrature settings

    Returns:
        TuringConstants of the Dedekind family
    """
    t0 = require_positive("t0", t0)
    spec = _spec(spec)
    c, d = p.c, p.d
    log2 = math.log(2.0)
    t0sq = t0 ** 2

    pi_a = (c - 0.5) * (81.0 / (32.0 * t0sq) + math.log(3.0)) + 4.0 * d ** 2 * log2 / t0sq
    pi_b = (
        (c - 0.5) * (math.log(zeta_real(c, spec)) + 81.0 * (c - 0.5) / (128.0 * t0sq))
        + log_zeta_tail(c, spec)
        + d ** 2 * log2 * (log2 - 0.5 - 2.0 * zeta_log_deriv(0.5 + d, spec) + 8.0 / t0sq)
        - i_of_d(d, spec).value
    )
    pi_g = 0.25 * (c - 0.5) ** 2 + 0.5 * d ** 2 * (LOG4 - 1.0)

    return TuringConstants(
        a=pi_a / math.pi,
        b=pi_b / math.pi,
        g=pi_g / math.pi,
        family=Family.DEDEKIND,
        t0=t0,
    )


def field_log(shape: DedekindShape, t2: float) -> float:
    """L = log(|D_K| (t2/2π)^N)."""
    t2 = require_positive("t2", t2)
    L = math.log(shape.abs_discriminant) + shape.degree * math.log(t2 / (2.0 * math.pi))
    if L <= 0:
        raise DomainError(f"log(|D_K|(t2/2π)^N) must be positive, got {L:.6g}", field="t2")
    return L


def dedekind_budget(consts: TuringConstants, shape: DedekindShape, t2: float) -> float:
    """
    B(D_K, t2, N) = ((bN + a)/2π) L + (g/2π) L².

    Args:
        consts: Dedekind constants
        shape: Field degree, signature and discriminant
        t2: Upper height

    Returns:
        The budget
    """
    _require_family(consts, Family.DEDEKIND)
    L = field_log(shape, t2)
    two_pi = 2.0 * math.pi
    return (consts.b * shape.degree + consts.a) / two_pi * L + consts.g / two_pi * L ** 2


def dedekind_objective(consts: TuringConstants, shape: DedekindShape, t2: float) -> float:
    """a + N b + L g, the right side of the integral bound at t2."""
    _require_family(consts, Family.DEDEKIND)
    L = field_log(shape, t2)
    return consts.a + shape.degree * consts.b + L * consts.g


# ---------------------------------------------------------------------------
# Literature values
# ---------------------------------------------------------------------------

def _published(label: str, family: Family, a: float, b: float, t0: float,
               g: Optional[float] = None, note: str = "") -> PublishedConstants:
    return PublishedConstants(
        label=label,
        constants=TuringConstants(a=a, b=b, g=g, family=family, t0=t0),
        note=note,
    )


PUBLISHED_CONSTANTS: Dict[str, PublishedConstants] = {
    entry.label: entry
    for entry in (
        _published("turing", Family.ZETA, 2.07, 0.128, TURING_THRESHOLD),
        _published("lehman", Family.ZETA, 1.7, 0.114, TURING_THRESHOLD),
        _published("zeta-new", Family.ZETA, 2.0666, 0.0585, TURING_THRESHOLD,
                   note="(c, d) = (11/10, 3/4)"),
        _published("zeta-new-rounded", Family.ZETA, 2.067, 0.059, TURING_THRESHOLD,
                   note="rounded form of zeta-new"),
        _published("rumely", Family.DIRICHLET, 1.8397, 0.1242, 50.0),
        _published("dirichlet-new", Family.DIRICHLET, 1.9744, 0.0833, 50.0,
                   note="(c, d) = (1.17, 0.88)"),
        _published("dirichlet-new-rounded", Family.DIRICHLET, 1.975, 0.084, 50.0,
                   note="rounded form of dirichlet-new"),
        _published("tollis", Family.DEDEKIND, 0.2627, 1.8392, 40.0, g=0.122),
        _published("dedekind-new", Family.DEDEKIND, 0.264, 1.843, 40.0, g=0.105,
                   note="(c, d) = (5/4, 1); the formula gives g ≈ 0.1062"),
    )
}
