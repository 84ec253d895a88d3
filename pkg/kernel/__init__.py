"""
Real-axis zeta-function kernel: ζ(σ), ζ′/ζ(σ), integrals of log ζ and I(d).
"""

from kernel.models import QuadratureSpec, IOfD
from kernel.zeta import zeta_real, zeta_log_deriv
from kernel.integrals import log_zeta_tail, log_zeta_integral, i_of_d, prime_power_tail_bound

__all__ = [
    'QuadratureSpec',
    'IOfD',
    'zeta_real',
    'zeta_log_deriv',
    'log_zeta_tail',
    'log_zeta_integral',
    'i_of_d',
    'prime_power_tail_bound',
]
