"""
Explicit constants of Turing's method and the quantities built from them.
"""

from constants.models import (
    TURING_THRESHOLD,
    Family,
    ConvexityParams,
    GrowthBound,
    TuringConstants,
    DedekindShape,
    PublishedConstants,
)
from constants.engine import (
    DEFAULT_GROWTH,
    PUBLISHED_CONSTANTS,
    zeta_constants,
    zeta_objective,
    zeta_slope,
    zeta_slope_infimum,
    gram_block_requirement,
    block_requirement_coefficients,
    van_der_corput_growth,
    dirichlet_constants,
    dirichlet_budget,
    dedekind_constants,
    dedekind_budget,
    dedekind_objective,
    field_log,
)

__all__ = [
    'TURING_THRESHOLD',
    'Family',
    'ConvexityParams',
    'GrowthBound',
    'TuringConstants',
    'DedekindShape',
    'PublishedConstants',
    'DEFAULT_GROWTH',
    'PUBLISHED_CONSTANTS',
    'zeta_constants',
    'zeta_objective',
    'zeta_slope',
    'zeta_slope_infimum',
    'gram_block_requirement',
    'block_requirement_coefficients',
    'van_der_corput_growth',
    'dirichlet_constants',
    'dirichlet_budget',
    'dedekind_constants',
    'dedekind_budget',
    'dedekind_objective',
    'field_log',
]
