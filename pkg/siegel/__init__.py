"""
θ(t), the Riemann-Siegel Z function, Gram points and the growth check.
"""

from siegel.models import ZMethod, GramPoint, ZValue, GrowthReport
from siegel.theta import theta, theta_deriv
from siegel.zfunction import z_function, z_values
from siegel.gram import gram_point, gram_points
from siegel.growth import growth_check

__all__ = [
    'ZMethod',
    'GramPoint',
    'ZValue',
    'GrowthReport',
    'theta',
    'theta_deriv',
    'z_function',
    'z_values',
    'gram_point',
    'gram_points',
    'growth_check',
]
