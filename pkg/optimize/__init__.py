"""
Lattice searches for the convexity parameters minimizing each family's objective.
"""

from optimize.models import (
    Coupling,
    LatticeSpec,
    ZetaContext,
    DirichletContext,
    DedekindContext,
    SearchRow,
    SkippedPoint,
    SearchResult,
)
from optimize.queue import EvaluationQueue
from optimize.search import (
    grid_minimize,
    refine,
    lattice_points,
    zeta_stage1_lattice,
    zeta_stage2_lattice,
    admissible_box_lattice,
)

__all__ = [
    'Coupling',
    'LatticeSpec',
    'ZetaContext',
    'DirichletContext',
    'DedekindContext',
    'SearchRow',
    'SkippedPoint',
    'SearchResult',
    'EvaluationQueue',
    'grid_minimize',
    'refine',
    'lattice_points',
    'zeta_stage1_lattice',
    'zeta_stage2_lattice',
    'admissible_box_lattice',
]
