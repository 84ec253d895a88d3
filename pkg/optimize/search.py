"""
Deterministic lattice searches for the (c, d) minimizing each family's
objective: F(c, d) for zeta, B(Q, t2) for Dirichlet, B(D_K, t2, N) for Dedekind.
"""

import asyncio
import math
from functools import partial
from typing import List, Optional, Tuple

from config import settings
from constants.engine import (
    dedekind_budget,
    dedekind_constants,
    dirichlet_budget,
    dirichlet_constants,
    zeta_constants,
    zeta_objective,
)
from constants.models import ConvexityParams, Family
from kernel import QuadratureSpec
from optimize.models import (
    Coupling,
    DedekindContext,
    DirichletContext,
    LatticeSpec,
    SearchContext,
    SearchResult,
    SearchRow,
    ZetaContext,
)
from optimize.queue import EvaluationQueue
from utils.errors import DomainError, EmptyLatticeError, FamilyMismatchError
from utils.validators import in_open_closed, require_finite, require_positive
from utils.logging_config import get_logger

logger = get_logger(__name__)

C_BOX = (1.0, 1.25)
D_BOX = (0.5, 1.0)


def zeta_stage1_lattice() -> LatticeSpec:
    """c = 1.24 − NΔ, d = 0.99 − 2NΔ, Δ = 0.02, 0 ≤ N ≤ 12."""
    return LatticeSpec(
        c_start=1.24, d_start=0.99, c_step=-0.02, d_step=-0.02,
        count=13, coupling=Coupling.STAGE1,
    )


def zeta_stage2_lattice() -> LatticeSpec:
    """c = 1.05 + NΔ, d = 0.68 + NΔ, Δ = 0.01, 0 ≤ N ≤ 20."""
    return LatticeSpec(
        c_start=1.05, d_start=0.68, c_step=0.01, d_step=0.01,
        count=21, coupling=Coupling.STAGE2,
    )


def admissible_box_lattice(step: float = 0.01) -> LatticeSpec:
    """Full grid of step `step` covering (1, 5/4] × (1/2, 1]."""
    step = require_positive("step", step)
    c_count = int(math.floor((C_BOX[1] - C_BOX[0]) / step + 1e-9))
    d_count = int(math.floor((D_BOX[1] - D_BOX[0]) / step + 1e-9))
    if c_count < 1 or d_count < 1:
        raise EmptyLatticeError(f"Step {step} leaves no admissible points")
    return LatticeSpec(
        c_start=round(C_BOX[1] - (c_count - 1) * step, 12),
        d_start=round(D_BOX[1] - (d_count - 1) * step, 12),
        c_step=step, d_step=step,
        count=c_count, d_count=d_count,
        coupling=Coupling.FULL_GRID,
    )


def lattice_points(lattice: LatticeSpec) -> List[Tuple[int, float, float]]:
    """All (index, c, d) of a lattice in c-major order."""
    d_values = lattice.d_values()
    return [
        (i * len(d_values) + j, c, d)
        for i, c in enumerate(lattice.c_values())
        for j, d in enumerate(d_values)
    ]


def evaluate_point(
    family: Family,
    context: SearchContext,
    spec: QuadratureSpec,
    index: int,
    params: ConvexityParams,
) -> SearchRow:
    """
    Constants and objective at one admissible point.

    Args:
        family: Zeta-function family
        context: Family-specific scalars
        spec: Quadrature settings
        index: Lattice index
        params: The point

    Returns:
        SearchRow
    """
    if family == Family.ZETA:
        consts = zeta_constants(params, context.growth, spec)
        objective = zeta_objective(consts, context.g_p)
    elif family == Family.DIRICHLET:
        consts = dirichlet_constants(params, context.t0, spec)
        objective = dirichlet_budget(consts, context.Q, context.t2)
    else:
        consts = dedekind_constants(params, context.t0, spec)
        objective = dedekind_budget(consts, context.shape, context.t2)
    return SearchRow.from_constants(index, params, consts, objective)


def grid_minimize(
    family: Family,
    lattice: LatticeSpec,
    context: SearchContext,
    spec: Optional[QuadratureSpec] = None,
    workers: Optional[int] = None,
) -> SearchResult:
    """
    Evaluate a family's objective at every admissible lattice point.

    Inadmissible points and points whose evaluation fails to converge are
    listed in `skipped`. Ties are broken by smallest objective, then
    smallest d, then smallest c.

    Args:
        family: Zeta-function family
        lattice: Points to evaluate
        context: ZetaContext, DirichletContext or DedekindContext
        spec: Quadrature settings (defaults from settings)
        workers: Thread count (defaults to settings.worker_threads)

    Returns:
        SearchResult

    Raises:
        FamilyMismatchError: If the context belongs to another family
        EmptyLatticeError: If no point could be evaluated
    """
    family = Family(family)
    if context.family != family:
        raise FamilyMismatchError(family.value, context.family.value)
    spec = spec if spec is not None else settings.quadrature_spec()
    workers = workers if workers is not None else settings.worker_threads

    queue = EvaluationQueue(partial(evaluate_point, family, context, spec), max_workers=workers)
    for index, c, d in lattice_points(lattice):
        if not in_open_closed(c, *C_BOX):
            queue.skip(index, c, d, f"c={c} outside (1, 5/4]")
        elif not in_open_closed(d, *D_BOX):
            queue.skip(index, c, d, f"d={d} outside (1/2, 1]")
        else:
            queue.add_point(index, ConvexityParams(c=c, d=d))

    logger.info(
        f"Searching {family.value} lattice of {lattice.cardinality} points "
        f"({lattice.coupling.value}, {workers} workers)"
    )
    table, skipped = asyncio.run(queue.run())

    if not table:
        raise EmptyLatticeError("No admissible lattice point could be evaluated")

    best = min(table, key=lambda row: (row.objective, row.d, row.c))
    logger.info(f"Best {family.value} objective {best.objective:.6f} at c={best.c}, d={best.d}")

    return SearchResult(
        family=family,
        best_params=best.params,
        best_value=best.objective,
        table=table,
        skipped=skipped,
        lattice=lattice,
    )


def _axis(center: float, radius: float, step: float, lo: float, hi: float) -> Tuple[float, int]:
    """Start and count of the grid center + k·step, |k·step| ≤ radius, inside (lo, hi]."""
    reach = int(math.floor(radius / step + 1e-9))
    down = 0
    while down < reach and round(center - (down + 1) * step, 12) > lo:
        down += 1
    up = 0
    while up < reach and round(center + (up + 1) * step, 12) <= hi:
        up += 1
    return round(center - down * step, 12), down + up + 1


def refine(
    family: Family,
    seed: ConvexityParams,
    radius: float,
    step: float,
    context: SearchContext,
    spec: Optional[QuadratureSpec] = None,
    workers: Optional[int] = None,
) -> SearchResult:
    """
    Full-grid search of the admissible part of the box seed ± radius.

    The grid passes through the seed, so the result is never worse than
    the seed's own objective.

    Args:
        family: Zeta-function family
        seed: Center of the box
        radius: Half-width of the box, ≥ 0
        step: Grid step, > 0
        context: Family-specific scalars
        spec: Quadrature settings
        workers: Thread count

    Returns:
        SearchResult
    """
    radius = require_finite("radius", radius)
    if radius < 0:
        raise DomainError(f"radius must be ≥ 0, got {radius}", field="radius")
    step = require_positive("step", step)

    c_start, c_count = _axis(seed.c, radius, step, *C_BOX)
    d_start, d_count = _axis(seed.d, radius, step, *D_BOX)
    lattice = LatticeSpec(
        c_start=c_start, d_start=d_start,
        c_step=step, d_step=step,
        count=c_count, d_count=d_count,
        coupling=Coupling.FULL_GRID,
    )
    logger.debug(f"Refining around c={seed.c}, d={seed.d}: {c_count}×{d_count} grid")
    return grid_minimize(family, lattice, context, spec=spec, workers=workers)
