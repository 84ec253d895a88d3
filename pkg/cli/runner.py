"""
Dispatch of a RunConfig to the numerical modules, with exit statuses:
0 success, 2 validation, 3 convergence, 4 certification, 5 report I/O.
"""

import json
import math
import sys
from typing import Dict, Optional, TextIO, Tuple

from pydantic import BaseModel, ValidationError

from cli.emit import emit
from cli.models import (
    BlockRequirementReport,
    BudgetReport,
    Command,
    LatticeChoice,
    RunConfig,
)
from config import settings
from constants import (
    PUBLISHED_CONSTANTS,
    TURING_THRESHOLD,
    ConvexityParams,
    DedekindShape,
    Family,
    GrowthBound,
    TuringConstants,
    block_requirement_coefficients,
    dedekind_budget,
    dedekind_constants,
    dirichlet_budget,
    dirichlet_constants,
    field_log,
    gram_block_requirement,
    zeta_constants,
    zeta_objective,
)
from kernel import QuadratureSpec
from optimize import (
    DedekindContext,
    DirichletContext,
    ZetaContext,
    admissible_box_lattice,
    grid_minimize,
    refine,
    zeta_stage1_lattice,
    zeta_stage2_lattice,
)
from scanner import CertificationReport, certify
from siegel import growth_check
from utils.errors import ParameterError, TuringError
from utils.logging_config import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VALIDATION = 2
EXIT_CERTIFICATION = 4

DEFAULT_T0 = {
    Family.ZETA: TURING_THRESHOLD,
    Family.DIRICHLET: 50.0,
    Family.DEDEKIND: 40.0,
}


def _shape(params: Dict[str, float]) -> DedekindShape:
    degree = int(params["degree"])
    r1 = int(params.get("r1", degree - 2 * int(params.get("r2", 0))))
    r2 = int(params.get("r2", (degree - r1) // 2))
    return DedekindShape(degree=degree, r1=r1, r2=r2, abs_discriminant=params["abs_discriminant"])


def _growth(params: Dict[str, float]) -> GrowthBound:
    if "t0" in params:
        return GrowthBound(K=params.get("K", 2.53), theta=params.get("theta", 0.25), t_min=params["t0"])
    return GrowthBound(K=params.get("K", 2.53), theta=params.get("theta", 0.25))


def _given_constants(family: Family, params: Dict[str, float]) -> TuringConstants:
    return TuringConstants(
        a=params["a"],
        b=params["b"],
        g=params.get("g") if family == Family.DEDEKIND else None,
        family=family,
        t0=params.get("t0", DEFAULT_T0[family]),
    )


def _context(family: Family, params: Dict[str, float]):
    if family == Family.ZETA:
        return ZetaContext(g_p=params["gp"], growth=_growth(params))
    if family == Family.DIRICHLET:
        return DirichletContext(Q=params["Q"], t2=params["t2"], t0=params.get("t0", 50.0))
    return DedekindContext(shape=_shape(params), t2=params["t2"], t0=params.get("t0", 40.0))


def _constants(config: RunConfig, spec: QuadratureSpec) -> TuringConstants:
    params = config.parameters
    p = ConvexityParams.of(params["c"], params["d"])
    if config.family == Family.ZETA:
        return zeta_constants(p, _growth(params), spec)
    if config.family == Family.DIRICHLET:
        return dirichlet_constants(p, params.get("t0", 50.0), spec)
    return dedekind_constants(p, params.get("t0", 40.0), spec)


def _optimize(config: RunConfig, spec: QuadratureSpec, workers: int):
    params = config.parameters
    family = config.family
    context = _context(family, params)
    default = LatticeChoice.STAGE2 if family == Family.ZETA else LatticeChoice.FULL_GRID
    choice = config.lattice or default

    if choice == LatticeChoice.REFINE:
        seed = ConvexityParams.of(params["seed_c"], params["seed_d"])
        return refine(family, seed, params.get("radius", 0.05), params.get("step", 0.01),
                      context, spec=spec, workers=workers)
    if choice == LatticeChoice.STAGE1:
        lattice = zeta_stage1_lattice()
    elif choice == LatticeChoice.STAGE2:
        lattice = zeta_stage2_lattice()
    else:
        lattice = admissible_box_lattice(params.get("step", 0.01))
    return grid_minimize(family, lattice, context, spec=spec, workers=workers)


def _budget(config: RunConfig) -> BudgetReport:
    params = config.parameters
    consts = _given_constants(config.family, params)
    if config.family == Family.ZETA:
        g_p = params["gp"]
        return BudgetReport(
            constants=consts, value=zeta_objective(consts, g_p),
            log_term=math.log(g_p / (2 * math.pi)), g_p=g_p,
        )
    if config.family == Family.DIRICHLET:
        Q, t2 = int(params["Q"]), params["t2"]
        return BudgetReport(
            constants=consts, value=dirichlet_budget(consts, Q, t2),
            log_term=math.log(Q * t2 / (2 * math.pi)), Q=Q, t2=t2,
        )
    shape = _shape(params)
    t2 = params["t2"]
    return BudgetReport(
        constants=consts, value=dedekind_budget(consts, shape, t2),
        log_term=field_log(shape, t2), t2=t2, shape=shape,
    )


def _blocks_required(config: RunConfig) -> BlockRequirementReport:
    params = config.parameters
    consts = _given_constants(Family.ZETA, params)
    g_p = params["gp"]
    quadratic, linear = block_requirement_coefficients(consts)
    return BlockRequirementReport(
        constants=consts,
        g_p=g_p,
        required_blocks=gram_block_requirement(consts, g_p),
        quadratic_coefficient=quadratic,
        linear_coefficient=linear,
    )


def _certify(config: RunConfig) -> CertificationReport:
    params = config.parameters
    if "a" in params or "b" in params:
        if not {"a", "b"} <= set(params):
            raise ParameterError("certify needs both --a and --b, or neither", field="a")
        consts = _given_constants(Family.ZETA, params)
    else:
        consts = PUBLISHED_CONSTANTS["zeta-new"].constants
    return certify(int(params["n"]), int(params["p"]), consts)


def execute(config: RunConfig) -> BaseModel:
    """
    Run one command and return its report.

    Args:
        config: Validated run configuration

    Returns:
        The report model
    """
    spec = settings.quadrature_spec(**config.quadrature.model_dump())
    workers = config.threads or settings.worker_threads
    command = config.command
    logger.info(f"Running {command.value} ({config.family.value})")

    if command == Command.CONSTANTS:
        return _constants(config, spec)
    if command == Command.OPTIMIZE:
        return _optimize(config, spec, workers)
    if command == Command.BUDGET:
        return _budget(config)
    if command == Command.BLOCKS_REQUIRED:
        return _blocks_required(config)
    if command == Command.GROWTH_CHECK:
        params = config.parameters
        return growth_check(params["t_lo"], params["t_hi"], int(params["samples"]), params.get("K", 2.53))
    return _certify(config)


def error_payload(error: Exception) -> Tuple[int, Dict]:
    """Exit status and structured form of an error."""
    if isinstance(error, TuringError):
        return error.exit_code, error.to_dict()
    if isinstance(error, ValidationError):
        return EXIT_VALIDATION, {
            "error": "ValidationError",
            "message": str(error),
            "exit_code": EXIT_VALIDATION,
            "details": [
                {"loc": [str(part) for part in e["loc"]], "msg": e["msg"]}
                for e in error.errors()
            ],
        }
    return EXIT_ERROR, {"error": type(error).__name__, "message": str(error), "exit_code": EXIT_ERROR}


def report_error(error: Exception, stderr: Optional[TextIO] = None) -> int:
    """Write an error as one JSON line to the error stream and return its exit status."""
    code, payload = error_payload(error)
    out = stderr if stderr is not None else sys.stderr
    out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    out.flush()
    return code


def run(config: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Execute a command, emit its report, and return the exit status.

    Args:
        config: Validated run configuration
        stdout: Stream for reports when no output path is set
        stderr: Stream for structured errors

    Returns:
        Process exit status
    """
    digits = config.digits or settings.significant_digits
    try:
        report = execute(config)
        emit(report, config.output_format, config.output_path, digits=digits, stream=stdout)
    except (TuringError, ValidationError) as e:
        logger.debug(f"{config.command.value} failed: {e}")
        return report_error(e, stderr)

    if isinstance(report, CertificationReport) and not report.certified:
        return EXIT_CERTIFICATION
    logger.info(f"{config.command.value} finished")
    return EXIT_OK
