"""
Validation rules of the domain models.
"""

import math

import pytest
from pydantic import ValidationError

from constants.models import (
    TURING_THRESHOLD,
    ConvexityParams,
    DedekindShape,
    Family,
    GrowthBound,
    TuringConstants,
)
from kernel.models import IOfD, QuadratureSpec
from optimize.models import Coupling, LatticeSpec, SearchResult, SearchRow
from scanner.models import CertificationReport, GramBlock
from siegel.models import ZValue
from utils.errors import DomainError


@pytest.mark.parametrize("c, d", [(1.0, 0.75), (1.26, 0.75), (1.1, 0.5), (1.1, 1.01)])
def test_convexity_params_bounds(c, d):
    with pytest.raises(ValidationError):
        ConvexityParams(c=c, d=d)
    with pytest.raises(DomainError):
        ConvexityParams.of(c, d)


def test_convexity_params_closed_ends():
    p = ConvexityParams.of(1.25, 1.0)
    assert (p.c, p.d) == (1.25, 1.0)


def test_convexity_params_frozen():
    p = ConvexityParams(c=1.1, d=0.75)
    with pytest.raises(ValidationError):
        p.c = 1.2


def test_growth_bound_exponent():
    with pytest.raises(ValidationError):
        GrowthBound(K=2.53, theta=0.5)
    assert GrowthBound(K=2.53, theta=0.25).t_min == pytest.approx(128 * math.pi)


def test_turing_constants_g_only_for_dedekind():
    with pytest.raises(ValidationError):
        TuringConstants(a=1.0, b=0.1, family=Family.DEDEKIND, t0=40)
    with pytest.raises(ValidationError):
        TuringConstants(a=1.0, b=0.1, g=0.1, family=Family.ZETA, t0=TURING_THRESHOLD)
    TuringConstants(a=0.26, b=1.84, g=0.105, family=Family.DEDEKIND, t0=40)


def test_turing_constants_positive():
    with pytest.raises(ValidationError):
        TuringConstants(a=-1.0, b=0.1, family=Family.ZETA, t0=TURING_THRESHOLD)


def test_dedekind_shape_signature():
    with pytest.raises(ValidationError):
        DedekindShape(degree=4, r1=1, r2=1, abs_discriminant=1000)
    shape = DedekindShape.totally_complex(4, 1000)
    assert (shape.r1, shape.r2) == (0, 2)


def test_quadrature_spec_rejects_short_series():
    with pytest.raises(ValidationError):
        QuadratureSpec(prime_cutoff=100, tail_tol=1e-9)


def test_quadrature_spec_doubled():
    spec = QuadratureSpec()
    assert spec.doubled().em_terms == 2 * spec.em_terms
    assert QuadratureSpec(em_terms=30).doubled().em_terms == 40


def test_i_of_d_range():
    with pytest.raises(ValidationError):
        IOfD(d=0.5, value=0.0)


def test_lattice_axes():
    stage1 = LatticeSpec(c_start=1.24, d_start=0.99, c_step=-0.02, d_step=-0.02,
                         count=3, coupling=Coupling.STAGE1)
    assert stage1.c_values() == [1.24, 1.22, 1.2]
    assert stage1.d_values() == [0.99, 0.95, 0.91]
    assert stage1.cardinality == 9

    grid = LatticeSpec(c_start=1.1, d_start=0.6, c_step=0.05, d_step=0.1, count=2, d_count=3)
    assert grid.d_values() == [0.6, 0.7, 0.8]
    assert grid.cardinality == 6


def test_search_result_best_is_minimum():
    rows = [
        SearchRow(index=0, c=1.1, d=0.7, a=2.0, b=0.06, objective=3.7),
        SearchRow(index=1, c=1.1, d=0.8, a=2.0, b=0.06, objective=3.6),
    ]
    with pytest.raises(ValidationError):
        SearchResult(family=Family.ZETA, best_params=rows[0].params, best_value=3.7, table=rows)
    result = SearchResult(family=Family.ZETA, best_params=rows[1].params, best_value=3.6, table=rows)
    assert result.best_row.index == 1


def test_gram_block_counts_match_length():
    with pytest.raises(ValidationError):
        GramBlock(start_index=0, length=2, counts=[1], rosser_ok=False)
    block = GramBlock(start_index=5, length=2, counts=[0, 2], rosser_ok=True)
    assert block.end_index == 7
    assert block.total == 2


def test_certified_report_needs_matching_counts():
    consts = TuringConstants(a=2.0666, b=0.0585, family=Family.ZETA, t0=TURING_THRESHOLD)
    fields = dict(n=300, p=310, g_n=560.0, g_p=580.0, blocks_used=5, required_blocks=1,
                  range_count=10, constants_used=consts)
    with pytest.raises(ValidationError):
        CertificationReport(certified=True, lower_count=310, upper_bound=311, exact_count=311, **fields)
    CertificationReport(certified=False, lower_count=310, upper_bound=311, **fields)


def test_z_value_sign():
    assert ZValue(t=20.0, value=0.5, remainder_bound=0.01, order=2).sign == 1
    assert ZValue(t=20.0, value=-0.5, remainder_bound=0.01, order=2).sign == -1
    assert ZValue(t=20.0, value=0.005, remainder_bound=0.01, order=2).sign == 0
