"""
θ, Z(t), Gram points and the growth check against mpmath.
"""

import math

import mpmath
import numpy as np
import pytest

from siegel import (
    ZMethod,
    gram_point,
    gram_points,
    growth_check,
    theta,
    theta_deriv,
    z_function,
    z_values,
)
from utils.errors import DomainError

mpmath.mp.dps = 25


@pytest.mark.parametrize("t", [10.0, 17.8, 50.0, 527.8, 1e4, 1e8])
def test_theta_matches_oracle(t):
    assert theta(t) == pytest.approx(float(mpmath.siegeltheta(t)), rel=1e-13, abs=1e-9)
    assert theta_deriv(t) == pytest.approx(float(mpmath.siegeltheta(t, derivative=1)), abs=1e-9)


def test_theta_domain():
    with pytest.raises(DomainError):
        theta(0.5)


@pytest.mark.parametrize("t", [5.0, 9.0, 14.0, 21.0, 29.9])
def test_low_heights_use_euler_maclaurin(t):
    z = z_function(t)
    assert z.method == ZMethod.EULER_MACLAURIN
    assert abs(z.value - float(mpmath.siegelz(t))) <= z.remainder_bound + 1e-12


def test_riemann_siegel_within_bound():
    ts = np.linspace(30.0, 2000.0, 400)
    values, bounds = z_values(ts, order=2)
    oracle = np.array([float(mpmath.siegelz(t)) for t in ts])
    assert np.all(np.abs(values - oracle) <= bounds)


@pytest.mark.parametrize("order", [0, 1, 2])
def test_lower_orders_within_bound(order):
    ts = np.linspace(100.0, 400.0, 60)
    values, bounds = z_values(ts, order=order)
    oracle = np.array([float(mpmath.siegelz(t)) for t in ts])
    assert np.all(np.abs(values - oracle) <= bounds)


def test_bounds_shrink_with_order():
    _, b0 = z_values([500.0], order=0)
    _, b2 = z_values([500.0], order=2)
    assert b2[0] < b0[0]


def test_sign_change_at_first_zero():
    assert z_function(14.0).sign * z_function(14.3).sign == -1


def test_z_values_shape_and_domain():
    ts = np.linspace(100.0, 105.0, 6).reshape(2, 3)
    values, bounds = z_values(ts)
    assert values.shape == bounds.shape == (2, 3)
    flat_values, flat_bounds = z_values(ts.ravel())
    np.testing.assert_allclose(values.ravel(), flat_values, rtol=1e-14)
    np.testing.assert_allclose(bounds.ravel(), flat_bounds, rtol=1e-14)
    with pytest.raises(DomainError):
        z_values([4.0, 100.0])
    with pytest.raises(DomainError):
        z_values([100.0], order=3)


@pytest.mark.parametrize("n", [0, 1, 2, 10, 126, 1000, 10 ** 4])
def test_gram_points_match_oracle(n):
    g = gram_point(n)
    assert g.index == n
    assert g.residual < 1e-9
    assert g.ordinate == pytest.approx(float(mpmath.grampoint(n)), rel=1e-12)


def test_gram_point_minus_one():
    g = gram_point(-1)
    assert 9.0 < g.ordinate < gram_point(0).ordinate
    assert abs(theta(g.ordinate) + math.pi) < 1e-9


def test_gram_point_domain():
    with pytest.raises(DomainError):
        gram_point(-2)
    with pytest.raises(DomainError):
        gram_point(1.5)


def test_gram_points_increasing():
    ordinates = [g.ordinate for g in gram_points(0, 50)]
    assert all(a < b for a, b in zip(ordinates, ordinates[1:]))


@pytest.mark.parametrize("n", [10, 100, 1000, 10 ** 4])
def test_gram_spacing_follows_theta_deriv(n):
    g = gram_point(n).ordinate
    gap = gram_point(n + 1).ordinate - g
    assert gap == pytest.approx(math.pi / theta_deriv(g), rel=0.05)


def test_growth_check_small():
    report = growth_check(5.0, 500.0, 2000)
    assert report.passed
    assert report.samples == 2000
    assert 5.0 <= report.argmax <= 500.0
    assert report.max_ratio <= 2.53


def test_growth_check_fails_tight_bound():
    assert not growth_check(5.0, 500.0, 500, bound=0.1).passed


@pytest.mark.parametrize("args", [(4.0, 100.0, 10), (100.0, 50.0, 10), (10.0, 100.0, 1)])
def test_growth_check_domain(args):
    with pytest.raises(DomainError):
        growth_check(*args)


@pytest.mark.slow
def test_growth_check_full_range():
    report = growth_check(5.0, 5000.0, 100_000)
    assert report.passed
    assert report.max_ratio <= 2.53
