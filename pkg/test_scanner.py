"""
Sign scanning, Gram blocks and certification.
"""

import importlib
import math

import mpmath
import numpy as np
import pytest

from constants import PUBLISHED_CONSTANTS, Family, TuringConstants
from scanner import (
    GramBlock,
    ScanPolicy,
    certify,
    classify_blocks,
    count_zeros,
    parity_ok,
    rosser_ok,
    scan,
    scan_interval,
)
from siegel import gram_point, theta, z_values
from utils.errors import (
    CertificationError,
    DomainError,
    FamilyMismatchError,
    IndeterminateSignError,
    RosserViolationError,
    ThresholdError,
)

# the package re-exports functions named after these modules
certify_module = importlib.import_module("scanner.certify")
scan_module = importlib.import_module("scanner.scan")

mpmath.mp.dps = 20

ZETA_NEW = PUBLISHED_CONSTANTS["zeta-new"].constants


def oracle_good(k: int) -> bool:
    return (-1) ** k * float(mpmath.siegelz(mpmath.grampoint(k))) > 0


@pytest.mark.parametrize("counts, parity, rosser", [
    ([1], True, True),
    ([3], True, False),
    ([0, 2], True, True),
    ([2, 0], True, True),
    ([0, 1, 2], True, True),
    ([0, 0], True, False),
    ([1, 1], False, False),
    ([0, 2, 0], False, False),
])
def test_block_rules(counts, parity, rosser):
    assert parity_ok(counts) is parity
    assert rosser_ok(counts) is rosser


def test_first_zeros_bracketed():
    brackets = scan_interval(10.0, 50.0)
    zeros = [float(mpmath.zetazero(k).imag) for k in range(1, 11)]
    assert len(brackets) == len(zeros)
    for bracket, gamma in zip(brackets, zeros):
        assert bracket.t_lo < gamma < bracket.t_hi


def test_count_zeros_below_100():
    assert count_zeros(10.0, 100.0) == 29


def test_scan_includes_nodes_and_ends():
    nodes = [gram_point(k).ordinate for k in range(0, 5)]
    grid = scan(nodes[0], nodes[-1], nodes=nodes)
    assert grid.t[0] == nodes[0] and grid.t[-1] == nodes[-1]
    assert all(np.any(grid.t == x) for x in nodes)
    assert grid.depth >= 1


def test_scan_domain():
    with pytest.raises(DomainError):
        scan(5.0, 50.0)
    with pytest.raises(DomainError):
        scan(50.0, 40.0)
    assert scan(50.0, 50.0).brackets == []


def test_unstable_signs_are_indeterminate(monkeypatch):
    def alternating(t, order=None):
        t = np.asarray(t, dtype=float)
        return np.where(np.arange(t.size) % 2 == 0, 1.0, -1.0), np.zeros_like(t)

    monkeypatch.setattr(scan_module, "z_values", alternating)
    with pytest.raises(IndeterminateSignError) as info:
        scan(100.0, 110.0, ScanPolicy(max_depth=2))
    assert (info.value.t_lo, info.value.t_hi) == (100.0, 110.0)
    assert info.value.exit_code == 3


def test_sample_on_a_zero_is_moved_off_it():
    gamma = float(mpmath.zetazero(10).imag)
    t = np.array([gamma - 0.3, gamma, gamma + 0.3])
    values, bounds = z_values(t, order=2)
    assert abs(values[1]) <= bounds[1]

    moved_t, moved_values, moved_bounds = scan_module.resolve_indeterminate(
        t, values, bounds, 2, np.array([True, False, True])
    )
    assert np.all(np.abs(moved_values) > moved_bounds)
    assert (moved_t[0], moved_t[2]) == (t[0], t[2])
    assert moved_t[0] < moved_t[1] < moved_t[2]
    assert np.sign(moved_values[0]) != np.sign(moved_values[2])


def test_fixed_samples_are_never_moved():
    gamma = float(mpmath.zetazero(10).imag)
    t = np.array([gamma - 0.3, gamma, gamma + 0.3])
    values, bounds = z_values(t, order=2)
    kept_t, kept_values, _ = scan_module.resolve_indeterminate(t, values, bounds, 2, np.ones(3, dtype=bool))
    np.testing.assert_array_equal(kept_t, t)
    np.testing.assert_array_equal(kept_values, values)


@pytest.mark.slow
def test_scan_count_stable_under_extra_refinement():
    lo, hi = gram_point(0).ordinate, gram_point(2000).ordinate
    grid = scan(lo, hi)

    t_fine = scan_module.refine_grid(grid.t)
    values, bounds = z_values(t_fine, order=2)
    fixed = np.zeros(t_fine.size, dtype=bool)
    fixed[[0, -1]] = True
    t_fine, values, bounds = scan_module.resolve_indeterminate(t_fine, values, bounds, 2, fixed)
    assert len(scan_module.sign_brackets(t_fine, values, bounds)) == len(grid.brackets)


def test_low_blocks_match_oracle():
    blocks = classify_blocks(0, 140)

    covered = []
    for block in blocks:
        covered.extend(range(block.start_index, block.end_index))
    assert covered == list(range(0, 140))

    complete = [b for b in blocks if not b.partial]
    assert complete
    for block in complete:
        assert oracle_good(block.start_index)
        assert oracle_good(block.end_index)
        assert not any(oracle_good(k) for k in range(block.start_index + 1, block.end_index))
        assert block.rosser_ok
        assert not block.indeterminate
        assert block.total == block.length

    assert any(b.length > 1 for b in complete)


def test_blocks_from_g0_to_g126_follow_rosser():
    blocks = classify_blocks(0, 126)
    assert not any(b.indeterminate for b in blocks)
    assert [b for b in blocks if not b.partial and not b.rosser_ok] == []


def _complete_run(n_lo: int, n_hi: int):
    complete = [b for b in classify_blocks(n_lo, n_hi) if not b.partial]
    return complete[0].start_index, complete[-1].end_index


def test_certify_rejects_other_families():
    with pytest.raises(FamilyMismatchError):
        certify(300, 310, PUBLISHED_CONSTANTS["rumely"].constants)


def test_certify_rejects_bad_ranges():
    with pytest.raises(DomainError):
        certify(310, 300, ZETA_NEW)
    with pytest.raises(ThresholdError):
        certify(100, 120, ZETA_NEW)


def test_certify_rejects_misaligned_run():
    blocks = classify_blocks(290, 400)
    long_blocks = [b for b in blocks if not b.partial and b.length > 1]
    assert long_blocks
    block = long_blocks[0]
    with pytest.raises(CertificationError):
        certify(block.start_index + 1, block.end_index, ZETA_NEW)


def test_certify_raises_on_rosser_violation(monkeypatch):
    def violating(n, p, policy=None):
        return [GramBlock(start_index=n, length=p - n, counts=[0] * (p - n), rosser_ok=False)]

    monkeypatch.setattr(certify_module, "classify_blocks", violating)
    with pytest.raises(RosserViolationError) as info:
        certify(300, 302, ZETA_NEW)
    assert info.value.exit_code == 4
    assert info.value.to_dict()["block"]["start_index"] == 300


@pytest.mark.slow
def test_certify_end_to_end():
    n, p = _complete_run(700, 735)
    report = certify(n, p, ZETA_NEW)

    assert report.g_n > 168 * math.pi
    assert report.g_p == pytest.approx(1100, abs=60)
    assert report.required_blocks == 1
    assert report.certified
    assert report.exact_count == p + 1
    assert report.exact_count == round(theta(report.g_p) / math.pi + 1)
    assert report.range_count == p - n
    assert report.constants_used == ZETA_NEW

    step = math.pi / (4 * 0.5 * math.log(report.g_p / (2 * math.pi))) / 4
    refined = certify(n, p, ZETA_NEW, policy=ScanPolicy(max_step=step))
    assert refined.certified
    assert refined.exact_count == report.exact_count


@pytest.mark.slow
def test_certification_survives_extending_the_run():
    complete = [b for b in classify_blocks(700, 760) if not b.partial]
    assert len(complete) >= 3
    n = complete[0].start_index
    short = certify(n, complete[len(complete) // 2].end_index, ZETA_NEW)
    extended = certify(n, complete[-1].end_index, ZETA_NEW)

    assert short.certified and extended.certified
    assert extended.blocks_used > short.blocks_used
    assert extended.exact_count - short.exact_count == extended.p - short.p
    assert extended.range_count - short.range_count == extended.p - short.p


@pytest.mark.slow
def test_certify_needs_enough_blocks():
    n, p = _complete_run(300, 330)
    heavy = TuringConstants(a=200.0, b=0.0585, family=Family.ZETA, t0=ZETA_NEW.t0)
    report = certify(n, p, heavy)
    assert not report.certified
    assert report.exact_count is None
    assert report.required_blocks > report.blocks_used
