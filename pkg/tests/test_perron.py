import math

import numpy as np
import pytest

from pysmooth.characters import psi_char
from pysmooth.core import DomainError, psi
from pysmooth.perron import (
    ContourSpec,
    indicator_bound,
    perron_indicator,
    perron_indicator_many,
    perron_psi_char,
    perron_sweep,
    power_of_two_at_least,
    separation_check,
    simpson_refined,
    split_heads,
    truncation_budget,
)


# ---------------- quadrature ----------------
def test_power_of_two():
    assert power_of_two_at_least(3) == 16
    assert power_of_two_at_least(100) == 128
    assert power_of_two_at_least(128) == 128
    assert power_of_two_at_least(5, floor=64) == 64


def test_simpson_refined_on_smooth_integrand():
    t = np.linspace(0, math.pi, 257)
    value, err = simpson_refined(np.sin(t), t)
    assert value == pytest.approx(2.0, abs=1e-7)
    assert err < 1e-5
    complex_value, _ = simpson_refined(np.exp(1j * t), t)
    assert complex_value == pytest.approx(2j, abs=1e-7)
    with pytest.raises(DomainError):
        simpson_refined(np.ones(11), np.linspace(0, 1, 11))


def test_simpson_error_shrinks_with_spacing():
    errs = []
    for points in (65, 129, 257):
        t = np.linspace(0, math.pi, points)
        _, err = simpson_refined(np.exp(t) * np.sin(3 * t), t)
        errs.append(float(err))
    assert errs[0] >= 2 * errs[1] >= 4 * errs[2] > 0


# ---------------- indicator ----------------
def test_indicator_below_threshold():
    result = perron_indicator(6, 10.5, 100)
    assert result.exact == 1
    assert result.bound == pytest.approx(0.0311, abs=1e-4)
    assert result.within_bound
    assert result.approx == pytest.approx(1, abs=0.05)


def test_indicator_above_threshold():
    result = perron_indicator(20, 10.5, 100)
    assert result.exact == 0
    assert result.within_bound
    assert result.approx == pytest.approx(0, abs=0.05)


def test_indicator_bound_halves_with_t():
    w = np.array([0.3, 1.75, 40.0])
    assert np.allclose(indicator_bound(w, 200), indicator_bound(w, 100) / 2, rtol=1e-14)


def test_indicator_many_respects_bounds():
    ratios = np.array([0.05, 0.5, 0.9, 1.1, 2.0, 30.0])
    approx, bound, quad = perron_indicator_many(ratios, 60)
    exact = (ratios > 1).astype(float)
    assert (np.abs(approx - exact) <= bound + quad).all()


def test_indicator_seeded_triples():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        v = float(rng.uniform(0.5, 200.0))
        threshold = int(rng.integers(1, 200)) + 0.5
        T = 2.0 ** int(rng.integers(2, 9))
        result = perron_indicator(v, threshold, T)
        assert result.exact == int(v < threshold)
        assert result.within_bound, (v, threshold, T)


def test_indicator_quadrature_converges():
    errs = [perron_indicator(6, 10.5, 100, nodes=n).quadrature_err for n in (512, 1024, 2048)]
    assert errs[0] >= 2 * errs[1] >= 4 * errs[2]


def test_indicator_errors():
    with pytest.raises(DomainError):
        perron_indicator(10.5, 10.5, 100)
    with pytest.raises(DomainError):
        perron_indicator(0, 10.5, 100)
    with pytest.raises(DomainError):
        perron_indicator(6, 10.5, 1)


# ---------------- contour ----------------
def test_contour_spec_validation():
    with pytest.raises(DomainError):
        ContourSpec(abscissa=0.0, height=10, nodes=64)
    with pytest.raises(DomainError):
        ContourSpec(abscissa=0.5, height=10, nodes=30)
    contour = ContourSpec(abscissa=0.5, height=10, nodes=64)
    grid = contour.grid()
    assert grid.size == 65 and grid[0] == -5 and grid[-1] == 5


def test_contour_nodes_scale_with_height(table):
    low = ContourSpec.for_height(20, 10**4, 30, table=table)
    high = ContourSpec.for_height(80, 10**4, 30, table=table)
    assert high.nodes >= 4 * 80 * (math.log(10**4) + math.log(30))
    assert high.nodes > low.nodes
    assert low.abscissa == high.abscissa


@pytest.mark.parametrize("q", [3, 4, 5])
def test_perron_reconstruction_within_budget(table, groups, q):
    x, y = 10**4, 30
    for chi in groups[q].characters():
        for point in perron_sweep(x, y, chi, (2**6, 2**8, 2**10), table):
            assert point.exact == pytest.approx(psi_char(x, y, chi, table))
            assert point.within_budget


def test_perron_single_contour(table, groups):
    x, y = 5000, 20
    chi = groups[1].principal()
    contour = ContourSpec.for_height(200, x, y, table=table)
    result = perron_psi_char(x, y, chi, contour, table)
    budget = truncation_budget(x, y, chi, 200, table)
    assert abs(result.approx - psi(x, y, table)) <= budget.total
    assert result.quadrature_err < budget.total


def test_truncation_budget_parts(table, groups):
    chi = groups[4].principal()
    budget = truncation_budget(10**4, 30, chi, 100, table, K=2.0)
    assert budget.total == pytest.approx(2.0 * (1 + budget.contour_term + budget.window_count))
    assert budget.psi_scaled == psi(1000, 30, table)
    assert budget.window_count >= 0
    with pytest.raises(DomainError):
        truncation_budget(10**4, 30, chi, 0, table)


# ---------------- separation ----------------
def test_split_heads(table):
    heads = split_heads(100, 5, 10, table)
    assert 12 in heads and 15 in heads
    assert 16 in heads  # 16/2 = 8 ≤ 10
    assert 25 in heads  # 25/5 = 5 ≤ 10
    assert 24 not in heads  # 24/2 = 12 > 10
    assert (heads > 10).all()


@pytest.mark.parametrize("q", [1, 4, 5, 8])
def test_separation_within_accumulated_bound(table, groups, q):
    x, y, threshold = 600, 30, 20
    for chi in groups[q].characters():
        result = separation_check(x, y, threshold, chi, 40, table)
        assert result.exact == pytest.approx(
            psi_char(x, y, chi, table) - psi_char(threshold, y, chi, table)
        )
        assert result.pairs > 0
        assert result.holds


def test_separation_tightens_with_t(table, groups):
    chi = groups[5].character((1,))
    coarse = separation_check(400, 20, 15, chi, 20, table)
    fine = separation_check(400, 20, 15, chi, 80, table)
    assert fine.accumulated_bound < coarse.accumulated_bound


def test_separation_threshold_range(table, groups):
    chi = groups[4].principal()
    with pytest.raises(DomainError):
        separation_check(100, 10, 100, chi, 20, table)
    with pytest.raises(DomainError):
        separation_check(100, 10, 0, chi, 20, table)


def test_contour_quadrature_converges(table, groups):
    x, y = 10**4, 30
    chi = groups[5].character((1,))
    base = ContourSpec.for_height(64, x, y, table=table)
    errs = [
        perron_psi_char(
            x, y, chi, ContourSpec(base.abscissa, base.height, base.nodes * k), table
        ).quadrature_err
        for k in (1, 2, 4)
    ]
    assert errs[0] >= 2 * errs[1] >= 4 * errs[2]


def test_perron_error_does_not_decay_at_smooth_x(table, groups):
    # x = 2^4·5^4 is itself 30-smooth and sits 1/2 below x̃, so its weight only
    # settles once H is far beyond 1/log(x̃/x) ≈ 2·10^4
    x, y = 10**4, 30
    heights = [2.0**k for k in range(5, 13)]
    sweep = perron_sweep(x, y, groups[1].principal(), heights, table)
    assert all(point.within_budget for point in sweep)
    errors = np.array([point.error for point in sweep])
    slope = np.polyfit(np.log(heights), np.log(errors), 1)[0]
    assert slope > -0.25
    assert errors.min() > 0.05
