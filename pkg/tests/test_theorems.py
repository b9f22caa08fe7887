import math

import numpy as np
import pytest

from pysmooth.core import DomainError, psi
from pysmooth.theorems import (
    C_MAX,
    TheoremInstance,
    bdh_char_form,
    bdh_lhs,
    bdh_rhs_shape,
    bv_char_form,
    bv_lhs,
    bv_rhs_shape,
    char_form_by_bucket,
    decay,
    fit_constant,
    fit_history,
    fit_log_power,
    large_conductor_lhs,
    large_conductor_shape,
    modulus_terms,
    prime_char_forms,
    theorem_instance,
    theorem_instances,
)


def instance(which="bv", lhs=0.0, x=10**4, y=30, Q=10, psi_val=500):
    return TheoremInstance(
        which=which, x=x, y=y, Q=Q, psi_val=psi_val, lhs=lhs, char_form=lhs
    )


# ---------------- left-hand sides ----------------
def test_q_one_is_zero(table, groups):
    assert bv_lhs(1000, 7, 1, groups, table) == 0
    assert bdh_lhs(1000, 7, 1, groups, table) == 0
    assert bv_char_form(1000, 7, 1, groups, table) == 0
    assert bdh_char_form(1000, 7, 1, groups, table) == 0


def test_small_example_terms(table, groups):
    terms = modulus_terms(20, 3, 4, table, groups)
    four = terms[3]
    assert four.q == 4 and four.psi_q == 3
    assert four.max_error == pytest.approx(0.5)
    assert four.square_error == pytest.approx(0.5)
    # q = 3 sees the powers of two: residues 1 and 2 hold 3 and 2 of them
    assert terms[2].max_error == pytest.approx(0.5)
    assert bv_lhs(20, 3, 4, groups, table) == pytest.approx(1.0)
    assert bdh_lhs(20, 3, 4, groups, table) == pytest.approx(1.0)
    # |Ψ(20,3;χ)| = 1 for the nonprincipal χ mod 3 and mod 4, each weighted by 1/2
    assert bv_char_form(20, 3, 4, groups, table) == pytest.approx(1.0)


@pytest.mark.parametrize("x,y,Q", [(5000, 10, 12), (20_000, 30, 25), (50_000, 100, 40)])
def test_bridges(table, groups, x, y, Q):
    bdh = bdh_lhs(x, y, Q, groups, table)
    assert bdh == pytest.approx(bdh_char_form(x, y, Q, groups, table), rel=1e-6)
    assert bv_lhs(x, y, Q, groups, table) <= bv_char_form(x, y, Q, groups, table) * (1 + 1e-12)


def test_trivial_bound(table, groups):
    x, y, Q = 20_000, 20, 30
    terms = modulus_terms(x, y, Q, table, groups)
    assert bv_lhs(x, y, Q, groups, table) <= sum(2 * t.psi_q for t in terms)


def test_threads_give_same_result(table, groups):
    serial = bv_lhs(20_000, 30, 30, groups, table)
    assert bv_lhs(20_000, 30, 30, groups, table, threads=4) == serial


def test_bucketed_form_sums_to_total(table, groups):
    x, y, Q, eta = 50_000, 100, 40, 0.25
    parts = char_form_by_bucket(x, y, Q, eta, groups, table)
    assert sum(parts) == pytest.approx(bv_char_form(x, y, Q, groups, table))
    assert all(p >= 0 for p in parts)


def test_large_conductor_lhs(table, groups):
    x, y, Q, eta = 50_000, 100, 40, 0.25
    cutoff = x**eta
    expected = 0.0
    for t in modulus_terms(x, y, Q, table, groups):
        if t.q >= cutoff:
            expected += np.sum(np.abs(t.sums[t.conductors >= cutoff])) / t.phi
    got = large_conductor_lhs(x, y, Q, eta, groups, table)
    assert got == pytest.approx(expected)
    assert got <= bv_char_form(x, y, Q, groups, table)
    assert large_conductor_lhs(x, y, 10, eta, groups, table) == 0


def test_prime_char_forms_bridge(table, groups):
    x, Q = 5000, 15
    n = np.arange(2, x + 1)
    powers = n[table.largest[2 : x + 1] == table.smallest[2 : x + 1]]
    lam = np.log(table.smallest[powers].astype(float))
    expected = 0.0
    for q in range(1, Q + 1):
        group = groups[q]
        folded = np.bincount(powers % q, weights=lam, minlength=q)[group.coprime]
        expected += np.sum((folded - folded.sum() / group.phi) ** 2)
    first, second = prime_char_forms(x, Q, groups, table)
    assert second == pytest.approx(expected, rel=1e-6)
    assert first > 0


# ---------------- shapes ----------------
def test_shape_limits():
    x, y, Q, p = 10**6, 100, 100, 5000.0
    logx = math.log(x)
    assert bv_rhs_shape(x, y, Q, 0.0, p) == pytest.approx(2 * p + math.sqrt(p) * Q * logx**3.5)
    assert bdh_rhs_shape(x, y, Q, 0.0, p) == pytest.approx(2 * p**2 + p * Q)
    assert decay(x, x, 1.0) == pytest.approx(math.exp(-1 / math.log(2) ** 2) + 1 / x)
    assert decay(x, y, 1.0, A=2) < decay(x, y, 1.0)
    assert bv_rhs_shape(x, y, Q, 0.5, p) > bv_rhs_shape(x, y, Q, 1.5, p)
    with pytest.raises(DomainError):
        decay(x, y, -1.0)


def test_shape_grid_point():
    x, y, Q, c, p = 10**6, 100, 100, 0.1, 12_345.0
    u = math.log(x) / math.log(y)
    first = math.exp(-c * u / math.log(u + 1) ** 2) + y ** (-c)
    assert bv_rhs_shape(x, y, Q, c, p) == pytest.approx(
        p * first + math.sqrt(p) * Q * math.log(x) ** 3.5
    )
    assert bdh_rhs_shape(x, y, Q, c, p) == pytest.approx(p**2 * first + p * Q)


def test_large_conductor_shape():
    x, Q, eta, p = 10**5, 40, 0.25, 900.0
    logx = math.log(x)
    expected = logx**3.5 * 30.0 * (Q + x**0.25 * logx**2)
    assert large_conductor_shape(x, Q, eta, p) == pytest.approx(expected)


# ---------------- instances and fits ----------------
def test_theorem_instances(table, groups):
    both = theorem_instances(20_000, 30, 20, groups, table)
    assert set(both) == {"bv", "bdh"}
    assert both["bv"].psi_val == psi(20_000, 30, table)
    assert both["bdh"].lhs == pytest.approx(both["bdh"].char_form, rel=1e-6)
    assert both["bv"].lhs <= both["bv"].char_form
    single = theorem_instance(20_000, 30, 20, "bdh", groups, table)
    assert single == both["bdh"]
    with pytest.raises(DomainError):
        theorem_instance(20_000, 30, 20, "gpy", groups, table)


def test_instance_flags():
    inst = instance(x=10**4, y=30, Q=40, psi_val=900)
    assert inst.below_K_range(2.0)  # log² 10^4 ≈ 84.8
    assert not inst.below_K_range(1.0)
    assert inst.q_out_of_range  # 40 > √900
    assert not instance("bdh", Q=40, psi_val=900).q_out_of_range
    assert inst.with_fit(0.3).fitted_c == 0.3


def test_fit_caps_at_two():
    assert fit_constant([instance(lhs=0.0)], "bv") == C_MAX
    small = instance(lhs=1.0)
    assert fit_constant([small], "bv") == C_MAX


def test_fit_finds_boundary():
    target = instance(lhs=0.0)
    # lhs equal to the shape at c = 0.7 makes 0.7 the largest feasible constant
    lhs = target.rhs_shape(0.7)
    fitted = fit_constant([instance(lhs=lhs)], "bv")
    assert fitted == pytest.approx(0.7, abs=2e-4)
    assert instance(lhs=lhs).rhs_shape(fitted) >= lhs


def test_fit_zero_when_shape_fails():
    huge = instance(lhs=1e30)
    assert fit_constant([huge], "bv") == 0.0


def test_fit_errors():
    with pytest.raises(DomainError):
        fit_constant([], "bv")
    with pytest.raises(DomainError):
        fit_constant([instance()], "bdh")
    with pytest.raises(DomainError):
        fit_constant([instance()], "xyz")


def test_fit_history_non_increasing():
    base = instance()
    lhs_values = [base.rhs_shape(c) for c in (1.9, 1.2, 1.5, 0.4, 0.8)]
    history = fit_history([instance(lhs=v) for v in lhs_values], "bv")
    assert len(history) == 5
    assert all(a >= b for a, b in zip(history, history[1:]))
    assert history[-1] == pytest.approx(0.4, abs=2e-4)


def test_fit_log_power():
    base = instance()
    lhs = base.rhs_shape(0.5)
    fits = fit_log_power([instance(lhs=lhs)], "bv")
    assert set(fits) == {0.0, 1.0, 2.0}
    assert fits[0.0] == pytest.approx(0.5, abs=2e-4)
    assert fits[2.0] <= fits[1.0] <= fits[0.0]


@pytest.mark.slow
def test_bridges_full_grid(table, groups):
    for x in (10**3, 10**4, 10**5):
        for y in (10, 50, 300):
            bdh = bdh_lhs(x, y, 200, groups, table)
            assert bdh == pytest.approx(bdh_char_form(x, y, 200, groups, table), rel=1e-6)
            bv = bv_lhs(x, y, 200, groups, table)
            assert bv <= bv_char_form(x, y, 200, groups, table) * (1 + 1e-9)
