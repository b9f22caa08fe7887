import math

import numpy as np
import pytest

from pysmooth.characters import (
    CharacterGroup,
    GroupRegistry,
    char_sums,
    char_value,
    induced_from,
    l_smooth,
    l_smooth_grid,
    least_primitive_root,
    mangoldt_char_sum,
    psi_char,
    psi_char_via_primitive,
    rational_distance_sum,
    reconstruct_progression,
    smooth_char_values,
)
from pysmooth.core import CapacityError, DomainError, psi, psi_coprime, psi_progression
from pysmooth.core.split import split_smooth_range
from pysmooth.saddle import solve_alpha, zeta_smooth


def nonprincipal(q, groups):
    return next(chi for chi in groups[q].characters() if not chi.is_principal)


def brute_conductor(chi):
    """Least f | q with χ(n) = 1 for every unit n ≡ 1 (mod f)."""
    q = chi.modulus
    values = chi.values()
    for f in sorted(d for d in range(1, q + 1) if q % d == 0):
        units = [n for n in range(1, q + 1, f) if math.gcd(n, q) == 1]
        if all(abs(values[n % q] - 1) < 1e-9 for n in units):
            return f
    raise AssertionError("q itself always works")


# ---------------- group structure ----------------
@pytest.mark.parametrize("q,phi", [(1, 1), (2, 1), (4, 2), (5, 4), (8, 4), (9, 6), (12, 4), (360, 96)])
def test_group_sizes(groups, q, phi):
    group = groups[q]
    assert len(group) == phi
    assert len(list(group.characters())) == phi
    assert group.value_matrix.shape == (phi, q)


def test_mod_four_values(groups):
    group = groups[4]
    principal, chi = list(group.characters())
    assert principal.is_principal
    assert np.allclose([char_value(chi, n) for n in range(8)], [0, 1, 0, -1] * 2)
    with pytest.raises(DomainError):
        char_value(chi, -1)
    assert chi.parity == -1 and chi.is_real
    assert chi.conductor == 4


def test_mod_eight_components(groups):
    group = groups[8]
    assert [c.kind for c in group.components] == ["minus_one", "five"]
    assert group.orders == (2, 2)
    assert sorted(group.conductors.tolist()) == [1, 4, 8, 8]
    from_four = group.character((1, 0))
    assert from_four.conductor == 4
    assert from_four(3) == pytest.approx(-1) and from_four(5) == pytest.approx(1)


def test_mod_five_conductors(groups):
    assert sorted(groups[5].conductors.tolist()) == [1, 5, 5, 5]
    assert len(groups[5].primitive_characters()) == 3


def test_least_primitive_roots():
    assert least_primitive_root(7) == 3
    assert least_primitive_root(9) == 2
    assert least_primitive_root(41) == 6


def test_group_limits():
    with pytest.raises(DomainError):
        CharacterGroup(0)
    with pytest.raises(CapacityError):
        CharacterGroup(10**6 + 1)


def test_registry_caches_groups():
    registry = GroupRegistry()
    assert registry[12] is registry.get(12)
    assert len(registry) == 1
    registry.clear()
    assert len(registry) == 0


def test_character_orthogonality(groups):
    for q in (7, 15, 16, 24):
        group = groups[q]
        v = group.value_matrix
        gram = v @ v.conj().T
        assert np.allclose(gram, group.phi * np.eye(group.phi))


def test_multiplicativity(groups):
    rng = np.random.default_rng(7)
    for q in (9, 20, 63, 128):
        for chi in list(groups[q].characters())[:6]:
            m = rng.integers(1, 10**6, size=2000)
            n = rng.integers(1, 10**6, size=2000)
            lhs = np.array([chi(int(a * b)) for a, b in zip(m, n)])
            rhs = np.array([chi(int(a)) * chi(int(b)) for a, b in zip(m, n)])
            assert np.allclose(lhs, rhs)


def test_conj_and_order(groups):
    group = groups[13]
    chi = group.character((1,))
    assert chi.order == 12
    product = chi.values() * chi.conj().values()
    assert np.allclose(product, group.coprime.astype(float))


@pytest.mark.parametrize("q", [12, 16, 20, 45, 48, 60, 63, 72])
def test_conductor_and_induction_small(groups, q):
    for chi in groups[q].characters():
        assert chi.conductor == brute_conductor(chi)
        star = induced_from(chi, groups)
        assert star.modulus == chi.conductor
        assert star.conductor == star.modulus
        for n in range(1, 3 * q):
            if math.gcd(n, q) == 1:
                assert star(n) == pytest.approx(chi(n))


@pytest.mark.slow
def test_conductor_and_induction_exhaustive(groups):
    for q in range(1, 201):
        for chi in groups[q].characters():
            assert chi.conductor == brute_conductor(chi)
            star = induced_from(chi, groups)
            units = [n for n in range(1, q) if math.gcd(n, q) == 1]
            assert np.allclose([star(n) for n in units], [chi(n) for n in units])


# ---------------- sums ----------------
def test_psi_char_examples(table, groups):
    chi = nonprincipal(4, groups)
    assert psi_char(20, 3, chi, table) == pytest.approx(1)
    principal = groups[12].principal()
    assert psi_char(1000, 7, principal, table) == pytest.approx(psi_coprime(1000, 7, 12, table))


def test_psi_char_bounded_by_psi(table, groups):
    x, y = 5000, 20
    for q in (7, 11, 16):
        sums = char_sums(x, y, groups[q], table)
        assert (np.abs(sums) <= psi(x, y, table) + 1e-9).all()


def test_reconstruct_progression_examples(table, groups):
    assert reconstruct_progression(20, 3, 4, 1, groups[4], table) == pytest.approx(2)
    assert reconstruct_progression(20, 3, 4, 3, groups[4], table) == pytest.approx(1)
    assert reconstruct_progression(500, 7, 1, 0, groups[1], table) == pytest.approx(psi(500, 7, table))
    with pytest.raises(DomainError):
        reconstruct_progression(20, 3, 4, 2, groups[4], table)
    with pytest.raises(DomainError):
        reconstruct_progression(20, 3, 4, 1, groups[5], table)


@pytest.mark.parametrize("q", [3, 8, 10, 21, 36, 97])
def test_orthogonality_matches_direct_count(table, groups, q):
    x, y = 30_000, 30
    for a in range(q):
        if math.gcd(a, q) != 1:
            continue
        expected = psi_progression(x, y, q, a, table)
        got = reconstruct_progression(x, y, q, a, groups[q], table)
        assert got == pytest.approx(expected, rel=1e-6, abs=1e-6)


def test_l_smooth_examples(table, groups):
    assert l_smooth(1.0, groups[1].principal(), 3, table) == pytest.approx(3.0)
    assert l_smooth(1.0, nonprincipal(4, groups), 3, table) == pytest.approx(0.75)
    assert l_smooth(2.0, groups[1].principal(), 50, table) == pytest.approx(zeta_smooth(2.0, 50, table))
    with pytest.raises(DomainError):
        l_smooth(0.0, groups[4].principal(), 3, table)


def test_l_smooth_grid_agrees_pointwise(table, groups):
    chi = groups[7].character((2,))
    s = 0.6 + 1j * np.linspace(-20, 20, 9)
    grid = l_smooth_grid(s, chi, 100, table)
    for point, value in zip(s, grid):
        assert value == pytest.approx(l_smooth(point, chi, 100, table))


def test_product_bound(table, groups):
    y = 200
    for q in (4, 5, 12, 13):
        principal_value = l_smooth(0.7, groups[q].principal(), y, table).real
        for chi in groups[q].characters():
            for t in (0.0, 1.5, -7.0, 30.0):
                distance = rational_distance_sum(y, chi, 0.7, t, table)
                bound = principal_value * math.exp(-distance)
                assert abs(l_smooth(complex(0.7, t), chi, y, table)) <= bound * (1 + 1e-9)


def test_product_bound_seeded_at_saddle_point(table, groups):
    y = 200
    alpha = solve_alpha(10**5, y, table=table).alpha
    for q in range(1, 51):
        rng = np.random.default_rng(q)
        chars = list(groups[q].characters())
        principal_value = l_smooth(alpha, groups[q].principal(), y, table).real
        for _ in range(100):
            chi = chars[int(rng.integers(len(chars)))]
            t = float(rng.uniform(-100.0, 100.0))
            bound = principal_value * math.exp(-rational_distance_sum(y, chi, alpha, t, table))
            assert abs(l_smooth(complex(alpha, t), chi, y, table)) <= bound * (1 + 1e-9)


def test_mangoldt_examples(table, groups):
    chi = nonprincipal(4, groups)
    assert mangoldt_char_sum(10, chi, 0.0, 0.0, table) == pytest.approx(math.log(5) - math.log(7))
    assert mangoldt_char_sum(1, chi, 0.0, 0.0, table) == 0
    chebyshev = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
    assert mangoldt_char_sum(10, groups[1].principal(), 0.0, 0.0, table) == pytest.approx(chebyshev)
    with pytest.raises(DomainError):
        mangoldt_char_sum(10, chi, 1.0, 0.0, table)


def test_rational_distance_examples(table, groups):
    chi = nonprincipal(4, groups)
    assert rational_distance_sum(3, chi, 1.0, 0.0, table) == pytest.approx(2 / 3)
    assert rational_distance_sum(100, groups[9].principal(), 0.5, 0.0, table) == pytest.approx(0.0)
    for t in (0.0, 2.0, 11.0):
        assert rational_distance_sum(100, groups[11].character((3,)), 0.8, t, table) >= 0


def test_via_primitive_matches_direct(table, groups):
    x, y = 20_000, 13
    for q in (12, 20, 45, 98):
        for chi in groups[q].characters():
            assert psi_char_via_primitive(x, y, chi, table, groups) == pytest.approx(
                psi_char(x, y, chi, table), abs=1e-6
            )


def test_decomposition_bridge(table, groups):
    x, y, thr = 20_000, 30, 40
    for chi in list(groups[7].characters()) + list(groups[12].characters()):
        total = sum(chi(s.m) * chi(s.n) for s in split_smooth_range(x, y, thr, table))
        expected = psi_char(x, y, chi, table) - psi_char(thr, y, chi, table)
        assert total == pytest.approx(expected, abs=1e-6)


def test_smooth_char_values(table, groups):
    chi = nonprincipal(4, groups)
    n, values = smooth_char_values(20, 3, chi, table)
    assert n.tolist() == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]
    assert np.allclose(values, [1, 0, -1, 0, 0, 0, 1, 0, 0, 0])


@pytest.mark.slow
def test_orthogonality_full_grid(table, groups):
    for x in (10**3, 10**4, 10**5):
        for y in (10, 50, 300):
            for q in range(1, 201):
                group = groups[q]
                sums = char_sums(x, y, group, table)
                rebuilt = (group.value_matrix.conj().T @ sums).real / group.phi
                counts = np.bincount(
                    np.arange(1, x + 1)[table.largest[1 : x + 1] <= y] % q, minlength=q
                )
                assert np.allclose(rebuilt[group.coprime], counts[group.coprime], rtol=1e-6)


@pytest.mark.slow
def test_decomposition_bridge_full(table, groups):
    x, y = 10**5, 50
    for threshold in (round(x ** 0.25), round(x ** (1 / 3))):
        splits = split_smooth_range(x, y, threshold, table)
        for q in range(1, 13):
            for chi in groups[q].characters():
                total = sum(chi(s.m) * chi(s.n) for s in splits)
                expected = psi_char(x, y, chi, table) - psi_char(threshold, y, chi, table)
                assert total == pytest.approx(expected, abs=1e-6 * len(splits))
