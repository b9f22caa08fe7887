# large_sieve.py ---------------------------------------------
"""The multiplicative large sieve

    Σ_{q≤Q} (q/φ(q)) Σ*_{χ mod q} |Σ_n a_n χ(n)|² ≤ (N + 3Q²) Σ |a_n|²,

Σ* running over primitive characters; the trivial character mod 1 counts as
primitive.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from pysmooth.characters.group import GroupRegistry, default_groups
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable

from .windows import CoefficientWindow, adversarial_windows, random_window

logger = logging.getLogger(__name__)

METHODS = ("folded", "direct")
# relative slack for rounding when comparing lhs and rhs
RTOL = 1e-12


class SieveCheck(NamedTuple):
    lhs: float
    rhs: float
    ok: bool


@dataclass(frozen=True)
class TrialSummary:
    passed: bool
    trials: int
    max_ratio: Optional[float]
    failures: tuple[str, ...] = ()


def _modulus_term(q: int, w: CoefficientWindow, groups: GroupRegistry, method: str) -> float:
    group = groups.get(q)
    mask = group.primitive_mask
    if not mask.any():
        return 0.0
    values = group.value_matrix[mask]
    residues = w.indices % q
    if method == "folded":
        folded = np.bincount(residues, weights=w.values.real, minlength=q) + 1j * np.bincount(
            residues, weights=w.values.imag, minlength=q
        )
        sums = values @ folded
    else:
        sums = values[:, residues] @ w.values
    return q / group.phi * float(np.sum(np.abs(sums) ** 2))


def large_sieve_lhs(
    Q: int,
    w: CoefficientWindow,
    groups: Optional[GroupRegistry] = None,
    *,
    method: str = "folded",
    threads: int = 1,
) -> float:
    if Q < 1:
        raise DomainError(f"Q must be at least 1, got {Q}")
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}, expected one of {METHODS}")
    groups = default_groups if groups is None else groups

    def term(q: int) -> float:
        return _modulus_term(q, w, groups, method)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            terms = list(pool.map(term, range(1, Q + 1)))
    else:
        terms = [term(q) for q in range(1, Q + 1)]
    return float(sum(terms))


def large_sieve_rhs(Q: int, w: CoefficientWindow) -> float:
    return (w.N + 3 * Q * Q) * w.norm2


def large_sieve_check(
    Q: int,
    w: CoefficientWindow,
    groups: Optional[GroupRegistry] = None,
    *,
    threads: int = 1,
) -> SieveCheck:
    lhs = large_sieve_lhs(Q, w, groups, threads=threads)
    rhs = large_sieve_rhs(Q, w)
    return SieveCheck(lhs=lhs, rhs=rhs, ok=lhs <= rhs * (1 + RTOL))


def large_sieve_trials(
    trials: int,
    Q_max: int,
    N_max: int,
    seed: int,
    groups: Optional[GroupRegistry] = None,
    *,
    table: Optional[FactorTable] = None,
    adversarial: bool = True,
    threads: int = 1,
    on_progress: Optional[Callable[[int, int], None]] = None,
) -> TrialSummary:
    """Seeded random windows, then the adversarial catalog at (Q_max, N_max)."""
    if trials < 0:
        raise DomainError(f"trial count must be non-negative, got {trials}")
    if trials == 0:
        return TrialSummary(passed=True, trials=0, max_ratio=None)
    if Q_max < 1 or N_max < 1:
        raise DomainError(f"need Q_max ≥ 1 and N_max ≥ 1, got {Q_max}, {N_max}")

    rng = np.random.default_rng(seed)
    cases: list[tuple[str, int, CoefficientWindow]] = []
    for k in range(trials):
        Q = int(rng.integers(1, Q_max + 1))
        cases.append((f"random[{k}]", Q, random_window(rng, N_max)))
    if adversarial:
        for name, w in adversarial_windows(Q_max, N_max, groups, table):
            cases.append((name, Q_max, w))

    max_ratio: Optional[float] = None
    failures = []
    for done, (name, Q, w) in enumerate(cases, start=1):
        check = large_sieve_check(Q, w, groups, threads=threads)
        if check.rhs > 0:
            ratio = check.lhs / check.rhs
            max_ratio = ratio if max_ratio is None else max(max_ratio, ratio)
        if not check.ok:
            logger.error("large sieve violated by %s: %r > %r", name, check.lhs, check.rhs)
            failures.append(name)
        if on_progress is not None:
            on_progress(done, len(cases))
    return TrialSummary(
        passed=not failures,
        trials=len(cases),
        max_ratio=max_ratio,
        failures=tuple(failures),
    )
