# group.py ---------------------------------------------------
"""Dirichlet characters mod q as exponent vectors.

(Z/qZ)* is split into cyclic components, one per odd prime power p^k
(generated by its least primitive root) and, for 2^k, the component
generated by −1 (k ≥ 2) together with the one generated by 5 (k ≥ 3).
``logs[n, i]`` is the discrete log of n in component i, −1 when
gcd(n, q) > 1. With L the lcm of the component orders, a character with
exponents (a_i) has the exact integer phase

    phase(n) = Σ_i a_i · logs[n, i] · (L / ord_i)  (mod L),

and χ(n) = exp(2πi·phase(n)/L). Floats only appear when values are read.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from threading import RLock
from typing import Dict, Iterator, Optional, Sequence

import numpy as np
from sympy import factorint, is_primitive_root
from sympy.ntheory.modular import crt

from pysmooth.core.errors import CapacityError, DomainError

logger = logging.getLogger(__name__)

MAX_MODULUS = 10**6


@dataclass(frozen=True)
class Component:
    prime: int
    modulus: int  # p^k of the prime-power factor this component lives in
    order: int
    kind: str  # "cyclic" | "minus_one" | "five"
    generator: int  # residue mod q with unit log vector on this component


def least_primitive_root(pk: int) -> int:
    g = 2
    while not is_primitive_root(g, pk):
        g += 1
    return g


def _power_logs(g: int, order: int, pk: int) -> np.ndarray:
    """dlog[r] = e with g^e ≡ r (mod pk), −1 off the powers of g."""
    dlog = np.full(pk, -1, dtype=np.int64)
    r = 1
    for e in range(order):
        dlog[r] = e
        r = r * g % pk
    return dlog


def _lift(residue: int, pk: int, q: int) -> int:
    """n ≡ residue (mod pk), n ≡ 1 (mod q/pk)."""
    rest = q // pk
    if rest == 1:
        return residue % pk
    n, _ = crt([pk, rest], [residue % pk, 1])
    return int(n)


class CharacterGroup:
    """The φ(q) Dirichlet characters mod q."""

    def __init__(self, q: int) -> None:
        if q < 1:
            raise DomainError(f"modulus must be at least 1, got {q}")
        if q > MAX_MODULUS:
            raise CapacityError(f"modulus {q} exceeds ceiling {MAX_MODULUS}")
        self.modulus = q
        self.factorization: Dict[int, int] = {
            int(p): int(k) for p, k in sorted(factorint(q).items())
        }

        n = np.arange(q, dtype=np.int64)
        components: list[Component] = []
        columns: list[np.ndarray] = []
        for p, k in self.factorization.items():
            pk = p**k
            r = n % pk
            if p == 2:
                if k >= 2:
                    odd = r % 2 == 1
                    eps = np.where(odd, (r % 4 == 3).astype(np.int64), -1)
                    components.append(
                        Component(2, pk, 2, "minus_one", _lift(pk - 1, pk, q))
                    )
                    columns.append(eps)
                if k >= 3:
                    order = pk // 4
                    dlog5 = _power_logs(5, order, pk)
                    folded = np.where(r % 4 == 3, (pk - r) % pk, r)
                    col = np.where(r % 2 == 1, dlog5[folded], -1)
                    components.append(Component(2, pk, order, "five", _lift(5, pk, q)))
                    columns.append(col)
                continue
            g = least_primitive_root(pk)
            order = pk // p * (p - 1)
            components.append(Component(p, pk, order, "cyclic", _lift(g, pk, q)))
            columns.append(_power_logs(g, order, pk)[r])

        self.components: tuple[Component, ...] = tuple(components)
        self.orders: tuple[int, ...] = tuple(c.order for c in components)
        self.exponent = reduce(math.lcm, self.orders, 1)
        self.coprime = np.gcd(n, q) == 1
        if columns:
            self.logs = np.stack(columns, axis=1)
        else:
            self.logs = np.zeros((q, 0), dtype=np.int64)
        self.logs.setflags(write=False)
        self.coprime.setflags(write=False)
        self.roots = np.exp(2j * np.pi * np.arange(self.exponent) / self.exponent)
        logger.debug(
            "character group mod %d: components %s", q, [c.order for c in components]
        )

    def __repr__(self) -> str:
        return f"<CharacterGroup mod {self.modulus}>"

    def __len__(self) -> int:
        return math.prod(self.orders)

    @property
    def phi(self) -> int:
        return len(self)

    def character(self, exponents: Sequence[int]) -> "DirichletCharacter":
        exponents = tuple(int(a) for a in exponents)
        if len(exponents) != len(self.orders):
            raise DomainError(
                f"mod {self.modulus} needs {len(self.orders)} exponents, got {len(exponents)}"
            )
        reduced = tuple(a % o for a, o in zip(exponents, self.orders))
        return DirichletCharacter(group=self, exponents=reduced)

    def principal(self) -> "DirichletCharacter":
        return self.character((0,) * len(self.orders))

    def characters(self) -> Iterator["DirichletCharacter"]:
        """Every character, exponent vectors in lexicographic order."""
        for exponents in itertools.product(*(range(o) for o in self.orders)):
            yield DirichletCharacter(group=self, exponents=exponents)

    def primitive_characters(self) -> list["DirichletCharacter"]:
        return [
            chi
            for chi, keep in zip(self.characters(), self.primitive_mask)
            if keep
        ]

    @cached_property
    def conductors(self) -> np.ndarray:
        """Conductor of every character, in ``characters()`` order."""
        return np.array([chi.conductor for chi in self.characters()], dtype=np.int64)

    @cached_property
    def primitive_mask(self) -> np.ndarray:
        return self.conductors == self.modulus

    @cached_property
    def phase_matrix(self) -> np.ndarray:
        """phase_matrix[c, n]: phase of the c-th character at n, −1 off the units."""
        exponents = np.array(
            list(itertools.product(*(range(o) for o in self.orders))), dtype=np.int64
        ).reshape(len(self), len(self.orders))
        weights = exponents * np.array(
            [self.exponent // o for o in self.orders], dtype=np.int64
        )
        phases = (weights @ np.where(self.logs < 0, 0, self.logs).T) % self.exponent
        phases[:, ~self.coprime] = -1
        return phases

    @cached_property
    def value_matrix(self) -> np.ndarray:
        """value_matrix[c, n] = χ_c(n), rows in ``characters()`` order."""
        phases = self.phase_matrix
        return np.where(phases < 0, 0j, self.roots[np.maximum(phases, 0)])


@dataclass(frozen=True)
class DirichletCharacter:
    group: CharacterGroup = field(compare=False, repr=False)
    exponents: tuple[int, ...]
    modulus: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", self.group.modulus)

    def __call__(self, n: int) -> complex:
        return char_value(self, n)

    @cached_property
    def _phases(self) -> np.ndarray:
        g = self.group
        weights = np.array(
            [a * (g.exponent // o) for a, o in zip(self.exponents, g.orders)],
            dtype=np.int64,
        )
        logs = np.where(g.logs < 0, 0, g.logs)
        phases = np.where(g.coprime, (logs @ weights) % g.exponent, -1)
        phases.setflags(write=False)
        return phases

    def phases(self) -> np.ndarray:
        """Exact phase of χ(n) over the group exponent, n = 0..q−1; −1 where χ(n) = 0."""
        return self._phases

    def values(self) -> np.ndarray:
        p = self._phases
        return np.where(p < 0, 0j, self.group.roots[np.maximum(p, 0)])

    @cached_property
    def order(self) -> int:
        return reduce(
            math.lcm,
            (o // math.gcd(a, o) for a, o in zip(self.exponents, self.group.orders)),
            1,
        )

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @property
    def parity(self) -> int:
        """χ(−1) as ±1."""
        return 1 if self._phases[self.modulus - 1] == 0 else -1

    def conj(self) -> "DirichletCharacter":
        return self.group.character([-a for a in self.exponents])

    @cached_property
    def conductor(self) -> int:
        return conductor(self)


def char_value(chi: DirichletCharacter, n: int) -> complex:
    if n < 0:
        raise DomainError(f"character argument must be non-negative, got {n}")
    phase = int(chi.phases()[n % chi.modulus])
    if phase < 0:
        return 0j
    return complex(chi.group.roots[phase])


def conductor(chi: DirichletCharacter) -> int:
    """Least f | q such that χ is trivial on units n ≡ 1 (mod f)."""
    f = 1
    two_eps = 0
    two_five_order = 1
    for comp, a in zip(chi.group.components, chi.exponents):
        d = comp.order // math.gcd(a, comp.order)
        if comp.kind == "cyclic":
            if d > 1:
                v = 0
                while d % comp.prime == 0:
                    d //= comp.prime
                    v += 1
                f *= comp.prime ** (1 + v)
        elif comp.kind == "minus_one":
            two_eps = a
        else:
            two_five_order = d
    if two_five_order > 1:
        f *= 4 * two_five_order
    elif two_eps:
        f *= 4
    return f


class GroupRegistry:
    """Lazy, thread-safe cache of CharacterGroup by modulus."""

    def __init__(self) -> None:
        self._groups: Dict[int, CharacterGroup] = {}
        self._lock = RLock()

    def get(self, q: int) -> CharacterGroup:
        with self._lock:
            group = self._groups.get(q)
            if group is None:
                group = CharacterGroup(q)
                self._groups[q] = group
            return group

    __getitem__ = get

    def __len__(self) -> int:
        return len(self._groups)

    def clear(self) -> None:
        with self._lock:
            self._groups.clear()


default_groups = GroupRegistry()


def character_group(q: int, groups: Optional[GroupRegistry] = None) -> CharacterGroup:
    return (default_groups if groups is None else groups).get(q)


def induced_from(
    chi: DirichletCharacter, groups: Optional[GroupRegistry] = None
) -> DirichletCharacter:
    """The primitive χ* mod cond(χ) with χ(n) = χ*(n)·[gcd(n, q) = 1]."""
    f = chi.conductor
    q = chi.modulus
    if f == q:
        return chi
    target = character_group(f, groups)
    # primes of q that do not divide f must see 1 in the lifted generator
    outside = math.prod(
        p**k for p, k in chi.group.factorization.items() if f % p != 0
    )
    L = chi.group.exponent
    phases = chi.phases()
    exponents = []
    for comp in target.components:
        if outside == 1:
            n = comp.generator
        else:
            n, _ = crt([f, outside], [comp.generator, 1])
            n = int(n)
        # the component generator as a residue mod q has log vector inside q's group
        phase = int(phases[n % q])
        exponent, rem = divmod(phase * comp.order, L)
        if rem:
            raise DomainError(
                f"character mod {q} does not factor through conductor {f}"
            )
        exponents.append(exponent)
    return target.character(exponents)
