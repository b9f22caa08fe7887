# instances.py -----------------------------------------------
import math
from dataclasses import dataclass, replace
from typing import Optional

from pysmooth.characters.group import GroupRegistry
from pysmooth.core.errors import DomainError
from pysmooth.core.factor_table import FactorTable

from .lhs import char_form, modulus_terms
from .shapes import SHAPES

WHICH = ("bv", "bdh")


@dataclass(frozen=True)
class TheoremInstance:
    """One grid point of the BV (max over a) or BDH (sum of squares) comparison."""

    which: str
    x: int
    y: int
    Q: int
    psi_val: int
    lhs: float
    char_form: float
    fitted_c: Optional[float] = None

    @property
    def u(self) -> float:
        return math.log(self.x) / math.log(self.y)

    def rhs_shape(self, c: float, A: float = 0.0) -> float:
        return SHAPES[self.which](self.x, self.y, self.Q, c, self.psi_val, A)

    def below_K_range(self, K: float) -> bool:
        """True when y < log^K x."""
        return self.y < math.log(self.x) ** K

    @property
    def q_out_of_range(self) -> bool:
        limit = math.sqrt(self.psi_val) if self.which == "bv" else self.psi_val
        return self.Q > limit

    def with_fit(self, c: float) -> "TheoremInstance":
        return replace(self, fitted_c=c)


def check_which(which: str) -> str:
    if which not in WHICH:
        raise DomainError(f"unknown theorem {which!r}, expected one of {WHICH}")
    return which


def theorem_instances(
    x: int,
    y: int,
    Q: int,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> dict[str, TheoremInstance]:
    """Both instances at one grid point, sharing a single residue fold."""
    if x < 2 or y < 2:
        raise DomainError(f"instances need x, y ≥ 2; got ({x}, {y})")
    terms = modulus_terms(x, y, Q, table, groups, threads=threads)
    psi_val = terms[0].psi_q
    return {
        "bv": TheoremInstance(
            which="bv",
            x=x,
            y=y,
            Q=Q,
            psi_val=psi_val,
            lhs=float(sum(t.max_error for t in terms)),
            char_form=char_form(terms, 1),
        ),
        "bdh": TheoremInstance(
            which="bdh",
            x=x,
            y=y,
            Q=Q,
            psi_val=psi_val,
            lhs=float(sum(t.square_error for t in terms)),
            char_form=char_form(terms, 2),
        ),
    }


def theorem_instance(
    x: int,
    y: int,
    Q: int,
    which: str,
    groups: Optional[GroupRegistry],
    table: FactorTable,
    *,
    threads: int = 1,
) -> TheoremInstance:
    return theorem_instances(x, y, Q, groups, table, threads=threads)[check_which(which)]
