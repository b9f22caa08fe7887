# config.py --------------------------------------------------
"""Environment defaults and experiment config files.

Config files are flat ``key=value`` text (comments with ``#``); list
values are comma-separated::

    x_grid=100000,1000000
    y_grid=30,100
    Q_grid=50
    eta=0.25
    seed=7
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import dotenv

from pysmooth.core.errors import CapacityError, DomainError
from pysmooth.core.factor_table import MAX_TABLE_LIMIT

DEFAULT_LIMIT = 10**6
FORMATS = ("csv", "json")
KNOWN_KEYS = {
    "x_grid",
    "y_grid",
    "Q_grid",
    "eta",
    "c_candidates",
    "seed",
    "output",
    "format",
    "K",
    "which",
    "trials",
    "n_max",
}


@dataclass(frozen=True)
class EnvDefaults:
    limit: int = DEFAULT_LIMIT
    table_cache: Optional[Path] = None
    threads: int = 1


def load_env_defaults() -> EnvDefaults:
    """PYSMOOTH_LIMIT, PYSMOOTH_TABLE_CACHE and PYSMOOTH_THREADS, after ``.env``."""
    dotenv.load_dotenv()
    cache = os.getenv("PYSMOOTH_TABLE_CACHE")
    try:
        return EnvDefaults(
            limit=int(os.getenv("PYSMOOTH_LIMIT", DEFAULT_LIMIT)),
            table_cache=Path(cache) if cache else None,
            threads=int(os.getenv("PYSMOOTH_THREADS", 1)),
        )
    except ValueError as exc:
        raise DomainError(f"bad PYSMOOTH_* environment value: {exc}") from exc


@dataclass(frozen=True)
class ExperimentConfig:
    x_grid: tuple[int, ...]
    y_grid: tuple[int, ...]
    Q_grid: tuple[int, ...]
    eta: float = 0.25
    c_candidates: tuple[float, ...] = (0.1, 0.5, 1.0)
    seed: int = 0
    output: Optional[Path] = None
    format: str = "json"
    K: float = 1.0
    which: tuple[str, ...] = ("bv", "bdh")
    trials: int = 0
    n_max: int = 1000
    limit: int = field(default=DEFAULT_LIMIT, compare=False)

    def __post_init__(self) -> None:
        for name in ("x_grid", "y_grid", "Q_grid"):
            values = getattr(self, name)
            if not values:
                raise DomainError(f"{name} must not be empty")
            if min(values) < 1:
                raise DomainError(f"{name} entries must be positive, got {values}")
        if min(self.x_grid) < 3:
            raise DomainError(f"x_grid entries must be at least 3, got {self.x_grid}")
        if min(self.y_grid) < 2:
            raise DomainError(f"y_grid entries must be at least 2, got {self.y_grid}")
        if max(self.x_grid) > min(self.limit, MAX_TABLE_LIMIT):
            raise CapacityError(
                f"max x {max(self.x_grid)} exceeds table ceiling {min(self.limit, MAX_TABLE_LIMIT)}"
            )
        if not 0 < self.eta < 1:
            raise DomainError(f"eta must lie in (0, 1), got {self.eta}")
        if self.format not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.format!r}")
        if not self.which:
            raise DomainError("which must name at least one of bv, bdh")
        for which in self.which:
            if which not in ("bv", "bdh"):
                raise DomainError(f"unknown theorem {which!r} in which")
        if self.trials < 0 or self.n_max < 1:
            raise DomainError(
                f"need trials ≥ 0 and n_max ≥ 1, got {self.trials}, {self.n_max}"
            )

    @property
    def grid(self) -> list[tuple[int, int, int]]:
        """(x, y, Q) points in a fixed order: x outermost, then y, then Q."""
        return [(x, y, Q) for x in self.x_grid for y in self.y_grid for Q in self.Q_grid]


def _ints(raw: str, key: str) -> tuple[int, ...]:
    try:
        return tuple(int(float(v)) if "e" in v.lower() else int(v) for v in _items(raw))
    except ValueError as exc:
        raise DomainError(f"{key}: expected integers, got {raw!r}") from exc


def _floats(raw: str, key: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in _items(raw))
    except ValueError as exc:
        raise DomainError(f"{key}: expected numbers, got {raw!r}") from exc


def _single(values: tuple, key: str):
    if len(values) != 1:
        raise DomainError(f"{key}: expected a single value, got {values}")
    return values[0]


def _items(raw: str) -> list[str]:
    return [v.strip() for v in raw.split(",") if v.strip()]


def parse_config(values: dict[str, Optional[str]], *, limit: int = DEFAULT_LIMIT) -> ExperimentConfig:
    unknown = set(values) - KNOWN_KEYS
    if unknown:
        raise DomainError(f"unknown config keys: {sorted(unknown)}")
    raw = {k: (v or "") for k, v in values.items()}
    kwargs: dict = {"limit": limit}
    for key in ("x_grid", "y_grid", "Q_grid"):
        kwargs[key] = _ints(raw.get(key, ""), key)
    if "eta" in raw:
        kwargs["eta"] = _single(_floats(raw["eta"], "eta"), "eta")
    if "c_candidates" in raw:
        kwargs["c_candidates"] = _floats(raw["c_candidates"], "c_candidates")
    if "seed" in raw:
        kwargs["seed"] = _single(_ints(raw["seed"], "seed"), "seed")
    if raw.get("output"):
        kwargs["output"] = Path(raw["output"])
    if raw.get("format"):
        kwargs["format"] = raw["format"].strip()
    if "K" in raw:
        kwargs["K"] = _single(_floats(raw["K"], "K"), "K")
    if raw.get("which"):
        kwargs["which"] = tuple(_items(raw["which"]))
    for key in ("trials", "n_max"):
        if raw.get(key):
            kwargs[key] = _single(_ints(raw[key], key), key)
    return ExperimentConfig(**kwargs)


def load_experiment_config(path: Union[str, Path], *, limit: int = DEFAULT_LIMIT) -> ExperimentConfig:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"config file not found: {path}")
    return parse_config(dict(dotenv.dotenv_values(path)), limit=limit)
