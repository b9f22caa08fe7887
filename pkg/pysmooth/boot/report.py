# report.py --------------------------------------------------
"""Experiment reports: one record per grid point, plus fitted constants.

JSON is written with sorted keys and no runtimes unless timings were
requested, so reruns with the same config and seed are byte-identical.
CSV writes one block per theorem, each with a fixed header row.
"""

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Optional, TextIO

REPORT_VERSION = "1"
CSV_COLUMNS = {
    "bv": ("x", "y", "u", "Q", "psi", "alpha", "bv_lhs", "bv_char_form", "rhs_c", "ratio"),
    "bdh": ("x", "y", "u", "Q", "psi", "alpha", "bdh_lhs", "bdh_char_form", "rhs_c", "ratio"),
}


@dataclass
class TheoremRecord:
    lhs: float
    char_form: float
    rhs_by_c: dict[str, float]
    rhs_c: Optional[float] = None
    ratio: Optional[float] = None
    degenerate: bool = False
    q_out_of_range: bool = False


@dataclass
class GridRecord:
    x: int
    y: int
    u: float
    Q: int
    psi: int
    alpha: float
    below_K_range: bool
    theorems: dict[str, TheoremRecord] = field(default_factory=dict)


@dataclass
class ExperimentReport:
    records: list[GridRecord]
    fitted: dict[str, dict[str, Any]]
    metadata: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {
            "records": [asdict(r) for r in self.records],
            "fitted": self.fitted,
            "metadata": self.metadata,
        }

    def to_json(self) -> str:
        return json.dumps(_finite(self.to_dict()), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        blocks = [w for w in CSV_COLUMNS if any(w in r.theorems for r in self.records)]
        for k, which in enumerate(blocks):
            if k:
                buf.write("\n")
            writer.writerow(CSV_COLUMNS[which])
            for r in self.records:
                t = r.theorems.get(which)
                if t is None:
                    continue
                writer.writerow(
                    [
                        r.x,
                        r.y,
                        repr(r.u),
                        r.Q,
                        r.psi,
                        repr(r.alpha),
                        repr(t.lhs),
                        repr(t.char_form),
                        _cell(t.rhs_c),
                        "degenerate" if t.degenerate else _cell(t.ratio),
                    ]
                )
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def _cell(value: Optional[float]) -> str:
    return "" if value is None else repr(value)


def _finite(obj: Any) -> Any:
    """Replace non-finite floats with None so the JSON stays standard."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def write_report(
    report: ExperimentReport, fmt: str, path: Optional[Path], stream: TextIO
) -> None:
    """Write to ``path``, or to ``stream`` when no path is given."""
    text = report.render(fmt)
    if path is None:
        stream.write(text)
        return
    path = Path(path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
