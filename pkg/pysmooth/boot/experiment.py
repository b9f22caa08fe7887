# experiment.py ----------------------------------------------
import logging
import math
from dataclasses import asdict
from typing import Optional

from pysmooth import __version__
from pysmooth.characters.group import GroupRegistry
from pysmooth.core.factor_table import FactorTable
from pysmooth.saddle.alpha import solve_alpha
from pysmooth.sieve.large_sieve import large_sieve_trials
from pysmooth.theorems.fit import fit_constant, fit_history, fit_log_power
from pysmooth.theorems.instances import TheoremInstance, theorem_instances

from .config import ExperimentConfig
from .progress import ProgressBuffer
from .report import REPORT_VERSION, ExperimentReport, GridRecord, TheoremRecord
from .timing import end_trace, section, start_trace

logger = logging.getLogger(__name__)


def _fit_summary(instances: list[TheoremInstance], which: str) -> dict:
    c = fit_constant(instances, which)
    history = fit_history(instances, which)
    # the first half of the grid stands in for the coarser grid
    coarse = history[(len(history) - 1) // 2]
    return {
        "c": c,
        "history": history,
        "stable": c > 0 and coarse <= 2 * c,
        "log_power": {repr(A): value for A, value in fit_log_power(instances, which).items()},
    }


def run_experiment(
    config: ExperimentConfig,
    table: FactorTable,
    groups: Optional[GroupRegistry] = None,
    *,
    threads: int = 1,
    progress: Optional[ProgressBuffer] = None,
) -> ExperimentReport:
    """Evaluate every grid point, fit c per theorem and assemble the report."""
    progress = ProgressBuffer() if progress is None else progress
    start_trace()
    grid = config.grid
    records: list[GridRecord] = []
    instances: dict[str, list[TheoremInstance]] = {w: [] for w in config.which}

    for done, (x, y, Q) in enumerate(grid, start=1):
        with section("instances"):
            both = theorem_instances(x, y, Q, groups, table, threads=threads)
        with section("alpha"):
            alpha = solve_alpha(x, y, table=table).alpha
        first = both["bv"]
        records.append(
            GridRecord(
                x=x,
                y=y,
                u=first.u,
                Q=Q,
                psi=first.psi_val,
                alpha=alpha,
                below_K_range=first.below_K_range(config.K),
            )
        )
        for which in config.which:
            instances[which].append(both[which])
        progress.step("grid", done, len(grid))

    fitted: dict[str, dict] = {}
    with section("fit"):
        for which in config.which:
            fitted[which] = _fit_summary(instances[which], which)

    for which in config.which:
        c = fitted[which]["c"]
        for record, inst in zip(records, instances[which]):
            rhs_c = inst.rhs_shape(c)
            degenerate = not (rhs_c > 0 and math.isfinite(rhs_c))
            record.theorems[which] = TheoremRecord(
                lhs=inst.lhs,
                char_form=inst.char_form,
                rhs_by_c={repr(v): inst.rhs_shape(v) for v in config.c_candidates},
                rhs_c=rhs_c,
                ratio=None if degenerate else inst.lhs / rhs_c,
                degenerate=degenerate,
                q_out_of_range=inst.q_out_of_range,
            )

    if config.trials:
        with section("large_sieve"):
            summary = large_sieve_trials(
                config.trials,
                max(config.Q_grid),
                config.n_max,
                config.seed,
                groups,
                table=table if table.covers(config.n_max) else None,
                threads=threads,
                on_progress=progress.stage_callback("large-sieve"),
            )
        fitted["large_sieve"] = asdict(summary)
        fitted["large_sieve"]["failures"] = list(summary.failures)

    metadata = {
        "version": __version__,
        "report_version": REPORT_VERSION,
        "table_limit": table.limit,
        "seed": config.seed,
        "eta": config.eta,
        "K": config.K,
        "which": list(config.which),
        "c_candidates": list(config.c_candidates),
        "grid_points": len(grid),
    }
    runtimes = end_trace()
    if runtimes is not None:
        metadata["runtimes"] = runtimes
    logger.info("experiment finished: %d grid points", len(grid))
    return ExperimentReport(records=records, fitted=fitted, metadata=metadata)
