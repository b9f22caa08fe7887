# cli.py -----------------------------------------------------
"""Command-line front end.

Standard output carries data only; progress, logs and timings go to
standard error. Exit codes: 0 success, 1 usage or domain error, 2 capacity,
3 a violated identity or inequality.
"""

import argparse
import csv
import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from pysmooth.characters.group import GroupRegistry
from pysmooth.characters.sums import char_sums, psi_char
from pysmooth.core.counting import psi, psi_coprime, psi_progression
from pysmooth.core.errors import CapacityError, DomainError, InvariantViolation, PysmoothError
from pysmooth.core.factor_table import FactorTable
from pysmooth.core.registry import TableRegistry
from pysmooth.core.split import split_smooth_range
from pysmooth.perron.contour import DEFAULT_K, perron_sweep
from pysmooth.perron.separation import separation_check
from pysmooth.saddle.alpha import solve_alpha
from pysmooth.saddle.dickman import DEFAULT_STEP, build_dickman_table, dickman_rho
from pysmooth.saddle.estimates import ht_estimate, rankin_bound
from pysmooth.sieve.buckets import conductor_buckets
from pysmooth.sieve.large_sieve import large_sieve_trials
from pysmooth.theorems.fit import fit_constant
from pysmooth.theorems.instances import theorem_instances
from pysmooth.theorems.lhs import char_form_by_bucket

from .config import load_env_defaults, load_experiment_config
from .experiment import run_experiment
from .progress import ProgressBuffer, stderr_writer
from .report import write_report
from .timing import (
    disable_timings,
    enable_timings,
    end_trace,
    is_timing_enabled,
    print_last_trace,
    start_trace,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int(text: str) -> int:
    """Integers, also written as 1e6."""
    try:
        value = float(text) if any(c in text for c in "eE.") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        value = int(value)
    return value


def _heights(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad height list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    env = load_env_defaults()
    parser = _Parser(prog="pysmooth", description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=_int, default=env.limit, help="factor table ceiling")
    parser.add_argument("--table-cache", type=Path, default=env.table_cache)
    parser.add_argument("--format", choices=("csv", "json"), default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--eta", type=float, default=0.25)
    parser.add_argument("--threads", type=int, default=env.threads)
    parser.add_argument("--timings", action="store_true")
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="count y-smooth n ≤ x")
    p.add_argument("x", type=_int)
    p.add_argument("y", type=_int)
    p.add_argument("--mod", type=_int, default=None)
    p.add_argument("--res", type=_int, default=None)
    p.set_defaults(handler=cmd_psi)

    p = sub.add_parser("alpha", help="saddle point and main-term estimates")
    p.add_argument("x", type=_int)
    p.add_argument("y", type=_int)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(handler=cmd_alpha)

    p = sub.add_parser("rho", aliases=["dickman"], help="tabulate Dickman's function")
    p.add_argument("--u-max", type=float, default=10.0)
    p.add_argument("--step", type=float, default=0.01, help="output spacing")
    p.add_argument("--resolution", type=float, default=DEFAULT_STEP, help="integration step")
    p.add_argument("--output", type=Path, default=None)
    p.set_defaults(handler=cmd_dickman)

    p = sub.add_parser("charsum", help="Ψ(x,y;χ) for every χ mod q")
    p.add_argument("x", type=_int)
    p.add_argument("y", type=_int)
    p.add_argument("q", type=_int)
    p.set_defaults(handler=cmd_charsum)

    for name in ("bv", "bdh"):
        p = sub.add_parser(name, help=f"{name} left-hand side and character form")
        p.add_argument("x", type=_int)
        p.add_argument("y", type=_int)
        p.add_argument("Q", type=_int)
        p.add_argument("--K", type=float, default=1.0)
        p.set_defaults(handler=cmd_theorem, which=name)

    p = sub.add_parser("large-sieve", help="randomized large sieve trials")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--q-max", type=int, default=20)
    p.add_argument("--n-max", type=int, default=500)
    p.add_argument("--no-adversarial", action="store_true")
    p.set_defaults(handler=cmd_large_sieve)

    p = sub.add_parser("perron-check", help="contour reconstruction of Ψ(x,y;χ)")
    p.add_argument("x", type=_int)
    p.add_argument("y", type=_int)
    p.add_argument("q", type=_int)
    p.add_argument("--heights", type=_heights, default=[64.0, 256.0, 1024.0])
    p.add_argument("--K", type=float, default=DEFAULT_K)
    p.add_argument("--T", type=float, default=None, help="also run the separation check")
    p.add_argument("--threshold", type=_int, default=None)
    p.set_defaults(handler=cmd_perron_check)

    p = sub.add_parser("split-check", help="verify the smooth split decomposition")
    p.add_argument("x", type=_int)
    p.add_argument("y", type=_int)
    p.add_argument("threshold", type=_int)
    p.add_argument("--mod", type=_int, default=1)
    p.set_defaults(handler=cmd_split_check)

    p = sub.add_parser("experiment", help="run a config-driven experiment grid")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--output", type=Path, default=None)
    p.set_defaults(handler=cmd_experiment)
    return parser


# ---------------- helpers ----------------
def _table(args: argparse.Namespace, needed: int) -> FactorTable:
    if needed > args.limit:
        raise CapacityError(f"need a factor table up to {needed}, above --limit {args.limit}")
    TableRegistry.configure(cache_path=args.table_cache)
    return TableRegistry.get_table(max(needed, 2))


def _emit(args: argparse.Namespace, rows: list[dict[str, Any]], out) -> None:
    if not rows:
        return
    if (args.format or "csv") == "json":
        payload = rows[0] if len(rows) == 1 else rows
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(rows[0]))
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row.values()])


# ---------------- commands ----------------
def cmd_psi(args, groups: GroupRegistry, out) -> int:
    table = _table(args, args.x)
    if args.res is not None:
        if args.mod is None:
            raise DomainError("--res needs --mod")
        value = psi_progression(args.x, args.y, args.mod, args.res, table)
    elif args.mod is not None:
        value = psi_coprime(args.x, args.y, args.mod, table)
    else:
        value = psi(args.x, args.y, table)
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_alpha(args, groups: GroupRegistry, out) -> int:
    table = _table(args, max(args.x, args.y))
    sp = solve_alpha(args.x, args.y, args.tol, table=table)
    count = psi(args.x, args.y, table)
    estimate = ht_estimate(args.x, args.y, sp, table)
    _emit(
        args,
        [
            {
                "x": args.x,
                "y": args.y,
                "alpha": sp.alpha,
                "residual": sp.residual,
                "psi": count,
                "ht_estimate": estimate,
                "ratio": estimate / count,
                "rankin_bound": rankin_bound(args.x, args.y, sp, table),
            }
        ],
        out,
    )
    return EXIT_OK


def cmd_dickman(args, groups: GroupRegistry, out) -> int:
    resolution = min(args.resolution, args.step)
    table = build_dickman_table(args.u_max, resolution)
    m = int(round(1.0 / args.step))
    count = int(math.floor(args.u_max * m + 1e-9)) + 1
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "rho"])
    for k in range(count):
        u = k / m
        writer.writerow([repr(u), repr(dickman_rho(u, table))])
    if args.output is None:
        out.write(buf.getvalue())
    else:
        try:
            args.output.write_text(buf.getvalue(), encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write table to {args.output}: {exc}") from exc
    return EXIT_OK


def cmd_charsum(args, groups: GroupRegistry, out) -> int:
    table = _table(args, args.x)
    group = groups.get(args.q)
    sums = char_sums(args.x, args.y, group, table)
    rows = [
        {
            "q": args.q,
            "exponents": " ".join(map(str, chi.exponents)),
            "conductor": chi.conductor,
            "re": float(s.real),
            "im": float(s.imag),
        }
        for chi, s in zip(group.characters(), sums)
    ]
    _emit(args, rows, out)
    return EXIT_OK


def cmd_theorem(args, groups: GroupRegistry, out) -> int:
    table = _table(args, args.x)
    inst = theorem_instances(args.x, args.y, args.Q, groups, table, threads=args.threads)[
        args.which
    ]
    row: dict[str, Any] = {
        "x": args.x,
        "y": args.y,
        "u": inst.u,
        "Q": args.Q,
        "psi": inst.psi_val,
        f"{args.which}_lhs": inst.lhs,
        f"{args.which}_char_form": inst.char_form,
        "fitted_c": fit_constant([inst], args.which),
        "below_K_range": inst.below_K_range(args.K),
        "q_out_of_range": inst.q_out_of_range,
    }
    if args.which == "bv":
        small, medium, large = char_form_by_bucket(
            args.x, args.y, args.Q, args.eta, groups, table, threads=args.threads
        )
        buckets = conductor_buckets(args.x, args.y, args.Q, args.eta)
        row.update(
            char_form_small=small,
            char_form_medium=medium,
            char_form_large=large,
            buckets_degenerate=buckets.degenerate,
        )
    _emit(args, [row], out)
    return EXIT_OK


def cmd_large_sieve(args, groups: GroupRegistry, out) -> int:
    progress = ProgressBuffer()
    table = _table(args, args.n_max) if not args.no_adversarial else None
    summary = large_sieve_trials(
        args.trials,
        args.q_max,
        args.n_max,
        args.seed,
        groups,
        table=table,
        adversarial=not args.no_adversarial,
        threads=args.threads,
        on_progress=progress.stage_callback("large-sieve"),
    )
    ratio = "n/a" if summary.max_ratio is None else repr(summary.max_ratio)
    out.write(f"{'pass' if summary.passed else 'fail'} {summary.trials} {ratio}\n")
    if not summary.passed:
        raise InvariantViolation(f"large sieve violated by {', '.join(summary.failures)}")
    return EXIT_OK


def cmd_perron_check(args, groups: GroupRegistry, out) -> int:
    reach = int(args.x / math.sqrt(min(args.heights))) + 2 if args.heights else 0
    table = _table(args, max(args.x + reach, args.y))
    group = groups.get(args.q)
    rows = []
    for chi in group.characters():
        for point in perron_sweep(args.x, args.y, chi, args.heights, table, args.K):
            rows.append(
                {
                    "exponents": " ".join(map(str, chi.exponents)),
                    "H": point.height,
                    "error": point.error,
                    "budget": point.budget,
                    "quadrature_err": point.quadrature_err,
                    "within_budget": point.within_budget,
                }
            )
        if args.T is not None:
            threshold = args.threshold or max(1, int(round(args.x ** (1 / 3))))
            sep = separation_check(args.x, args.y, threshold, chi, args.T, table)
            logger.info(
                "separation chi=%s: error %.3e bound %.3e", chi.exponents, sep.error, sep.accumulated_bound
            )
            rows.append(
                {
                    "exponents": " ".join(map(str, chi.exponents)),
                    "H": f"T={args.T!r}",
                    "error": sep.error,
                    "budget": sep.accumulated_bound,
                    "quadrature_err": 0.0,
                    "within_budget": sep.holds,
                }
            )
    _emit(args, rows, out)
    return EXIT_OK


def cmd_split_check(args, groups: GroupRegistry, out) -> int:
    table = _table(args, args.x)
    splits = split_smooth_range(args.x, args.y, args.threshold, table)
    values = np.array([s.value for s in splits], dtype=np.int64)
    smooth = np.flatnonzero(table.largest[args.threshold + 1 : args.x + 1] <= args.y)
    expected = smooth + args.threshold + 1
    if values.size != expected.size or np.any(np.sort(values) != expected):
        raise InvariantViolation(
            f"splits of ({args.threshold}, {args.x}] do not cover the smooth numbers"
        )
    worst = 0.0
    for chi in groups.get(args.mod).characters():
        exact = psi_char(args.x, args.y, chi, table) - psi_char(args.threshold, args.y, chi, table)
        via = sum(chi(s.m) * chi(s.n) for s in splits)
        worst = max(worst, abs(via - exact))
    if worst > 1e-6 * max(1, len(splits)):
        raise InvariantViolation(f"split decomposition off by {worst!r}")
    _emit(
        args,
        [{"x": args.x, "y": args.y, "threshold": args.threshold, "splits": len(splits), "max_error": worst}],
        out,
    )
    return EXIT_OK


def cmd_experiment(args, groups: GroupRegistry, out) -> int:
    config = load_experiment_config(args.config, limit=args.limit)
    table = _table(args, max(config.x_grid + config.y_grid))
    report = run_experiment(config, table, groups, threads=args.threads)
    write_report(report, args.format or config.format, args.output or config.output, out)
    return EXIT_OK


# ---------------- entry point ----------------
def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    timings_were_on = is_timing_enabled()
    if args.timings:
        enable_timings()

    progress = ProgressBuffer()
    writer = stderr_writer(color=sys.stderr.isatty())
    progress.subscribe(writer)
    groups = GroupRegistry()
    try:
        if args.command != "experiment":
            start_trace()
        code = args.handler(args, groups, sys.stdout)
        if args.command != "experiment" and end_trace() is not None:
            print_last_trace()
        return code
    except CapacityError as exc:
        print(f"pysmooth: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvariantViolation as exc:
        print(f"pysmooth: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (PysmoothError, OSError) as exc:
        print(f"pysmooth: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        progress.unsubscribe(writer)
        if not timings_were_on:
            disable_timings()


if __name__ == "__main__":
    sys.exit(main())
