from .progress import ProgressBuffer, stderr_writer
from .timing import (
    enable_timings,
    disable_timings,
    is_timing_enabled,
    start_trace,
    end_trace,
    section,
    print_last_trace,
    clear_traces,
)
from .config import (
    DEFAULT_LIMIT,
    EnvDefaults,
    ExperimentConfig,
    load_env_defaults,
    load_experiment_config,
    parse_config,
)
from .report import ExperimentReport, GridRecord, TheoremRecord, write_report
from .experiment import run_experiment
from .cli import build_parser, main

__all__ = [
    "ProgressBuffer",
    "stderr_writer",
    "enable_timings",
    "disable_timings",
    "is_timing_enabled",
    "start_trace",
    "end_trace",
    "section",
    "print_last_trace",
    "clear_traces",
    "DEFAULT_LIMIT",
    "EnvDefaults",
    "ExperimentConfig",
    "load_env_defaults",
    "load_experiment_config",
    "parse_config",
    "ExperimentReport",
    "GridRecord",
    "TheoremRecord",
    "write_report",
    "run_experiment",
    "build_parser",
    "main",
]
