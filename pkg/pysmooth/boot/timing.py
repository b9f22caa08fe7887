"""Wall-clock timing of named run sections.

A trace is opened per command; ``section(name)`` adds the elapsed time of
its block to the open trace. Nothing is recorded while timing is disabled,
so reports stay byte-identical across reruns.
"""

import sys
import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Dict, Iterator, List, Optional, TextIO

BOLD = "\x1b[1m"
CYAN = "\x1b[36m"
GRAY = "\x1b[90m"
YELLOW = "\x1b[33m"
RESET = "\x1b[0m"

_TRACE_CTX: ContextVar[Optional[Dict[str, float]]] = ContextVar(
    "_TRACE_CTX", default=None
)
_TIMING_ENABLED: bool = False

# Keep the most recent finished traces
_TRACE_LOG: List[Dict[str, float]] = []
_TRACE_LOG_LIMIT = 20


def enable_timings() -> None:
    global _TIMING_ENABLED
    _TIMING_ENABLED = True


def disable_timings() -> None:
    global _TIMING_ENABLED
    _TIMING_ENABLED = False


def is_timing_enabled() -> bool:
    return _TIMING_ENABLED


def start_trace() -> None:
    if not _TIMING_ENABLED:
        return
    _TRACE_CTX.set({})


def end_trace() -> Optional[Dict[str, float]]:
    """Close the open trace and return its section totals (None when disabled)."""
    trace = _TRACE_CTX.get()
    _TRACE_CTX.set(None)
    if trace is None:
        return None
    _TRACE_LOG.append(dict(trace))
    if len(_TRACE_LOG) > _TRACE_LOG_LIMIT:
        del _TRACE_LOG[:-_TRACE_LOG_LIMIT]
    return trace


@contextmanager
def section(name: str) -> Iterator[None]:
    trace = _TRACE_CTX.get()
    if trace is None:
        yield
        return
    t0 = time.perf_counter()
    try:
        yield
    finally:
        trace[name] = trace.get(name, 0.0) + time.perf_counter() - t0


def last_trace() -> Optional[Dict[str, float]]:
    return _TRACE_LOG[-1] if _TRACE_LOG else None


def print_last_trace(stream: Optional[TextIO] = None) -> None:
    out = stream if stream is not None else sys.stderr
    trace = last_trace()
    if trace is None:
        print(f"{GRAY}[timings]{RESET} no trace recorded.", file=out)
        return
    print(f"{BOLD}{CYAN}=== Timings ==={RESET}", file=out)
    for name, seconds in trace.items():
        print(f"  - {YELLOW}{name}{RESET}: {seconds:.3f}s", file=out)


def clear_traces() -> None:
    del _TRACE_LOG[:]
