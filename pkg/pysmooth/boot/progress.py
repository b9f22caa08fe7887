import sys
from collections import deque
from dataclasses import dataclass
from threading import RLock
from typing import Callable, Deque, Dict, List, Optional, TextIO

MAX_STEPS = 10_000


@dataclass(frozen=True)
class ProgressStep:
    stage: str
    done: int
    total: int

    def render(self) -> str:
        return f"[{self.stage}] {self.done}/{self.total}\n"


class ProgressBuffer:
    """
    Process-wide progress log for long runs.

    - `step(stage, done, total)` records one ``[stage] done/total`` line
    - `dump()` renders the retained steps, oldest first
    - `latest(stage)` is the most recent step seen for a stage
    - Subscribers receive each rendered line as it arrives.

    SINGLETON: library callbacks and the CLI writer share one instance.
    Only the last ``MAX_STEPS`` steps are retained.
    """

    _instance: Optional["ProgressBuffer"] = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self) -> None:
        if getattr(self, "_initialized", False):
            return

        self._steps: Deque[ProgressStep] = deque(maxlen=MAX_STEPS)
        self._latest: Dict[str, ProgressStep] = {}
        self._subs: List[Callable[[str], None]] = []
        self._lock: RLock = RLock()

        self._initialized = True

    def step(self, stage: str, done: int, total: int) -> None:
        record = ProgressStep(stage, done, total)
        with self._lock:
            self._steps.append(record)
            self._latest[stage] = record
            subs = list(self._subs)

        line = record.render()
        for cb in subs:
            try:
                cb(line)
            except Exception:
                pass

    def stage_callback(self, stage: str) -> Callable[[int, int], None]:
        return lambda done, total: self.step(stage, done, total)

    # ---------------- Public API ----------------
    def dump(self) -> str:
        with self._lock:
            return "".join(s.render() for s in self._steps)

    def latest(self, stage: str) -> Optional[ProgressStep]:
        with self._lock:
            return self._latest.get(stage)

    def clear(self) -> None:
        with self._lock:
            self._steps.clear()
            self._latest.clear()

    def subscribe(self, cb: Callable[[str], None]) -> None:
        with self._lock:
            if cb not in self._subs:
                self._subs.append(cb)

    def unsubscribe(self, cb: Callable[[str], None]) -> None:
        with self._lock:
            if cb in self._subs:
                self._subs.remove(cb)


GRAY = "\x1b[90m"
RESET = "\x1b[0m"


def stderr_writer(stream: Optional[TextIO] = None, *, color: bool = False) -> Callable[[str], None]:
    """Subscriber that forwards progress lines to standard error."""

    def _write(text: str) -> None:
        out = stream if stream is not None else sys.stderr
        out.write(f"{GRAY}{text}{RESET}" if color else text)
        out.flush()

    return _write
