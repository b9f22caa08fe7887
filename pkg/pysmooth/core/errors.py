# errors.py --------------------------------------------------


class PysmoothError(Exception):
    """Base class for every error raised by pysmooth."""


class CapacityError(PysmoothError, ValueError):
    """A request exceeds a table or memory ceiling."""


class DomainError(PysmoothError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SolverError(PysmoothError, RuntimeError):
    """A numerical solver failed to bracket or converge."""


class InvariantViolation(PysmoothError, AssertionError):
    """An exact identity or inequality failed; indicates an implementation bug."""


class CacheFormatError(PysmoothError, ValueError):
    """An on-disk factor table cache is malformed."""
