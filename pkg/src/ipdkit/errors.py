"""Exception hierarchy shared by every ipdkit module."""

from __future__ import annotations


class IpdError(Exception):
    """Base class for all ipdkit errors."""


class ParseError(IpdError, ValueError):
    """Malformed graph or decomposition input.

    ``offset`` is a byte offset (graph6) and ``line`` a 1-based line number
    (edge lists); whichever does not apply is ``None``.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class ParameterError(IpdError, ValueError):
    """Infeasible generator parameters or bad argument values."""


class PreconditionError(IpdError, ValueError):
    """An input does not satisfy the hypothesis an operation requires."""


class CapExceeded(IpdError):
    """An exponential search refused to run above its configured size cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap}; raise the cap explicitly to proceed")
        self.what = what
        self.n = n
        self.cap = cap


class InvariantViolation(IpdError, AssertionError):
    """A result that is mathematically guaranteed was not produced, so the implementation is wrong."""
