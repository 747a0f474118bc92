"""
Error Types for compactlab

Every failure the CLI maps to an exit code is one of these. Precondition violations that
indicate a programming error (wrong backend, non-maximal ideal where a maximal one is
required) stay plain ValueError/TypeError.
"""


class CompactLabError(Exception):
    """Base class for all compactlab errors."""


class CapacityError(CompactLabError):
    """
    A computation would exceed one of the configured size caps.

    Args:
        what: Human-readable name of the capped quantity (e.g. "product ring order")
        cap: The cap in force
        size: The offending size
    """

    def __init__(self, what: str, cap: int, size: int):
        self.what = what
        self.cap = cap
        self.size = size
        super().__init__(f"{what} {size} exceeds cap {cap}")


class ConsistencyError(CompactLabError):
    """Two independent computations of the same object disagreed."""


class ParseError(CompactLabError, ValueError):
    """
    A ring, space or set description could not be parsed.

    Args:
        message: What went wrong
        field: Offending field name, when known
        line: Offending line number, when known
    """

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")


class PointSetMismatch(CompactLabError, ValueError):
    """Two topologies were compared on different point sets."""
