from typing import Optional


class HyperCIError(Exception):
    """Base class for all errors raised by hyperci."""


class HypergraphError(HyperCIError, ValueError):
    """Invalid hypergraph construction or query (empty hyperedge, unknown node, ...)."""


class StrategyError(HyperCIError, ValueError):
    """Malformed dismantling strategy or method token."""


class ParseError(HyperCIError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.message = message
        self.line = line
        self.path = path
        super().__init__(str(self))

    def __str__(self) -> str:
        location = ":".join(
            str(part) for part in (self.path, self.line) if part is not None
        )
        return f"{location}: {self.message}" if location else self.message


class TrajectoryFormatError(HyperCIError, ValueError):
    """A serialized trajectory is missing a key or carries an invalid value."""

    def __init__(self, message: str, key: Optional[str] = None):
        self.key = key
        super().__init__(message)
