"""Exception hierarchy shared by the package."""

from __future__ import annotations


class EntangleError(Exception):
    """Base class for all package errors."""


class ParseError(EntangleError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphDomainError(EntangleError, ValueError):
    """An operand vertex or edge is missing from the graph, or the operation does not apply."""


class UnsupportedOperationError(EntangleError):
    """The operation is not defined for this kind of graph (e.g. contraction of a digraph)."""


class SizeLimitError(EntangleError):
    """A brute-force search guard was exceeded."""


class ContractViolation(EntangleError):
    """A caller broke a precondition (wrong turn marker, mismatched region, ...)."""


class TransferError(EntangleError):
    """The strategy-transfer simulation broke one of its invariants.

    ``trace`` holds the simulation steps recorded so far.
    """

    def __init__(self, message: str, trace: list | None = None):
        super().__init__(message)
        self.trace = list(trace or [])


class InconclusiveError(EntangleError):
    """Strategy verification hit its state bound before reaching a verdict."""
