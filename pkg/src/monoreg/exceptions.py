"""Exception types raised across the package."""


class MonoregError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(MonoregError, ValueError):
    """Two objects live in polynomial rings with different numbers of variables."""


class DomainError(MonoregError, ValueError):
    """An operation was called outside the inputs it is defined for."""


class GraphInvariantError(MonoregError, ValueError):
    """A weighted oriented graph violates one of its structural rules.

    ``rule`` names the violated rule (e.g. ``"isolated-vertex"``).
    """

    def __init__(self, rule: str, message: str):
        super().__init__(f"{rule}: {message}")
        self.rule = rule


class ParseError(MonoregError, ValueError):
    """Malformed ideal or graph input. Carries 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
