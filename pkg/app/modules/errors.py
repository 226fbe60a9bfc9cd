"""
Errors Module
One exception hierarchy for the whole toolkit, so the CLI can map every
failure onto its exit-code contract.
"""

from typing import Optional


class WronskianToolkitError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(WronskianToolkitError, ValueError):
    """Operands live over different ambient dimensions d."""

    def __init__(self, expected: int, found: int, what: str = "operand"):
        self.expected = expected
        self.found = found
        super().__init__(f"{what} has dimension {found}, expected {expected}")


class ArityMismatchError(WronskianToolkitError, ValueError):
    """Wrong number of arguments for an N-ary operator."""

    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"operator takes {expected} arguments, got {found}")


class InvalidAxisError(WronskianToolkitError, ValueError):
    """Partial derivative requested along a non-existent axis."""


class InvalidSpecError(WronskianToolkitError, ValueError):
    """
    A Wronskian row set breaks a structural rule.

    Attributes:
        condition: short name of the violated rule, e.g.
            "duplicate row" or "set of first-order derivatives is complete"
    """

    def __init__(self, message: str, condition: Optional[str] = None):
        self.condition = condition
        super().__init__(message)


class MatrixShapeError(WronskianToolkitError, ValueError):
    """Determinant requested on a non-square or oversized matrix."""


class GuardExceededError(WronskianToolkitError):
    """A computation would exceed the configured work bound."""

    def __init__(self, required: int, guard: int, what: str = "evaluations"):
        self.required = required
        self.guard = guard
        super().__init__(f"{what} required: {required} exceeds guard {guard}")


class ParseError(WronskianToolkitError, ValueError):
    """
    Polynomial or spec text could not be parsed.

    Attributes:
        position: byte offset into the source (may equal len(source))
        expected: what the parser was looking for
        found: what it saw instead
    """

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {position}: expected {expected}, found {found}")

    def in_bytes(self, source: str) -> "ParseError":
        """The same error with a character index into source turned into a UTF-8 byte offset."""
        return ParseError(len(source[:self.position].encode("utf-8")), self.expected, self.found)
