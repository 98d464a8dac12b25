"""Exception hierarchy shared by every eqlog module."""

from __future__ import annotations


class EqlogError(Exception):
    """Base class for all errors raised by eqlog."""


class ParseError(EqlogError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class VocabularyError(EqlogError):
    """An interpretation or model set does not match the requested vocabulary."""


class CapExceeded(EqlogError):
    """Exhaustive enumeration would exceed the configured atom cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"vocabulary of {size} atoms exceeds enumeration cap of {cap}")


class NotTotalError(EqlogError):
    pass


class NotEntailed(EqlogError):
    """Raised by interpolation routines whose entailment precondition fails."""


class IncoherentError(EqlogError):
    """The theory or program has no equilibrium model."""


class NotPersistenceClosed(EqlogError):
    pass


class VerificationError(EqlogError):
    """A self-verifying construction failed its own check (internal invariant breach)."""


class UnsafeError(EqlogError):
    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class FormulaShapeError(EqlogError):
    """A formula is open, non-prenex or contains quantifiers where none are allowed."""
