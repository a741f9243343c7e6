"""Exception hierarchy.  The CLI maps each family to an exit code."""
from __future__ import annotations


class ModinvError(Exception):
    exit_code = 3


class ParseError(ModinvError, ValueError):
    """Malformed expression or data file."""

    exit_code = 2

    def __init__(self, message: str, offset: int | None = None, location: str | None = None):
        self.offset = offset
        self.location = location
        where = []
        if location:
            where.append(location)
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class DataFormatError(ModinvError, ValueError):
    """Inconsistent sizes or structure in modular data."""

    exit_code = 2


class ValidationError(ModinvError):
    """Modular data failed one or more axioms."""

    exit_code = 1

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class ComputationError(ModinvError):
    exit_code = 3


class SingularExpressionError(ComputationError):
    pass


class SnapError(ComputationError):
    """A quantity expected to be an integer did not snap within tolerance."""


class PrecisionError(ComputationError):
    """Results disagree between two working precisions."""


class EnumerationError(ComputationError):
    pass


class FactorizationError(ComputationError):
    pass


class FusionAlgebraError(ComputationError):
    pass


class FullSystemError(ComputationError):
    pass


class UsageError(ModinvError):
    """Bad command-line request (missing input, unknown name)."""

    exit_code = 2
