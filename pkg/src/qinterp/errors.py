"""Exception hierarchy shared by the qinterp packages."""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence


class QInterpError(RuntimeError):
    """Base class for mathematical integrity failures.

    Integrity failures are distinct from precondition violations, which raise
    :class:`ValueError`. The CLI maps these errors to exit code 1 and prints
    the payload returned by :meth:`to_dict`.
    """

    kind = "integrity"

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.kind, "message": str(self)}


class NotDivisible(QInterpError):
    """Raised when an exact division leaves a nonzero remainder."""

    kind = "not_divisible"

    def __init__(self, message: str, remainder: Any = None) -> None:
        super().__init__(message)
        self.remainder = remainder

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        if self.remainder is not None:
            payload["remainder"] = str(self.remainder)
        return payload


class NotLaurent(QInterpError):
    """Raised when a cyclotomic coefficient fails to be a Laurent polynomial."""

    kind = "not_laurent"

    def __init__(self, message: str, partition: Any = None, remainder: Any = None) -> None:
        super().__init__(message)
        self.partition = partition
        self.remainder = remainder

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        if self.partition is not None:
            payload["partition"] = str(self.partition)
        if self.remainder is not None:
            payload["remainder"] = str(self.remainder)
        return payload


class InsufficientBound(QInterpError):
    """Raised when a knot table cannot certify a Habiro truncation."""

    kind = "insufficient_bound"

    def __init__(self, message: str, truncation: int, partition: Any = None) -> None:
        super().__init__(message)
        self.truncation = truncation
        self.partition = partition

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["truncation"] = self.truncation
        if self.partition is not None:
            payload["partition"] = str(self.partition)
        return payload


class IntegrityError(QInterpError):
    """Raised when two independent computations of the same value disagree."""

    kind = "mismatch"


class TableValidationError(ValueError):
    """Raised when an ingested knot table violates the schema or its invariants."""

    kind = "invalid_table"

    def __init__(self, message: str, problems: Optional[Sequence[str]] = None) -> None:
        super().__init__(message)
        self.problems: List[str] = list(problems or [])

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.kind, "message": str(self), "problems": list(self.problems)}


class MissingColor(TableValidationError):
    """Raised when a knot table lacks a partition below its declared bound."""

    kind = "missing_color"

    def __init__(self, partition: Any) -> None:
        super().__init__(f"knot table has no value for {partition}", [str(partition)])
        self.partition = partition


__all__ = [
    "InsufficientBound",
    "IntegrityError",
    "MissingColor",
    "NotDivisible",
    "NotLaurent",
    "QInterpError",
    "TableValidationError",
]
