"""Interpolation polynomials at ``q = t``, cyclotomic expansions and unified invariants."""

from .errors import (
    InsufficientBound,
    IntegrityError,
    MissingColor,
    NotDivisible,
    NotLaurent,
    QInterpError,
    TableValidationError,
)
from .habiro import HabiroElement, embed, eval_root, taylor_at_1
from .partitions import EMPTY, Partition
from .qring import LaurentV, RationalQ

__all__ = [
    "EMPTY",
    "HabiroElement",
    "InsufficientBound",
    "IntegrityError",
    "LaurentV",
    "MissingColor",
    "NotDivisible",
    "NotLaurent",
    "Partition",
    "QInterpError",
    "RationalQ",
    "TableValidationError",
    "embed",
    "eval_root",
    "taylor_at_1",
]
