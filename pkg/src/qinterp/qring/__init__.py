"""Exact coefficient rings: Laurent polynomials in ``v`` (``q = v^2``), fractions and q-calculus."""

from .laurent import LaurentV, divide_exact, divides
from .qcalc import (
    balanced_qbinom,
    balanced_qfact,
    balanced_qnum,
    curly,
    curly_factorial,
    cyclotomic,
    poch,
    qbinom,
    qfactorial,
    shifted_poch,
)
from .rational import RationalQ
from .residues import CyclotomicResidue, eval_at_root
from .unipoly import UniPoly

Q = LaurentV.q()

__all__ = [
    "CyclotomicResidue",
    "LaurentV",
    "Q",
    "RationalQ",
    "UniPoly",
    "balanced_qbinom",
    "balanced_qfact",
    "balanced_qnum",
    "curly",
    "curly_factorial",
    "cyclotomic",
    "divide_exact",
    "divides",
    "eval_at_root",
    "poch",
    "qbinom",
    "qfactorial",
    "shifted_poch",
]
