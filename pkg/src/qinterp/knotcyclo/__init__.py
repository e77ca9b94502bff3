"""Cyclotomic expansions of colored knot invariants and unified invariants of surgeries."""

from .expansion import CycloCoeffs, a_coeffs, reconstruct, round_trip_failures, sigma_scalar
from .kirby import (
    KirbyWeight,
    divisibility_exponent,
    kirby_color,
    kirby_constant,
    kirby_pairing_check,
    kirby_trace,
    knot_pprime_value,
    omega_pairing,
    pprime_coeffs,
    pprime_pairing,
    pprime_trace,
    surgery_ledger,
    twist_value,
    unified_invariant,
)
from .sl2 import (
    habiro_comparison,
    sl2_a_coeffs,
    sl2_pn_expansion,
    sl2_pn_product,
    sl2_reconstruct,
    sl2_sigma_eigen,
)
from .tables import (
    KnotTable,
    builtin_table,
    check_table,
    figure_eight_jones,
    figure_eight_table,
    ingest_table,
    unknot_table,
)

__all__ = [
    "CycloCoeffs",
    "KirbyWeight",
    "KnotTable",
    "a_coeffs",
    "builtin_table",
    "check_table",
    "divisibility_exponent",
    "figure_eight_jones",
    "figure_eight_table",
    "habiro_comparison",
    "ingest_table",
    "kirby_color",
    "kirby_constant",
    "kirby_pairing_check",
    "kirby_trace",
    "knot_pprime_value",
    "omega_pairing",
    "pprime_coeffs",
    "pprime_pairing",
    "pprime_trace",
    "reconstruct",
    "round_trip_failures",
    "sigma_scalar",
    "sl2_a_coeffs",
    "sl2_pn_expansion",
    "sl2_pn_product",
    "sl2_reconstruct",
    "sl2_sigma_eigen",
    "surgery_ledger",
    "twist_value",
    "unified_invariant",
    "unknot_table",
]
