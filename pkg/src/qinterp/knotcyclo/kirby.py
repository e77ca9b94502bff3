"""Kirby colors, the elements ``P'_lambda`` and unified invariants of +-1 surgeries.

The Kirby color ``omega_+-`` is fixed by its pairing with every ``V(nu)``,
the value of the -+1 framed unknot colored by ``nu``. Pairing ``P'_lambda``
with ``V(nu)`` is triangular (nonzero only for ``lambda`` inside ``nu``), so
the traces ``<omega, sigma_mu>`` are solved color by color.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional

from ..errors import InsufficientBound, IntegrityError, NotDivisible
from ..habiro import HabiroElement, embed
from ..interp.matrices import d_entry_okounkov
from ..partitions import D_N, Partition, partitions_up_to, sub_partitions
from ..qring import LaurentV, RationalQ, divide_exact, divides, poch
from ..qring.rational import to_laurent_or_raise
from ..symfun import EvalPoint, dimq, eval_sym, hopf_schur, schur
from .expansion import CycloCoeffs, a_coeffs, coefficients_by_substitution, sigma_scalar
from .tables import KnotTable


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError(f"surgery sign must be +1 or -1, got {sign}")


def pprime_coeffs(partition: Partition, nvars: int) -> Dict[Partition, RationalQ]:
    """``P'_lambda = v^{-|lambda|} dim_q(lambda) sum_mu d_{mu,lambda}(q^{-1}) / dim_q(mu) V(mu)``."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    prefactor = dimq(partition, nvars).shift(-partition.size)
    result: Dict[Partition, RationalQ] = {}
    for mu in sub_partitions(partition):
        d_bar = d_entry_okounkov(mu, partition, nvars).bar()
        if not d_bar.is_zero:
            result[mu] = d_bar * prefactor / dimq(mu, nvars)
    return result


def kirby_constant(partition: Partition, nvars: int) -> LaurentV:
    """``C_lambda = (-1)^{|lambda| + binom(N,2)} q^{D_N(lambda)} v^{-N|lambda|}``."""

    exponent = 2 * D_N(partition, nvars) - nvars * partition.size
    return LaurentV.v(exponent, _sign(partition.size + comb(nvars, 2)))


def pprime_pairing(partition: Partition, color: Partition, nvars: int) -> LaurentV:
    """Hopf pairing ``<P'_lambda, V(nu)>``."""

    total = RationalQ(0)
    for mu, coefficient in pprime_coeffs(partition, nvars).items():
        total = total + coefficient * hopf_schur(mu, color, nvars)
    return to_laurent_or_raise(total, f"<P'{partition}, V{color}>")


def pprime_trace(partition: Partition, sigma: Partition, nvars: int) -> LaurentV:
    """Quantum trace of ``sigma_nu`` over ``P'_lambda``."""

    total = RationalQ(0)
    for mu, coefficient in pprime_coeffs(partition, nvars).items():
        total = total + coefficient * (dimq(mu, nvars) * sigma_scalar(sigma, mu, nvars))
    return to_laurent_or_raise(total, f"Tr(sigma{sigma} on P'{partition})")


def kirby_pairing_check(partition: Partition, color: Partition, nvars: int) -> bool:
    """Triangularity of ``<P'_lambda, V(nu)>`` and duality of ``P'_lambda`` with ``sigma_nu``."""

    pairing = pprime_pairing(partition, color, nvars)
    if color == partition:
        if pairing != kirby_constant(partition, nvars) * dimq(partition, nvars):
            return False
    elif not color.contains(partition) and not pairing.is_zero:
        return False
    trace = pprime_trace(partition, color, nvars)
    expected = dimq(partition, nvars).shift(-partition.size) if color == partition else LaurentV.zero()
    return trace == expected


def twist_value(sign: int, color: Partition, nvars: int) -> LaurentV:
    """``v^{-+N|nu|} q^{-+c(nu)} dim_q V(nu)``, the -+1 framed unknot colored by ``nu``."""

    _check_sign(sign)
    return dimq(color, nvars).shift(-sign * (nvars * color.size + 2 * color.content_sum))


@lru_cache(maxsize=None)
def central_coeffs(color: Partition, nvars: int) -> Dict[Partition, LaurentV]:
    """``V(nu) = sum_mu g_{nu,mu} sigma_mu`` as central elements.

    ``V(nu)`` acts on ``V(kappa)`` by ``s_nu(q^{kappa + rho})``; the returned
    mapping is shared and must not be mutated.
    """

    if color.length > nvars:
        raise ValueError(f"{color} has more than {nvars} parts")
    polynomial = schur(color, nvars)
    colors = sub_partitions(color)
    values = {kappa: eval_sym(polynomial, EvalPoint.rho_point(kappa, nvars)) for kappa in colors}
    return coefficients_by_substitution(KnotTable(f"V{color}", nvars, values, "hopf"), colors)


@lru_cache(maxsize=None)
def kirby_trace(sign: int, sigma: Partition, nvars: int) -> LaurentV:
    """``<omega_+-, sigma_mu>``, solved from the twist values of the colors inside ``mu``."""

    expansion = central_coeffs(sigma, nvars)
    residual = twist_value(sign, sigma, nvars)
    for mu, coefficient in expansion.items():
        if mu != sigma and not coefficient.is_zero:
            residual = residual - coefficient * kirby_trace(sign, mu, nvars)
    try:
        return divide_exact(residual, expansion[sigma])
    except NotDivisible as exc:
        raise IntegrityError(f"<omega, sigma{sigma}> is not a Laurent polynomial at N={nvars}") from exc


def kirby_color(sign: int, partition: Partition, nvars: int) -> RationalQ:
    """Coefficient of ``P'_lambda`` in ``omega_+-``."""

    return RationalQ(kirby_trace(sign, partition, nvars).shift(partition.size), dimq(partition, nvars))


def omega_pairing(sign: int, color: Partition, nvars: int) -> LaurentV:
    """``<omega_+-, V(nu)>`` summed over the ``P'_lambda`` with ``lambda`` inside ``nu``."""

    total = RationalQ(0)
    for partition in sub_partitions(color):
        coefficient = kirby_color(sign, partition, nvars)
        if not coefficient.is_zero:
            total = total + coefficient * pprime_pairing(partition, color, nvars)
    return to_laurent_or_raise(total, f"<omega, V{color}>")


@dataclass(frozen=True)
class KirbyWeight:
    """``(-1)^{|lambda| + binom(N,2)} q^{-+c(lambda)} q^{w_+-(lambda)}`` for surgery coefficient ``sign``.

    The closed-form monomial weights of ``omega_+-``; they agree with
    :func:`kirby_color` on the empty color up to ``q^{-2 D_N}``.
    """

    sign: int
    nvars: int

    def __post_init__(self) -> None:
        _check_sign(self.sign)

    def exponent(self, partition: Partition) -> int:
        w = D_N(partition, self.nvars)
        if self.sign < 0:
            w += self.nvars * partition.size
        return w - self.sign * partition.content_sum

    def __call__(self, partition: Partition) -> LaurentV:
        return LaurentV.q(self.exponent(partition), _sign(partition.size + comb(self.nvars, 2)))


def knot_pprime_value(coeffs: CycloCoeffs, partition: Partition) -> LaurentV:
    """``J_K(P'_lambda) = v^{-|lambda|} dim_q(lambda) a_lambda(K)``."""

    return dimq(partition, coeffs.nvars).shift(-partition.size) * coeffs.get(partition)


def divisibility_exponent(value: LaurentV) -> Optional[int]:
    """Largest ``n`` with ``(q;q)_n`` dividing ``value`` up to a unit; ``None`` for zero."""

    if value.is_zero:
        return None
    if not value.is_q_polynomial:
        return 0
    n = 0
    while divides(value, poch(n + 1)):
        n += 1
    return n


def surgery_term(sign: int, coeffs: CycloCoeffs, partition: Partition) -> LaurentV:
    """``a_mu(K) <omega_+-, sigma_mu>``."""

    term = coeffs.get(partition) * kirby_trace(sign, partition, coeffs.nvars)
    if not term.is_q_polynomial:
        raise IntegrityError(f"surgery term at {partition} has odd powers of v: {term}")
    return term


def monomial_term(weight: KirbyWeight, coeffs: CycloCoeffs, partition: Partition) -> LaurentV:
    return weight(partition) * knot_pprime_value(coeffs, partition)


def coverage(nvars: int, trunc: int) -> int:
    """Smallest color size whose terms all lie in ``((q;q)_T)``: ``N(N+1) T``."""

    return nvars * (nvars + 1) * trunc


def unified_invariant(
    table: KnotTable, sign: int, trunc: int, coeffs: Optional[CycloCoeffs] = None
) -> HabiroElement:
    """Truncation modulo ``(q;q)_T`` of the invariant of ``sign``-surgery on the knot.

    Every color of size below ``N(N+1) T`` is summed. Coefficients passed
    in beyond that size are only checked against the ideal.
    """

    if trunc < 1:
        raise ValueError(f"truncation order must be at least 1, got {trunc}")
    _check_sign(sign)
    cutoff = coverage(table.nvars, trunc)
    needed = partitions_up_to(cutoff - 1, table.nvars)
    for partition in needed:
        if partition not in table.values:
            raise InsufficientBound(
                f"{table.name} has no value at {partition}; truncation {trunc} needs every color of size < {cutoff}",
                trunc,
                partition,
            )
    if coeffs is None:
        coeffs = a_coeffs(table, cutoff - 1, route="substitution")

    total = LaurentV.zero()
    for partition in needed:
        if not coeffs.get(partition).is_zero:
            total = total + surgery_term(sign, coeffs, partition)

    modulus = poch(trunc)
    for partition in coeffs.partitions:
        if partition.size < cutoff or coeffs.get(partition).is_zero:
            continue
        if not divides(surgery_term(sign, coeffs, partition), modulus):
            logging.warning("Term at %s beyond size %d is not divisible by (q;q)_%d", partition, cutoff, trunc)
    return embed(total, trunc)


def surgery_ledger(table: KnotTable, sign: int, max_size: int) -> List[Dict[str, object]]:
    """Per-color surgery terms with their ``(q;q)_n`` divisibility exponent."""

    coeffs = a_coeffs(table, max_size, route="substitution")
    weight = KirbyWeight(sign, table.nvars)
    rows = []
    for partition in coeffs.partitions:
        term = surgery_term(sign, coeffs, partition)
        rows.append(
            {
                "partition": partition,
                "pprime": knot_pprime_value(coeffs, partition),
                "term": term,
                "monomial": monomial_term(weight, coeffs, partition),
                "divisibility": divisibility_exponent(term),
            }
        )
    return rows


__all__ = [
    "KirbyWeight",
    "central_coeffs",
    "coverage",
    "divisibility_exponent",
    "kirby_color",
    "kirby_constant",
    "kirby_pairing_check",
    "kirby_trace",
    "knot_pprime_value",
    "monomial_term",
    "omega_pairing",
    "pprime_coeffs",
    "pprime_pairing",
    "pprime_trace",
    "surgery_ledger",
    "surgery_term",
    "twist_value",
    "unified_invariant",
]
