"""Plain-text rendering of matrices, expansions and ledgers."""

from __future__ import annotations

from typing import Iterable, List, Mapping, Optional, Sequence

from .interp.matrices import TriangularMatrix
from .partitions import Partition
from .qring import LaurentV


def _grid(headers: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """Left-aligned columns padded to their widest cell, the header ruled with dashes."""

    cells = [list(headers)] + [[str(value) for value in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


def render_matrix(
    matrix: TriangularMatrix,
    rows: Optional[Sequence[Partition]] = None,
    columns: Optional[Sequence[Partition]] = None,
) -> str:
    """Rows are inner partitions, columns outer ones; absent entries print as 0."""

    ideal = matrix.partitions
    rows = list(rows or ideal)
    columns = list(columns or ideal)
    body = [[str(inner)] + [str(matrix.get(inner, outer)) for outer in columns] for inner in rows]
    return _grid(["lambda\\mu"] + [str(c) for c in columns], body)


def split_columns(partitions: Sequence[Partition], width: int) -> List[List[Partition]]:
    return [list(partitions[i : i + width]) for i in range(0, len(partitions), width)]


def _label(partition: Partition) -> str:
    return ",".join(map(str, partition.parts or (0,)))


def render_schur_expansion(partition: Partition, coefficients: Mapping[Partition, LaurentV]) -> str:
    """``F_{2,1} = (q^3) s_{2,1} + (-q^3) s_{2} + ...`` from the largest Schur function down."""

    terms = []
    for mu in sorted(coefficients, reverse=True):
        value = coefficients[mu]
        if value.is_zero:
            continue
        terms.append(f"({value})" if not mu.parts else f"({value}) s_{{{_label(mu)}}}")
    return f"F_{{{_label(partition)}}} = " + (" + ".join(terms) or "0")


def render_coefficients(title: str, values: Mapping[Partition, object]) -> str:
    rows = [(str(p), values[p]) for p in sorted(values)]
    return f"{title}\n" + _grid(["lambda", "value"], rows)


def render_rows(headers: Sequence[str], rows: Iterable[Mapping[str, object]]) -> str:
    return _grid(headers, ([row[h] for h in headers] for row in rows))


__all__ = [
    "render_coefficients",
    "render_matrix",
    "render_rows",
    "render_schur_expansion",
    "split_columns",
]
