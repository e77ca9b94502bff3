"""On-disk cache for evaluation and inverse matrices, keyed by ``(N, bound, version)``."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Callable, Optional

from pydantic import ValidationError

from .interp.matrices import TriangularMatrix
from .partitions import Partition
from .serialization import MatrixPayload

DEFAULT_CACHE_DIR = Path(".qinterp-cache")
CACHE_VERSION = "1"


def store_matrix(path: Path, matrix: TriangularMatrix) -> bool:
    """Write the cache entry for ``matrix``; returns ``False`` when an identical entry exists.

    The entry is staged next to ``path`` and moved into place.
    """

    payload = MatrixPayload.from_value(matrix)
    content = json.dumps(payload.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"
    if path.exists() and path.read_text(encoding="utf-8") == content:
        return False
    path.parent.mkdir(parents=True, exist_ok=True)
    staging = path.with_name(path.name + ".tmp")
    staging.write_text(content, encoding="utf-8")
    staging.replace(path)
    logging.info("Stored %s matrix for N=%d at %s", payload.kind, payload.N, path)
    return True


def cache_path(kind: str, nvars: int, bound: Partition, cache_dir: Optional[Path] = None) -> Path:
    cache_dir = cache_dir or Path(os.getenv("QINTERP_CACHE", str(DEFAULT_CACHE_DIR)))
    shape = "-".join(map(str, bound.parts)) or "0"
    return cache_dir / f"{kind}-N{nvars}-{shape}-v{CACHE_VERSION}.json"


def cached_matrix(
    kind: str,
    nvars: int,
    bound: Partition,
    build: Callable[[], TriangularMatrix],
    cache_dir: Optional[Path] = None,
    use_cache: bool = True,
) -> TriangularMatrix:
    """Load the matrix from the cache or build and store it."""

    if not use_cache:
        return build()
    path = cache_path(kind, nvars, bound, cache_dir)
    if path.exists():
        try:
            with path.open("r", encoding="utf-8") as handle:
                matrix = MatrixPayload.model_validate(json.load(handle)).to_value()
        except (json.JSONDecodeError, ValidationError, ValueError) as exc:
            logging.warning("Ignoring unreadable cache entry %s: %s", path, exc)
        else:
            logging.info("Cache hit for %s", path)
            return matrix
    logging.info("Cache miss for %s", path)
    matrix = build()
    store_matrix(path, matrix)
    return matrix


__all__ = [
    "CACHE_VERSION",
    "DEFAULT_CACHE_DIR",
    "cache_path",
    "cached_matrix",
    "store_matrix",
]
