from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Dict

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
SRC_PATH = PROJECT_ROOT / "src"
if str(SRC_PATH) not in sys.path:
    sys.path.insert(0, str(SRC_PATH))

GOLDEN_FILE = PROJECT_ROOT / "data" / "golden" / "gl2_tables.json"


@pytest.fixture(scope="session")
def golden() -> Dict[str, object]:
    with GOLDEN_FILE.open("r", encoding="utf-8") as handle:
        return json.load(handle)


@pytest.fixture
def golden_file(tmp_path: Path) -> Path:
    """A writable copy of the golden tables."""

    target = tmp_path / "gl2_tables.json"
    target.write_text(GOLDEN_FILE.read_text(encoding="utf-8"), encoding="utf-8")
    return target
