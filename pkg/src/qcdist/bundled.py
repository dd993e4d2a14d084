"""Access to the bundled AR4JA data files.

The data directory ships the rate-1/2 and rate-2/3 protomatrices, the
row-removal demo matrix, the stage-1 shift assignment, and the 12x20
type-I matrix it produces.  ``index.json`` records each file's puncture
set, provenance and whether it must pass ``qcdist validate`` before the
distance numbers derived from it should be trusted.
"""

from __future__ import annotations

import json
from importlib.resources import files
from pathlib import Path


def bundled_path(name: str) -> Path:
    """Filesystem path of a bundled data file."""
    path = Path(str(files("qcdist").joinpath("data", name)))
    if not path.exists():
        raise FileNotFoundError(f"no bundled data file named {name!r}")
    return path


def bundled_index() -> dict:
    """The parsed ``index.json`` manifest of the bundled files."""
    return json.loads(bundled_path("index.json").read_text(encoding="utf-8"))
