#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""JSON form of triangulations.

```json
{
  "pieces": 2,
  "pairings": [{"a": [0, 0], "b": [1, 2], "reversal": "antiparallel"}],
  "signature": {"genus": 2, "boundary": 1, "orientable": false}
}
```

``signature`` is optional on input and always written on output.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from provide.foundation.file import atomic_write_text, ensure_dir

from provide.arccomplex.errors import ExportError, RejectedInputError
from provide.arccomplex.surface.triangulation import (
    Pairing,
    Reversal,
    SurfaceSignature,
    Triangulation,
    classify_surface,
)


def signature_to_dict(signature: SurfaceSignature) -> dict[str, Any]:
    return {"genus": signature.genus, "boundary": signature.boundary, "orientable": signature.orientable}


def triangulation_to_dict(t: Triangulation) -> dict[str, Any]:
    return {
        "pieces": t.piece_count,
        "pairings": [
            {"a": list(pairing.a), "b": list(pairing.b), "reversal": pairing.reversal.value}
            for pairing in t.pairings
        ],
        "signature": signature_to_dict(classify_surface(t)),
    }


def triangulation_from_dict(data: dict[str, Any]) -> Triangulation:
    """Rebuild a triangulation, checking the declared signature when present."""
    try:
        pairings = tuple(
            Pairing.of(
                (int(item["a"][0]), int(item["a"][1])),
                (int(item["b"][0]), int(item["b"][1])),
                Reversal(item["reversal"]),
            )
            for item in data["pairings"]
        )
        t = Triangulation(piece_count=int(data["pieces"]), pairings=pairings)
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise RejectedInputError(f"malformed triangulation document: {e}", {"error": str(e)}) from e

    declared = data.get("signature")
    if declared is not None:
        expected = SurfaceSignature(
            genus=int(declared["genus"]),
            boundary=int(declared["boundary"]),
            orientable=bool(declared["orientable"]),
        )
        actual = classify_surface(t)
        if actual != expected:
            raise RejectedInputError(
                "declared signature does not match the gluing",
                {"declared": expected.describe(), "actual": actual.describe()},
            )
    return t


def triangulation_to_json(t: Triangulation) -> str:
    return json.dumps(triangulation_to_dict(t), indent=2, sort_keys=True) + "\n"


def triangulation_from_json(text: str) -> Triangulation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise RejectedInputError(f"invalid JSON: {e}", {"error": str(e)}) from e
    if not isinstance(data, dict):
        raise RejectedInputError("triangulation document must be a JSON object")
    return triangulation_from_dict(data)


def save_triangulation(t: Triangulation, path: Path) -> None:
    try:
        ensure_dir(path.parent)
        atomic_write_text(path, triangulation_to_json(t))
    except OSError as e:
        raise ExportError(f"cannot write {path}: {e}", path) from e


def load_triangulation(path: Path) -> Triangulation:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise RejectedInputError(f"cannot read {path}: {e}", {"path": str(path)}) from e
    return triangulation_from_json(text)


# 🔺✅🔚
