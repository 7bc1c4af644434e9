#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Hexagon decompositions of compact surfaces with boundary.

Usage:
    t = build_surface(2, 2, orientable=False)
    assert validate_triangulation(t) == []
    classify_surface(t)        # SurfaceSignature(genus=2, boundary=2, orientable=False)
    cut_along(t, t.arcs())     # one hexagon region per piece"""

from .builder import build_surface
from .io import (
    load_triangulation,
    save_triangulation,
    triangulation_from_json,
    triangulation_to_json,
)
from .regions import Region, RegionReport, cut_along
from .triangulation import (
    Pairing,
    PieceClass,
    Reversal,
    SurfaceSignature,
    Triangulation,
    Violation,
    boundary_cycles,
    classify_piece,
    classify_surface,
    piece_class_counts,
    validate_triangulation,
)

__all__ = [
    "Pairing",
    "PieceClass",
    "Region",
    "RegionReport",
    "Reversal",
    "SurfaceSignature",
    "Triangulation",
    "Violation",
    "boundary_cycles",
    "build_surface",
    "classify_piece",
    "classify_surface",
    "cut_along",
    "load_triangulation",
    "piece_class_counts",
    "save_triangulation",
    "triangulation_from_json",
    "triangulation_to_json",
    "validate_triangulation",
]

# 🔺✅🔚
