#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Provide ArcComplex.

Combinatorial engine for hexagon decompositions of surfaces with boundary:
normal coordinates of arcs, flips and flip-graph balls, finite windows of the
arc complex with their automorphisms, and a verifier for the small
nonorientable cases.

Subpackages are loaded on first attribute access."""

from __future__ import annotations

from importlib import import_module
from typing import Any

# Mapping of attribute names to their modules for lazy loading.
_LAZY_IMPORTS = {
    "surface": ["SurfaceSignature", "Triangulation", "build_surface", "classify_surface", "cut_along"],
    "arcs": ["NormalArc", "base_arc", "intersection_number", "straighten", "transport"],
    "flips": ["FlipGraphBall", "connect_chain", "flip", "flip_graph_ball"],
    "complex": ["ComplexWindow", "automorphism_group", "build_complex", "explicit_small_model", "induced_map"],
    "verify": ["Report", "export_graph", "find_configuration", "run_invariant_suite", "run_small_case_report"],
    "config": ["VerifierConfig"],
    "errors": ["ArcComplexError", "RejectedInputError"],
}

_ATTRIBUTE_MODULES = {name: module for module, names in _LAZY_IMPORTS.items() for name in names}


def __getattr__(name: str) -> Any:
    """Lazy import of the public API."""
    module = _ATTRIBUTE_MODULES.get(name)
    if module is None:
        raise AttributeError(f"module '{__name__}' has no attribute '{name}'")
    return getattr(import_module(f"{__name__}.{module}"), name)


__all__ = sorted(_ATTRIBUTE_MODULES)

# 🔺✅🔚
