#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Essential arcs in normal coordinates and their behaviour under flips.

Transport helpers depend on the flip engine, which in turn builds on normal
arcs, so they are loaded lazily on first access."""

from __future__ import annotations

from typing import Any

from .normal import (
    NormalArc,
    Port,
    Visit,
    arcs_equal,
    base_arc,
    crossing_weight,
    crossings_with,
    normal_arc_from_dict,
    normal_arc_to_dict,
    validate_normal_arc,
)

_LAZY_TRANSPORT = ["Straightening", "intersection_number", "pull_back", "straighten", "transport"]


def __getattr__(name: str) -> Any:
    """Load transport helpers on first access."""
    if name in _LAZY_TRANSPORT:
        from . import transport

        return getattr(transport, name)
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")


__all__ = [
    "NormalArc",
    "Port",
    "Straightening",
    "Visit",
    "arcs_equal",
    "base_arc",
    "crossing_weight",
    "crossings_with",
    "intersection_number",
    "normal_arc_from_dict",
    "normal_arc_to_dict",
    "pull_back",
    "straighten",
    "transport",
    "validate_normal_arc",
]

# 🔺✅🔚
