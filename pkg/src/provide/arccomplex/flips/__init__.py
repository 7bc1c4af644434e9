#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Flip moves, completions of faces and bounded flip-graph balls."""

from __future__ import annotations

from typing import Any

from .moves import FlipMove, QuadFrame, completions, flip, inverse, is_flippable

_LAZY_BALL = ["BallEdge", "BallNode", "FlipGraphBall", "connect_chain", "flip_graph_ball", "path_from_root"]


def __getattr__(name: str) -> Any:
    """Load ball exploration on first access; it depends on arc transport."""
    if name in _LAZY_BALL:
        from . import ball

        return getattr(ball, name)
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")


__all__ = [
    "BallEdge",
    "BallNode",
    "FlipGraphBall",
    "FlipMove",
    "QuadFrame",
    "completions",
    "connect_chain",
    "flip",
    "flip_graph_ball",
    "inverse",
    "is_flippable",
    "path_from_root",
]

# 🔺✅🔚
