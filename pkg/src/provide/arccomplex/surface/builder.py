#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Deterministic hexagon decompositions for a given surface signature.

The surface is drawn as a polygon with the usual word identification
(``a1 a1 a2 a2 ...`` for crosscaps, ``a b a^-1 b^-1 ...`` for handles,
``a a^-1`` for the sphere), fan-triangulated from vertex 0. Every vertex
class of the glued polygon becomes one boundary component; the remaining
boundary components are added as extra vertices inserted into the last
triangle. Triangles are ideal, so each one is a hexagon piece.
"""

from __future__ import annotations

from collections.abc import Hashable

import attrs
from provide.foundation import logger

from provide.arccomplex.errors import ArcComplexError, UnsupportedSignatureError
from provide.arccomplex.surface.triangulation import (
    Pairing,
    Reversal,
    Slot,
    SurfaceSignature,
    Triangulation,
    classify_surface,
    side_slot,
)

Label = tuple[Hashable, ...]


@attrs.define
class _Triangle:
    """Corners ``(u0, u1, u2)``; side 0 runs u2→u0, side 1 u0→u1, side 2 u1→u2."""

    corners: tuple[int, int, int]
    sides: list[tuple[Label, int]]


def _polygon_word(signature: SurfaceSignature) -> list[tuple[Label, int]]:
    """Letters of the identification word with their exponents."""
    if not signature.orientable:
        word: list[tuple[Label, int]] = []
        for index in range(signature.genus):
            word += [(("letter", index), 1), (("letter", index), 1)]
        return word
    if signature.genus == 0:
        return [(("letter", 0), 1), (("letter", 0), -1)]
    word = []
    for index in range(signature.genus):
        a, b = ("letter", 2 * index), ("letter", 2 * index + 1)
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return word


def _polygon_vertex_classes(signature: SurfaceSignature) -> int:
    return 2 if signature.orientable and signature.genus == 0 else 1


def _spoke(centre: int, vertex: int) -> Label:
    return ("spoke", centre, vertex)


def _diagonal(vertex: int) -> Label:
    return ("diagonal", 0, vertex)


def _fan(word: list[tuple[Label, int]], centre: int) -> list[_Triangle]:
    n = len(word)
    if n == 2:
        return [
            _Triangle((0, 1, centre), [(_spoke(centre, 0), 1), word[0], (_spoke(centre, 1), -1)]),
            _Triangle((1, 0, centre), [(_spoke(centre, 1), 1), word[1], (_spoke(centre, 0), -1)]),
        ]
    triangles = []
    for i in range(1, n - 1):
        side0 = word[n - 1] if i + 1 == n - 1 else (_diagonal(i + 1), -1)
        side1 = word[0] if i == 1 else (_diagonal(i), 1)
        triangles.append(_Triangle((0, i, i + 1), [side0, side1, word[i]]))
    return triangles


def _insert_vertex(triangle: _Triangle, z: int) -> list[_Triangle]:
    """Split a triangle into three around a new interior vertex ``z``."""
    u0, u1, u2 = triangle.corners
    l0, l1, l2 = triangle.sides
    return [
        _Triangle((u0, u1, z), [(_spoke(z, u0), 1), l1, (_spoke(z, u1), -1)]),
        _Triangle((u1, u2, z), [(_spoke(z, u1), 1), l2, (_spoke(z, u2), -1)]),
        _Triangle((u2, u0, z), [(_spoke(z, u2), 1), l0, (_spoke(z, u0), -1)]),
    ]


def _glue(triangles: list[_Triangle]) -> Triangulation:
    first_seen: dict[Label, tuple[Slot, int]] = {}
    glued: list[tuple[Slot, Slot, Reversal]] = []
    for piece, triangle in enumerate(triangles):
        for side, (label, sign) in enumerate(triangle.sides):
            slot = (piece, side_slot(side))
            if label not in first_seen:
                first_seen[label] = (slot, sign)
                continue
            other, other_sign = first_seen.pop(label)
            reversal = Reversal.PARALLEL if sign == other_sign else Reversal.ANTIPARALLEL
            glued.append((other, slot, reversal))
    if first_seen:
        raise ArcComplexError("polygon gluing left unmatched sides", {"labels": sorted(map(str, first_seen))})
    # Arc ids follow the order in which each arc first appears.
    glued.sort(key=lambda item: item[0])
    return Triangulation(
        piece_count=len(triangles),
        pairings=tuple(Pairing.of(a, b, reversal) for a, b, reversal in glued),
    )


def build_surface(genus: int, boundary: int, orientable: bool) -> Triangulation:
    """Build a hexagon decomposition of the surface with the given signature.

    Args:
        genus: Number of crosscaps (nonorientable) or handles (orientable).
        boundary: Number of boundary components, at least 1.
        orientable: Whether the surface is orientable.

    Returns:
        A valid triangulation whose ``classify_surface`` is the requested signature.

    Raises:
        RejectedInputError: The signature itself is malformed.
        UnsupportedSignatureError: The surface has no hexagon decomposition.
    """
    signature = SurfaceSignature(genus=genus, boundary=boundary, orientable=orientable)
    if not signature.admits_hexagon_decomposition:
        raise UnsupportedSignatureError(
            f"surface {signature.describe()} has no hexagon decomposition; use explicit_small_model",
            {"genus": genus, "boundary": boundary, "orientable": orientable},
        )

    word = _polygon_word(signature)
    n = len(word)
    next_vertex = n
    triangles = _fan(word, next_vertex)
    classes = _polygon_vertex_classes(signature)
    if n == 2:
        next_vertex += 1
        classes += 1

    for _ in range(boundary - classes):
        last = triangles.pop()
        triangles.extend(_insert_vertex(last, next_vertex))
        next_vertex += 1

    triangulation = _glue(triangles)
    built = classify_surface(triangulation)
    if built != signature:
        raise ArcComplexError(
            "built triangulation does not realize the requested signature",
            {"requested": signature.describe(), "built": built.describe()},
        )
    logger.debug(
        "surface_built",
        signature=signature.describe(),
        pieces=triangulation.piece_count,
        arcs=triangulation.arc_count,
    )
    return triangulation


# 🔺✅🔚
