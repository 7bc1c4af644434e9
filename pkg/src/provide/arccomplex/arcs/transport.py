#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Coordinate changes across flips, straightening and intersection numbers."""

from __future__ import annotations

from collections.abc import Iterable

import attrs
from provide.foundation import logger

from provide.arccomplex.arcs.normal import NormalArc, Visit
from provide.arccomplex.errors import RejectedInputError, UndefinedTransportError
from provide.arccomplex.flips.moves import DIAGONAL, FlipMove, flip, inverse, is_flippable
from provide.arccomplex.surface.triangulation import Triangulation


def _require_base(a: NormalArc, t: Triangulation) -> None:
    if a.base is not t and a.base != t:
        raise RejectedInputError("arc is not expressed over the move's source triangulation")


def carry(a: NormalArc, move: FlipMove) -> NormalArc:
    """Re-express ``a`` over ``move.target``.

    Only the passes of the route through the two flipped pieces change; each
    pass is redrawn between the same named ports of the new quadrilateral.
    The flipped arc itself is carried to its position crossing the new diagonal.
    """
    before, after = move.source_frame, move.target_frame
    quad = set(before.pieces)
    route = a.route
    carried: list[Visit] = []
    i = 0
    while i < len(route):
        visit = route[i]
        if visit.piece not in quad:
            carried.append(visit)
            i += 1
            continue
        first = before.name_of(visit.piece, visit.entry)
        if before.name_of(visit.piece, visit.exit) == DIAGONAL:
            i += 1
            visit = route[i]
        last = before.name_of(visit.piece, visit.exit)
        carried.extend(after.route_between(first, last))
        i += 1
    return NormalArc.from_route(move.target, carried)


def transport(a: NormalArc, move: FlipMove) -> NormalArc:
    """Express ``a`` in the coordinates of the triangulation after ``move``.

    Raises:
        RejectedInputError: ``a`` is not expressed over ``move.source``.
        UndefinedTransportError: ``a`` is the flipped arc; use ``move.replacement``.
    """
    _require_base(a, move.source)
    if a.base_arc_id == move.arc:
        raise UndefinedTransportError(
            f"arc e{move.arc} is removed by the flip; its successor is the move's replacement",
            {"arc": move.arc},
        )
    return carry(a, move)


def transport_along(a: NormalArc, moves: Iterable[FlipMove]) -> NormalArc:
    for move in moves:
        a = carry(a, move)
    return a


def pull_back(a: NormalArc, path: Iterable[FlipMove]) -> NormalArc:
    """Carry an arc expressed at the end of ``path`` back to its start."""
    for move in reversed(list(path)):
        a = carry(a, inverse(move))
    return a


@attrs.define(frozen=True)
class Straightening:
    """Flips turning an arc into an arc of the final triangulation."""

    moves: tuple[FlipMove, ...]
    triangulation: Triangulation
    arc: int


def _candidate_arcs(a: NormalArc) -> list[int]:
    crossed = a.crossed_arcs()
    ordered = [crossed[0], crossed[-1], *crossed]
    return list(dict.fromkeys(ordered))


def straighten(t: Triangulation, a: NormalArc) -> Straightening:
    """Flip arcs crossed by ``a`` until ``a`` becomes an arc of the triangulation.

    The first arc crossed from the start endpoint is tried first; each accepted
    flip strictly lowers the crossing weight of ``a``, so at most
    ``a.crossing_weight`` flips are made.

    Raises:
        RejectedInputError: ``a`` is not expressed over ``t`` or no crossed arc
            can be flipped to lower its weight.
    """
    _require_base(a, t)
    moves: list[FlipMove] = []
    current, tri = a, t
    while current.base_arc_id is None:
        for candidate in _candidate_arcs(current):
            if not is_flippable(tri, candidate):
                continue
            move = flip(tri, candidate)
            flipped = carry(current, move)
            if flipped.crossing_weight < current.crossing_weight:
                break
        else:
            raise RejectedInputError(
                "no flip lowers the crossing weight of the arc",
                {"weight": current.crossing_weight, "crossed": current.crossed_arcs()},
            )
        moves.append(move)
        current, tri = flipped, move.target
    arc_id = current.base_arc_id
    logger.debug("arc_straightened", flips=len(moves), start_weight=a.crossing_weight, arc=arc_id)
    return Straightening(moves=tuple(moves), triangulation=tri, arc=arc_id)


def intersection_number(a: NormalArc, b: NormalArc) -> int:
    """Geometric intersection number of two arcs over the same base."""
    if a.base is not b.base and a.base != b.base:
        raise RejectedInputError("arcs are expressed over different triangulations; transport first")
    if a == b:
        return 0
    straightened = straighten(a.base, a)
    return transport_along(b, straightened.moves).crossings_with(straightened.arc)


# 🔺✅🔚
