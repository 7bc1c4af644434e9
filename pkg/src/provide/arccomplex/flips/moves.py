#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Flips of hexagon decompositions.

Removing an arc ``e`` glued between two distinct pieces leaves an octagon
with four arc sides; it splits into two hexagons in exactly two ways. The
flip replaces ``e`` by the other splitting arc. An arc glued to two sides of
the same piece bounds a single-piece annulus or Möbius band with one
completion only, and cannot be flipped.

The two pieces around the flipped arc are described by a :class:`QuadFrame`
that names every side and corner of the quadrilateral::

            VP
          /    \\
       XP        YP
       /    P     \\
      X ---- D ---- Y
       \\    Q     /
       XQ        YQ
          \\    /
            VQ

After the flip the diagonal runs from ``VP`` to ``VQ``; piece ``P`` becomes
``(X, VQ, VP)`` and piece ``Q`` becomes ``(VP, VQ, Y)``.
"""

from __future__ import annotations

from collections.abc import Iterable

import attrs
from provide.foundation import logger

from provide.arccomplex.arcs.normal import NormalArc, Port, Visit, base_arc, corner, side
from provide.arccomplex.errors import NonFlippableError, RejectedInputError
from provide.arccomplex.surface.regions import cut_along
from provide.arccomplex.surface.triangulation import Pairing, Reversal, Slot, Triangulation

DIAGONAL = "D"
X, Y, VP, VQ = "X", "Y", "VP", "VQ"

_Placement = tuple[int, Port]


@attrs.define(frozen=True, eq=False)
class QuadFrame:
    """Names of the sides and corners of the two pieces around a diagonal."""

    pieces: tuple[int, int]
    ports: dict[str, tuple[_Placement, ...]]
    _names: dict[_Placement, str] = attrs.field(init=False, repr=False)

    def __attrs_post_init__(self) -> None:
        names = {placement: name for name, placements in self.ports.items() for placement in placements}
        object.__setattr__(self, "_names", names)

    @classmethod
    def build(cls, pieces: tuple[int, int], layout: Iterable[tuple[str, int, Port]]) -> QuadFrame:
        ports: dict[str, list[_Placement]] = {}
        for name, piece, port in layout:
            ports.setdefault(name, []).append((piece, port))
        return cls(pieces=pieces, ports={name: tuple(placements) for name, placements in ports.items()})

    def name_of(self, piece: int, port: Port) -> str:
        return self._names[(piece, port)]

    def side_slot(self, name: str) -> Slot:
        piece, port = self.ports[name][0]
        return piece, port.slot

    def diagonal(self, piece: int) -> Port:
        for owner, port in self.ports[DIAGONAL]:
            if owner == piece:
                return port
        raise RejectedInputError(f"piece {piece} is not part of this quadrilateral", {"piece": piece})

    def route_between(self, first: str, second: str) -> list[Visit]:
        """Shortest route inside the quadrilateral between two named ports."""
        here, there = self.ports[first], self.ports[second]
        for piece in self.pieces:
            start = [port for owner, port in here if owner == piece]
            end = [port for owner, port in there if owner == piece]
            if start and end:
                return [Visit(piece, start[0], end[0])]
        (p, start_port), (q, end_port) = here[0], there[0]
        return [Visit(p, start_port, self.diagonal(p)), Visit(q, self.diagonal(q), end_port)]


def source_frame(t: Triangulation, e: int) -> QuadFrame:
    pairing = t.pairings[e]
    (p, slot_a), (q, slot_b) = pairing.a, pairing.b
    a, b = slot_a // 2, slot_b // 2
    layout = [
        (DIAGONAL, p, side(a)),
        ("YP", p, side(a + 1)),
        ("XP", p, side(a + 2)),
        (X, p, corner(a - 1)),
        (Y, p, corner(a)),
        (VP, p, corner(a + 1)),
        (DIAGONAL, q, side(b)),
        (VQ, q, corner(b + 1)),
    ]
    if pairing.reversal is Reversal.ANTIPARALLEL:
        layout += [("XQ", q, side(b + 1)), ("YQ", q, side(b + 2)), (X, q, corner(b)), (Y, q, corner(b - 1))]
    else:
        layout += [("YQ", q, side(b + 1)), ("XQ", q, side(b + 2)), (X, q, corner(b - 1)), (Y, q, corner(b))]
    return QuadFrame.build((p, q), layout)


def target_frame(p: int, q: int) -> QuadFrame:
    return QuadFrame.build(
        (p, q),
        [
            ("XP", p, side(0)),
            ("XQ", p, side(1)),
            (DIAGONAL, p, side(2)),
            (X, p, corner(0)),
            (VQ, p, corner(1)),
            (VP, p, corner(2)),
            ("YP", q, side(0)),
            (DIAGONAL, q, side(1)),
            ("YQ", q, side(2)),
            (VP, q, corner(0)),
            (VQ, q, corner(1)),
            (Y, q, corner(2)),
        ],
    )


@attrs.define(frozen=True, eq=False)
class FlipMove:
    """Replacement of ``arc`` in ``source`` by ``replacement``, yielding ``target``.

    ``replacement`` is expressed over ``source``. The arc keeps its id in
    ``target``, where it is the new diagonal.
    """

    source: Triangulation
    arc: int
    replacement: NormalArc
    target: Triangulation
    source_frame: QuadFrame = attrs.field(repr=False)
    target_frame: QuadFrame = attrs.field(repr=False)

    @property
    def removed(self) -> NormalArc:
        return base_arc(self.source, self.arc)


def is_flippable(t: Triangulation, e: int) -> bool:
    return not t.is_self_paired(e)


def _flipped_pairings(t: Triangulation, e: int, before: QuadFrame, after: QuadFrame) -> tuple[Pairing, ...]:
    p, q = before.pieces
    parallel = t.pairings[e].reversal is Reversal.PARALLEL

    def relocate(slot: Slot) -> tuple[Slot, bool]:
        piece, index = slot
        if piece not in (p, q):
            return slot, False
        name = before.name_of(piece, Port.from_slot(index))
        # Sides carried over from Q change direction when Q was glued with opposite orientation.
        return after.side_slot(name), piece == q and parallel

    pairings = []
    for arc, pairing in enumerate(t.pairings):
        if arc == e:
            pairings.append(Pairing.of((p, side(2).slot), (q, side(1).slot), Reversal.ANTIPARALLEL))
            continue
        slot_a, flip_a = relocate(pairing.a)
        slot_b, flip_b = relocate(pairing.b)
        reversal = pairing.reversal
        if flip_a != flip_b:
            reversal = Reversal.ANTIPARALLEL if reversal is Reversal.PARALLEL else Reversal.PARALLEL
        pairings.append(Pairing.of(slot_a, slot_b, reversal))
    return tuple(pairings)


def flip(t: Triangulation, e: int) -> FlipMove:
    """Flip arc ``e`` of ``t``.

    Raises:
        RejectedInputError: ``e`` is not an arc of ``t``.
        NonFlippableError: ``e`` is glued to two sides of one piece.
    """
    t.require_arc(e)
    if not is_flippable(t, e):
        raise NonFlippableError(
            f"arc {e} is self-paired in piece {t.pairings[e].a[0]} and has a single completion",
            {"arc": e},
        )
    before = source_frame(t, e)
    after = target_frame(*before.pieces)
    target = Triangulation(piece_count=t.piece_count, pairings=_flipped_pairings(t, e, before, after))
    replacement = NormalArc.from_route(t, before.route_between(VP, VQ))
    logger.debug("arc_flipped", arc=e, pieces=before.pieces, replacement=replacement.describe())
    return FlipMove(
        source=t,
        arc=e,
        replacement=replacement,
        target=target,
        source_frame=before,
        target_frame=after,
    )


def inverse(move: FlipMove) -> FlipMove:
    """The move flipping the new diagonal back, landing exactly on ``move.source``."""
    return FlipMove(
        source=move.target,
        arc=move.arc,
        replacement=NormalArc.from_route(move.target, move.target_frame.route_between(X, Y)),
        target=move.source,
        source_frame=move.target_frame,
        target_frame=move.source_frame,
    )


def completions(t: Triangulation, face: Iterable[int]) -> list[NormalArc]:
    """Every arc completing ``face`` (all arcs of ``t`` but one) to a triangulation.

    Returns:
        The removed arc first, followed by its flip replacement when one exists.
    """
    kept = frozenset(face)
    unknown = kept - set(t.arcs())
    missing = set(t.arcs()) - kept
    if unknown or len(missing) != 1:
        raise RejectedInputError(
            "a face must omit exactly one arc of the triangulation",
            {"unknown": sorted(unknown), "missing": sorted(missing)},
        )
    (e,) = missing
    region = cut_along(t, kept).region_of(t.pairings[e].a[0])
    found = [base_arc(t, e)]
    if len(region.pieces) == 2:
        found.append(flip(t, e).replacement)
    return found


# 🔺✅🔚
