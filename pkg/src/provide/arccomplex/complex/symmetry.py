#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Symmetries of a gluing structure and the automorphisms they induce.

A gluing symmetry permutes the pieces and acts on each piece by one of the six
dihedral symmetries of the hexagon that keep arc-slots on arc-slots. It must
carry pairings to pairings; a reflection reverses the direction of every side
of its piece, which flips the reversal flag of each gluing it touches once.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

import attrs

from provide.arccomplex.arcs.normal import NormalArc, Port, Visit
from provide.arccomplex.complex.maps import SimplicialMap
from provide.arccomplex.complex.window import ComplexWindow
from provide.arccomplex.errors import RejectedInputError
from provide.arccomplex.flips.ball import BallNode, FlipGraphBall
from provide.arccomplex.surface.triangulation import (
    SIDES_PER_PIECE,
    SLOTS_PER_PIECE,
    PieceClass,
    Slot,
    Triangulation,
    classify_piece,
    require_valid,
)


@attrs.define(frozen=True)
class Dihedral:
    """``slot -> slot + shift`` or, when reflecting, ``slot -> shift - slot`` (mod 6)."""

    shift: int
    reflect: bool = False

    def __call__(self, slot: int) -> int:
        if self.reflect:
            return (self.shift - slot) % SLOTS_PER_PIECE
        return (slot + self.shift) % SLOTS_PER_PIECE

    def port(self, port: Port) -> Port:
        return Port.from_slot(self(port.slot))

    def then(self, other: Dihedral) -> Dihedral:
        """The map ``slot -> other(self(slot))``."""
        shift = other.shift - self.shift if other.reflect else other.shift + self.shift
        return Dihedral(shift % SLOTS_PER_PIECE, self.reflect != other.reflect)


DIHEDRAL_MAPS = tuple(Dihedral(2 * k, reflect) for reflect in (False, True) for k in range(SIDES_PER_PIECE))


@attrs.define(frozen=True)
class GluingSymmetry:
    pieces: tuple[int, ...]
    slots: tuple[Dihedral, ...]

    def map_slot(self, slot: Slot) -> Slot:
        piece, index = slot
        return self.pieces[piece], self.slots[piece](index)

    def map_route(self, route: Sequence[Visit]) -> list[Visit]:
        return [
            Visit(self.pieces[v.piece], self.slots[v.piece].port(v.entry), self.slots[v.piece].port(v.exit))
            for v in route
        ]

    def map_arc(self, a: NormalArc) -> NormalArc:
        return NormalArc.from_route(a.base, self.map_route(a.route))

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.pieces)) and all(d == Dihedral(0) for d in self.slots)


def identity_symmetry(t: Triangulation) -> GluingSymmetry:
    return GluingSymmetry(pieces=tuple(t.pieces()), slots=tuple(Dihedral(0) for _ in t.pieces()))


def is_gluing_symmetry(t: Triangulation, sym: GluingSymmetry) -> bool:
    if len(sym.pieces) != t.piece_count or sorted(sym.pieces) != list(t.pieces()):
        return False
    if len(sym.slots) != t.piece_count:
        return False
    for pairing in t.pairings:
        image_a, image_b = sym.map_slot(pairing.a), sym.map_slot(pairing.b)
        if not t.has_slot(image_a):
            return False
        partner, reversal = t.partner(image_a)
        if partner != image_b:
            return False
        twisted = sym.slots[pairing.a[0]].reflect != sym.slots[pairing.b[0]].reflect
        if (reversal != pairing.reversal) != twisted:
            return False
    return True


def _propagate(t: Triangulation, first_image: int, first_map: Dihedral) -> GluingSymmetry | None:
    pieces = {0: first_image}
    maps = {0: first_map}
    stack = [0]
    while stack:
        p = stack.pop()
        for side in range(SIDES_PER_PIECE):
            (q, q_slot), reversal = t.partner((p, 2 * side))
            image = (pieces[p], maps[p](2 * side))
            (q_image, q_image_slot), image_reversal = t.partner(image)
            reflect = maps[p].reflect != (reversal != image_reversal)
            shift = (q_image_slot + q_slot) if reflect else (q_image_slot - q_slot)
            wanted = Dihedral(shift % SLOTS_PER_PIECE, reflect)
            if q in pieces:
                if pieces[q] != q_image or maps[q] != wanted:
                    return None
                continue
            pieces[q] = q_image
            maps[q] = wanted
            stack.append(q)
    if len(pieces) != t.piece_count or len(set(pieces.values())) != t.piece_count:
        return None
    return GluingSymmetry(
        pieces=tuple(pieces[p] for p in t.pieces()),
        slots=tuple(maps[p] for p in t.pieces()),
    )


def gluing_symmetries(t: Triangulation) -> list[GluingSymmetry]:
    """Every symmetry of the gluing structure, identity first.

    A symmetry is fixed by where it sends piece 0 and how, so at most
    ``6 * pieces`` candidates are propagated.
    """
    require_valid(t)
    found: list[GluingSymmetry] = []
    for image in t.pieces():
        for dihedral in DIHEDRAL_MAPS:
            sym = _propagate(t, image, dihedral)
            if sym is not None and is_gluing_symmetry(t, sym) and sym not in found:
                found.append(sym)
    return found


def compose_symmetries(first: GluingSymmetry, second: GluingSymmetry) -> GluingSymmetry:
    """The symmetry ``second`` after ``first``, matching :func:`compose` on induced maps."""
    if len(first.pieces) != len(second.pieces):
        raise RejectedInputError("symmetries act on different piece counts")
    return GluingSymmetry(
        pieces=tuple(second.pieces[image] for image in first.pieces),
        slots=tuple(d.then(second.slots[image]) for d, image in zip(first.slots, first.pieces, strict=True)),
    )


def induced_map(sym: GluingSymmetry, w: ComplexWindow) -> SimplicialMap:
    """The map a gluing symmetry of the base induces on a window built over it.

    Raises:
        RejectedInputError: ``sym`` is not a symmetry of the window's base, or
            some image falls outside the window.
    """
    if w.base is None:
        raise RejectedInputError("window has no base triangulation", {"window": w.name})
    if not is_gluing_symmetry(w.base, sym):
        raise RejectedInputError("not a gluing symmetry of the window's base", {"window": w.name})
    present = set(w.vertices)
    assignment = {}
    for v in w.vertices:
        if not isinstance(v, NormalArc):
            raise RejectedInputError("induced maps act on windows of normal arcs", {"vertex": repr(v)})
        image = sym.map_arc(v)
        if image not in present:
            raise RejectedInputError("image of a vertex leaves the window", {"vertex": v.describe()})
        assignment[v] = image
    return SimplicialMap(source=w, target=w, assignment=assignment)


PieceProfile = Counter[tuple[PieceClass, frozenset[NormalArc]]]


def _piece_profile(node: BallNode, rename: dict[NormalArc, NormalArc] | None = None) -> PieceProfile:
    t = node.triangulation
    profile: PieceProfile = Counter()
    for piece in t.pieces():
        arcs = frozenset(node.arcs[k] for k in t.arcs_of_piece(piece))
        if rename is not None:
            arcs = frozenset(rename[a] for a in arcs)
        profile[(classify_piece(t, piece), arcs)] += 1
    return profile


def preserves_piece_classes(m: SimplicialMap, ball: FlipGraphBall) -> bool:
    """Whether ``m`` sends each triangulation of the ball to one with the same pieces.

    Every piece of every node must map to a piece of the image node bounded by
    the image arcs and of the same class.
    """
    rename = dict(m.assignment)
    for node in ball.nodes:
        image = ball.node_of(frozenset(rename[a] for a in node.arcs))
        if image is None:
            return False
        if _piece_profile(node, rename) != _piece_profile(image):
            return False
    return True


# 🔺✅🔚
