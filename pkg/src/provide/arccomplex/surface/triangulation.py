#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Hexagon gluing structures and their topological invariants.

A piece is a hexagon whose six slots alternate between arc-slots (even
indices) and boundary-slots (odd indices). Arc-slot ``2k`` is *side* ``k``;
boundary-slot ``2k + 1`` is *corner* ``k`` and sits between side ``k`` and
side ``k + 1``. Walking a piece in slot order, side ``k`` runs from corner
``k - 1`` to corner ``k``.

Arcs are the orbits of the slot pairing. Each pairing carries a reversal
flag telling whether the two identified sides are walked in the same
direction (parallel) or in opposite directions (antiparallel).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from enum import Enum
from typing import Any

import attrs
import networkx as nx

from provide.arccomplex.errors import RejectedInputError

SLOTS_PER_PIECE = 6
SIDES_PER_PIECE = 3

Slot = tuple[int, int]
"""A ``(piece, slot index)`` pair."""


class Reversal(str, Enum):
    """Relative direction of two identified sides."""

    PARALLEL = "parallel"
    ANTIPARALLEL = "antiparallel"


class PieceClass(str, Enum):
    """How a hexagon sits in the glued surface."""

    EMBEDDED = "embedded"
    REGULAR = "regular"
    """Two sides identified antiparallel: the piece closes up into an annulus."""
    TWISTED = "twisted"
    """Two sides identified parallel: the piece closes up into a Möbius band."""


def side_slot(side: int) -> int:
    return 2 * side


def corner_slot(corner: int) -> int:
    return 2 * corner + 1


def is_arc_slot(index: int) -> bool:
    return index % 2 == 0


@attrs.define(frozen=True)
class Pairing:
    """Identification of two arc-slots; one pairing per arc."""

    a: Slot
    b: Slot
    reversal: Reversal

    @classmethod
    def of(cls, first: Slot, second: Slot, reversal: Reversal) -> Pairing:
        """Build a pairing with its slots in canonical order."""
        low, high = sorted((tuple(first), tuple(second)))
        return cls(a=low, b=high, reversal=Reversal(reversal))  # type: ignore[arg-type]

    @property
    def self_paired(self) -> bool:
        return self.a[0] == self.b[0]


@attrs.define(frozen=True)
class Violation:
    """A single failed structural check."""

    code: str
    message: str
    location: tuple[Any, ...] | None = None


@attrs.define(frozen=True)
class SurfaceSignature:
    """Topological type of a compact surface with nonempty boundary."""

    genus: int
    boundary: int
    orientable: bool

    def __attrs_post_init__(self) -> None:
        if self.genus < 0:
            raise RejectedInputError("genus must be nonnegative", {"genus": self.genus})
        if self.boundary < 1:
            raise RejectedInputError("at least one boundary component is required", {"boundary": self.boundary})
        if not self.orientable and self.genus < 1:
            raise RejectedInputError("a nonorientable surface has genus at least 1", {"genus": self.genus})

    @property
    def euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    @property
    def expected_arc_count(self) -> int:
        """Number of arcs in any hexagon decomposition of this surface."""
        if self.orientable:
            return 6 * self.genus + 3 * self.boundary - 6
        return 3 * self.genus + 3 * self.boundary - 6

    @property
    def expected_piece_count(self) -> int:
        if self.orientable:
            return 4 * self.genus + 2 * self.boundary - 4
        return 2 * self.genus + 2 * self.boundary - 4

    @property
    def admits_hexagon_decomposition(self) -> bool:
        return self.expected_arc_count >= 3

    def describe(self) -> str:
        kind = "orientable" if self.orientable else "nonorientable"
        return f"({self.genus},{self.boundary},{kind})"


@attrs.define(frozen=True)
class Triangulation:
    """A hexagon decomposition: pieces plus a slot pairing indexed by arc id."""

    piece_count: int
    pairings: tuple[Pairing, ...] = attrs.field(converter=tuple)
    _partners: dict[Slot, tuple[Slot, Reversal, int]] = attrs.field(
        init=False, eq=False, repr=False, hash=False
    )

    def __attrs_post_init__(self) -> None:
        partners: dict[Slot, tuple[Slot, Reversal, int]] = {}
        for arc, pairing in enumerate(self.pairings):
            # Later duplicates are reported by validate_triangulation.
            partners.setdefault(pairing.a, (pairing.b, pairing.reversal, arc))
            partners.setdefault(pairing.b, (pairing.a, pairing.reversal, arc))
        object.__setattr__(self, "_partners", partners)

    @property
    def arc_count(self) -> int:
        return len(self.pairings)

    @property
    def euler_characteristic(self) -> int:
        return self.piece_count - self.arc_count

    def arcs(self) -> range:
        return range(self.arc_count)

    def pieces(self) -> range:
        return range(self.piece_count)

    def has_slot(self, slot: Slot) -> bool:
        return slot in self._partners

    def partner(self, slot: Slot) -> tuple[Slot, Reversal]:
        """Return the slot glued to ``slot`` and the reversal flag of the gluing."""
        try:
            other, reversal, _ = self._partners[slot]
        except KeyError:
            raise RejectedInputError(f"slot {slot} is not a paired arc-slot", {"slot": slot}) from None
        return other, reversal

    def arc_at(self, slot: Slot) -> int:
        try:
            return self._partners[slot][2]
        except KeyError:
            raise RejectedInputError(f"slot {slot} is not a paired arc-slot", {"slot": slot}) from None

    def arc_slots(self, arc: int) -> tuple[Slot, Slot]:
        self.require_arc(arc)
        pairing = self.pairings[arc]
        return pairing.a, pairing.b

    def is_self_paired(self, arc: int) -> bool:
        self.require_arc(arc)
        return self.pairings[arc].self_paired

    def arcs_of_piece(self, piece: int) -> tuple[int, int, int]:
        self.require_piece(piece)
        return tuple(self.arc_at((piece, side_slot(side))) for side in range(SIDES_PER_PIECE))  # type: ignore[return-value]

    def require_piece(self, piece: int) -> None:
        if not 0 <= piece < self.piece_count:
            raise RejectedInputError(f"unknown piece {piece}", {"piece": piece, "pieces": self.piece_count})

    def require_arc(self, arc: int) -> None:
        if not 0 <= arc < self.arc_count:
            raise RejectedInputError(f"unknown arc {arc}", {"arc": arc, "arcs": self.arc_count})

    def corner_step(self, piece: int, corner: int, direction: int) -> tuple[int, int, int]:
        """Slide along the boundary from a corner across the next arc endpoint.

        ``direction`` is ``+1`` to leave the corner through the start of side
        ``corner + 1`` and ``-1`` to leave through the end of side ``corner``.
        Returns the corner reached on the other side of the arc endpoint and
        the direction in which it is entered.
        """
        if direction > 0:
            side, at_start = (corner + 1) % SIDES_PER_PIECE, True
        else:
            side, at_start = corner, False
        (other_piece, other_slot), reversal = self.partner((piece, side_slot(side)))
        other_side = other_slot // 2
        lands_at_start = at_start if reversal is Reversal.PARALLEL else not at_start
        if lands_at_start:
            return other_piece, (other_side - 1) % SIDES_PER_PIECE, -1
        return other_piece, other_side, 1

    def boundary_cycles(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Partition all corners into the boundary components they lie on."""
        seen: set[tuple[int, int]] = set()
        cycles: list[tuple[tuple[int, int], ...]] = []
        limit = self.piece_count * SIDES_PER_PIECE
        for piece in self.pieces():
            for corner in range(SIDES_PER_PIECE):
                if (piece, corner) in seen:
                    continue
                cycle = []
                state = (piece, corner, 1)
                while (state[0], state[1]) not in seen:
                    seen.add((state[0], state[1]))
                    cycle.append((state[0], state[1]))
                    state = self.corner_step(*state)
                    if len(cycle) > limit:
                        raise RejectedInputError("boundary tracing did not close up")
                cycles.append(tuple(cycle))
        return tuple(cycles)

    def orientation_signs(self, uncut: Iterable[int] | None = None) -> dict[int, int] | None:
        """Solve the sign system over the given pairings, or ``None`` if unsolvable.

        Antiparallel pairings between distinct pieces force equal signs,
        parallel pairings force opposite signs and a parallel self-pairing
        has no solution.
        """
        arcs = list(self.arcs() if uncut is None else uncut)
        constraints: dict[int, list[tuple[int, int]]] = {piece: [] for piece in self.pieces()}
        for arc in arcs:
            pairing = self.pairings[arc]
            flip = -1 if pairing.reversal is Reversal.PARALLEL else 1
            if pairing.self_paired:
                if flip < 0:
                    return None
                continue
            constraints[pairing.a[0]].append((pairing.b[0], flip))
            constraints[pairing.b[0]].append((pairing.a[0], flip))
        signs: dict[int, int] = {}
        for start in self.pieces():
            if start in signs:
                continue
            signs[start] = 1
            queue = deque([start])
            while queue:
                piece = queue.popleft()
                for neighbour, flip in constraints[piece]:
                    wanted = signs[piece] * flip
                    if neighbour not in signs:
                        signs[neighbour] = wanted
                        queue.append(neighbour)
                    elif signs[neighbour] != wanted:
                        return None
        return signs

    def adjacency_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.pieces())
        for arc, pairing in enumerate(self.pairings):
            graph.add_edge(pairing.a[0], pairing.b[0], arc=arc)
        return graph


def iter_arc_slots(piece_count: int) -> Iterator[Slot]:
    for piece in range(piece_count):
        for side in range(SIDES_PER_PIECE):
            yield piece, side_slot(side)


def validate_triangulation(t: Triangulation) -> list[Violation]:
    """Check every structural invariant of a hexagon decomposition.

    Returns an empty list for a valid triangulation; each violation names the
    offending piece or slot.
    """
    violations: list[Violation] = []
    if t.piece_count < 1:
        return [Violation("no-pieces", "a triangulation needs at least one piece")]

    uses: dict[Slot, int] = {}
    for arc, pairing in enumerate(t.pairings):
        for slot in (pairing.a, pairing.b):
            piece, index = slot
            if not 0 <= piece < t.piece_count or not 0 <= index < SLOTS_PER_PIECE:
                violations.append(Violation("unknown-slot", f"arc {arc} uses nonexistent slot {slot}", (arc, slot)))
            elif not is_arc_slot(index):
                violations.append(
                    Violation("boundary-slot-paired", f"arc {arc} pairs boundary-slot {slot}", (arc, slot))
                )
            uses[slot] = uses.get(slot, 0) + 1
        if pairing.a == pairing.b:
            violations.append(Violation("self-pairing", f"slot {pairing.a} is paired with itself", (arc, pairing.a)))

    for slot in iter_arc_slots(t.piece_count):
        count = uses.get(slot, 0)
        if count == 0:
            violations.append(Violation("unpaired-slot", f"arc-slot {slot} is unpaired", slot))
        elif count > 1:
            violations.append(Violation("multiply-paired-slot", f"arc-slot {slot} is paired {count} times", slot))
    if violations:
        return violations

    if not nx.is_connected(t.adjacency_graph()):
        components = sorted(sorted(component) for component in nx.connected_components(t.adjacency_graph()))
        violations.append(
            Violation("disconnected", f"pieces fall into {len(components)} components", tuple(map(tuple, components)))
        )
    return violations


def require_valid(t: Triangulation) -> None:
    violations = validate_triangulation(t)
    if violations:
        raise RejectedInputError(
            f"invalid triangulation: {violations[0].message}",
            {"violations": [violation.code for violation in violations]},
        )


def boundary_cycles(t: Triangulation) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Corners grouped by the boundary component they lie on."""
    require_valid(t)
    return t.boundary_cycles()


def classify_surface(t: Triangulation) -> SurfaceSignature:
    """Recover the topological type of the glued surface."""
    require_valid(t)
    chi = t.euler_characteristic
    orientable = t.orientation_signs() is not None
    boundary = len(t.boundary_cycles())
    if orientable:
        genus2 = 2 - chi - boundary
        if genus2 % 2:
            raise RejectedInputError("odd orientable genus defect", {"chi": chi, "boundary": boundary})
        genus = genus2 // 2
    else:
        genus = 2 - chi - boundary
    return SurfaceSignature(genus=genus, boundary=boundary, orientable=orientable)


def classify_piece(t: Triangulation, piece: int) -> PieceClass:
    """Classify a piece as embedded, annular or Möbius."""
    t.require_piece(piece)
    for side in range(SIDES_PER_PIECE):
        arc = t.arc_at((piece, side_slot(side)))
        pairing = t.pairings[arc]
        if pairing.self_paired:
            if pairing.reversal is Reversal.PARALLEL:
                return PieceClass.TWISTED
            return PieceClass.REGULAR
    return PieceClass.EMBEDDED


def piece_class_counts(t: Triangulation) -> dict[PieceClass, int]:
    counts = dict.fromkeys(PieceClass, 0)
    for piece in t.pieces():
        counts[classify_piece(t, piece)] += 1
    return counts


# 🔺✅🔚
