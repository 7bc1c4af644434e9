#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Normal coordinates of essential arcs relative to a hexagon decomposition.

An arc in normal position meets each piece in segments joining two of its six
slots. Its coordinates are, per piece, the number of segments of each of the
15 types (one per unordered slot pair) together with the two boundary-slots
holding its endpoints.

Internally an arc is carried as a *route*: the ordered visits it makes to the
pieces, each entering and leaving through a :class:`Port`. Routes are reduced
to a canonical form by cancelling backtracks across an arc and by sliding
endpoints past arc endpoints along the boundary (end wiggles). Base arcs of
the triangulation are single corner-to-corner visits; of the two pieces
adjacent to such an arc the representation with the smaller coordinates wins.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import Any, NamedTuple

import attrs

from provide.arccomplex.errors import RejectedInputError
from provide.arccomplex.surface.triangulation import (
    SIDES_PER_PIECE,
    SLOTS_PER_PIECE,
    Reversal,
    Slot,
    Triangulation,
    Violation,
    is_arc_slot,
)

CORNER = 0
SIDE = 1

SEGMENT_TYPES: tuple[tuple[int, int], ...] = tuple(combinations(range(SLOTS_PER_PIECE), 2))
SEGMENT_INDEX: dict[tuple[int, int], int] = {pair: index for index, pair in enumerate(SEGMENT_TYPES)}


class Port(NamedTuple):
    """A side or corner of a piece through which a route passes."""

    kind: int
    index: int

    @property
    def slot(self) -> int:
        return 2 * self.index + 1 if self.kind == CORNER else 2 * self.index

    @classmethod
    def from_slot(cls, slot: int) -> Port:
        slot %= SLOTS_PER_PIECE
        return cls(SIDE, slot // 2) if is_arc_slot(slot) else cls(CORNER, slot // 2)


def corner(index: int) -> Port:
    return Port(CORNER, index % SIDES_PER_PIECE)


def side(index: int) -> Port:
    return Port(SIDE, index % SIDES_PER_PIECE)


class Visit(NamedTuple):
    piece: int
    entry: Port
    exit: Port

    def reversed(self) -> Visit:
        return Visit(self.piece, self.exit, self.entry)

    @property
    def segment_type(self) -> int:
        low, high = sorted((self.entry.slot, self.exit.slot))
        return SEGMENT_INDEX[(low, high)]


Route = tuple[Visit, ...]


def reverse_route(route: Sequence[Visit]) -> list[Visit]:
    return [visit.reversed() for visit in reversed(route)]


def _is_backtrack(visit: Visit) -> bool:
    return visit.entry == visit.exit and visit.entry.kind == SIDE


def _cancel_backtracks(route: Sequence[Visit]) -> list[Visit]:
    """Remove bigons formed by crossing the same arc twice in a row."""
    out: list[Visit] = []
    for visit in route:
        if out and _is_backtrack(out[-1]):
            if len(out) < 2:
                raise RejectedInputError("route starts with a backtrack", {"visit": out[-1]})
            out.pop()
            prev = out.pop()
            if prev.piece != visit.piece:
                raise RejectedInputError("route does not close up across a backtrack", {"visit": visit})
            visit = Visit(prev.piece, prev.entry, visit.exit)
        out.append(visit)
    return out


def _remove_start_wiggle(t: Triangulation, route: list[Visit]) -> bool:
    """Slide the start endpoint past one arc endpoint if the first segment allows it."""
    first = route[0]
    if first.entry.kind != CORNER or first.exit.kind != SIDE:
        return False
    c, s = first.entry.index, first.exit.index
    if s == (c + 1) % SIDES_PER_PIECE:
        direction = 1
    elif s == c:
        direction = -1
    else:
        return False
    piece, new_corner, _ = t.corner_step(first.piece, c, direction)
    following = route[1]
    if following.piece != piece:
        raise RejectedInputError("route is not connected through its first arc", {"visit": first})
    route[:2] = [Visit(piece, corner(new_corner), following.exit)]
    if len(route) == 1 and route[0].exit == route[0].entry:
        raise RejectedInputError("arc is inessential: it cuts off a disk along the boundary")
    return True


def reduce_route(t: Triangulation, route: Iterable[Visit]) -> list[Visit]:
    """Bring a route into canonical normal form."""
    visits = list(route)
    if not visits:
        raise RejectedInputError("empty route")
    if visits[0].entry.kind != CORNER or visits[-1].exit.kind != CORNER:
        raise RejectedInputError("a route must start and end on the boundary")
    for visit in visits:
        t.require_piece(visit.piece)

    visits = _cancel_backtracks(visits)
    changed = True
    while changed:
        changed = False
        while len(visits) > 1 and _remove_start_wiggle(t, visits):
            changed = True
        visits = reverse_route(visits)
        while len(visits) > 1 and _remove_start_wiggle(t, visits):
            changed = True
        visits = reverse_route(visits)

    if len(visits) == 1 and visits[0].entry == visits[0].exit:
        raise RejectedInputError("arc is inessential: both ends lie in one corner")
    return visits


def _orient(route: list[Visit]) -> list[Visit]:
    start = (route[0].piece, route[0].entry.slot)
    end = (route[-1].piece, route[-1].exit.slot)
    return reverse_route(route) if end < start else route


def _edge_side(visit: Visit) -> int:
    """Side parallel to a corner-to-corner visit."""
    c, d = visit.entry.index, visit.exit.index
    return d if d == (c + 1) % SIDES_PER_PIECE else c


@attrs.define(frozen=True, cache_hash=True)
class NormalArc:
    """An essential arc in canonical normal coordinates over ``base``.

    Equality and hashing use the coordinates only, so arcs over equal bases
    compare by isotopy class.
    """

    base: Triangulation = attrs.field(eq=False, repr=False)
    segments: tuple[tuple[int, ...], ...] = attrs.field(repr=False)
    endpoints: tuple[Slot, Slot]
    route: Route = attrs.field(eq=False, repr=False, default=())

    @classmethod
    def from_route(cls, base: Triangulation, route: Iterable[Visit]) -> NormalArc:
        """Canonicalize a route and compute its coordinates.

        Raises:
            RejectedInputError: The route is malformed or the arc is inessential.
        """
        visits = reduce_route(base, route)
        if len(visits) == 1:
            visit = visits[0]
            k = _edge_side(visit)
            (other, other_slot), _ = base.partner((visit.piece, 2 * k))
            k2 = other_slot // 2
            twin = Visit(other, corner(k2 - 1), corner(k2))
            return min((cls._build(base, [visit]), cls._build(base, [twin])), key=lambda arc: arc.key)
        return cls._build(base, visits)

    @classmethod
    def _build(cls, base: Triangulation, visits: list[Visit]) -> NormalArc:
        visits = _orient(visits)
        rows = [[0] * len(SEGMENT_TYPES) for _ in base.pieces()]
        for visit in visits:
            rows[visit.piece][visit.segment_type] += 1
        start = (visits[0].piece, visits[0].entry.slot)
        end = (visits[-1].piece, visits[-1].exit.slot)
        return cls(
            base=base,
            segments=tuple(tuple(row) for row in rows),
            endpoints=(start, end),
            route=tuple(visits),
        )

    @property
    def key(self) -> tuple[tuple[tuple[int, ...], ...], tuple[Slot, Slot]]:
        return self.segments, self.endpoints

    @property
    def crossing_weight(self) -> int:
        """Number of times the arc crosses arcs of its base."""
        return len(self.route) - 1

    def crossings_with(self, arc: int) -> int:
        self.base.require_arc(arc)
        return sum(1 for visit in self.route[:-1] if self.base.arc_at((visit.piece, visit.exit.slot)) == arc)

    def crossed_arcs(self) -> list[int]:
        """Arcs crossed in order from the start endpoint."""
        return [self.base.arc_at((visit.piece, visit.exit.slot)) for visit in self.route[:-1]]

    @property
    def base_arc_id(self) -> int | None:
        """The arc of the base this arc is isotopic to, if any."""
        if len(self.route) != 1:
            return None
        visit = self.route[0]
        return self.base.arc_at((visit.piece, 2 * _edge_side(visit)))

    def describe(self) -> str:
        arc_id = self.base_arc_id
        if arc_id is not None:
            return f"e{arc_id}"
        (p0, s0), (p1, s1) = self.endpoints
        return f"arc[{p0}:{s0}->{p1}:{s1}, w={self.crossing_weight}]"


def base_arc(t: Triangulation, arc: int) -> NormalArc:
    """The normal form of an arc of ``t`` itself."""
    t.require_arc(arc)
    piece, slot = t.pairings[arc].a
    k = slot // 2
    return NormalArc.from_route(t, [Visit(piece, corner(k - 1), corner(k))])


def arcs_equal(a: NormalArc, b: NormalArc) -> bool:
    """Decide whether two arcs over the same base are isotopic."""
    if a.base is not b.base and a.base != b.base:
        raise RejectedInputError("arcs are expressed over different triangulations; transport first")
    return a == b


def crossing_weight(a: NormalArc) -> int:
    return a.crossing_weight


def crossings_with(a: NormalArc, arc: int) -> int:
    return a.crossings_with(arc)


# Tracing coordinates back into a route


class _TraceError(Exception):
    def __init__(self, code: str, message: str, location: tuple[Any, ...] | None = None) -> None:
        super().__init__(message)
        self.violation = Violation(code, message, location)


def _count(row: Sequence[int], a: int, b: int) -> int:
    low, high = sorted((a % SLOTS_PER_PIECE, b % SLOTS_PER_PIECE))
    return row[SEGMENT_INDEX[(low, high)]]


def _side_blocks(row: Sequence[int], s: int) -> tuple[int, int, int, int, int]:
    """Segment counts along side ``s`` in order from its start to its end.

    The blocks go to corner ``s - 1``, around corner ``s - 1`` to side ``s - 1``,
    to the opposite corner, around corner ``s`` to side ``s + 1`` and to corner ``s``.
    """
    slot = 2 * s
    return (
        _count(row, slot, slot - 1),
        _count(row, slot, slot - 2),
        _count(row, slot, slot + 3),
        _count(row, slot, slot + 2),
        _count(row, slot, slot + 1),
    )


def side_multiplicity(row: Sequence[int], s: int) -> int:
    return sum(_side_blocks(row, s))


def _trace(
    t: Triangulation, segments: Sequence[Sequence[int]], start: Slot
) -> tuple[list[Visit], Slot, list[list[int]]]:
    remaining = [list(row) for row in segments]

    def take(piece: int, a: int, b: int) -> None:
        index = SEGMENT_INDEX[tuple(sorted((a % SLOTS_PER_PIECE, b % SLOTS_PER_PIECE)))]  # type: ignore[index]
        remaining[piece][index] -= 1
        if remaining[piece][index] < 0:
            raise _TraceError("connectivity", f"trace reuses a missing segment in piece {piece}", (piece,))

    piece, slot = start
    row = segments[piece]
    options = [j for j in range(SLOTS_PER_PIECE) if j != slot and _count(row, slot, j) > 0]
    if not options:
        raise _TraceError("connectivity", f"no segment leaves endpoint {start}", start)
    j = options[0]
    take(piece, slot, j)
    c = slot // 2
    if not is_arc_slot(j):
        return [Visit(piece, corner(c), corner(j // 2))], (piece, j), remaining

    s = j // 2
    w_start, c_start, _, _, _ = _side_blocks(row, s)
    m = side_multiplicity(row, s)
    if c == (s - 1) % SIDES_PER_PIECE:
        pos = 0
    elif c == (s + 1) % SIDES_PER_PIECE:
        pos = w_start + c_start
    else:
        pos = m - 1
    visits = [Visit(piece, corner(c), side(s))]

    limit = sum(map(sum, segments)) + 1
    for _ in range(limit):
        (piece, other_slot), reversal = t.partner((piece, 2 * s))
        s = other_slot // 2
        row = segments[piece]
        if side_multiplicity(row, s) != m:
            raise _TraceError("matching", f"segment counts differ across slot {(piece, other_slot)}", (piece, other_slot))
        if reversal is Reversal.ANTIPARALLEL:
            pos = m - 1 - pos
        w_start, c_start, opposite, c_end, _ = _side_blocks(row, s)
        m_next = m
        if pos < w_start:
            target = corner(s - 1)
        elif pos < w_start + c_start:
            rank = pos - w_start
            target = side(s - 1)
            m_next = side_multiplicity(row, target.index)
            pos = m_next - 1 - _side_blocks(row, target.index)[4] - rank
        elif pos < w_start + c_start + opposite:
            target = corner(s + 1)
        elif pos < w_start + c_start + opposite + c_end:
            rank = w_start + c_start + opposite + c_end - 1 - pos
            target = side(s + 1)
            m_next = side_multiplicity(row, target.index)
            pos = _side_blocks(row, target.index)[0] + rank
        else:
            target = corner(s)
        take(piece, 2 * s, target.slot)
        visits.append(Visit(piece, side(s), target))
        if target.kind == CORNER:
            return visits, (piece, target.slot), remaining
        s, m = target.index, m_next
    raise _TraceError("connectivity", "trace does not terminate")


def _crossing(a: tuple[int, int], b: tuple[int, int]) -> bool:
    if set(a) & set(b):
        return False
    a0, a1 = a
    return (a0 < b[0] < a1) != (a0 < b[1] < a1)


def validate_normal_arc(a: NormalArc) -> list[Violation]:
    """Check the coordinate invariants of ``a`` against its base."""
    return validate_coordinates(a.base, a.segments, a.endpoints)


def validate_coordinates(
    t: Triangulation, segments: Sequence[Sequence[int]], endpoints: Sequence[Slot]
) -> list[Violation]:
    violations: list[Violation] = []
    if len(segments) != t.piece_count or any(len(row) != len(SEGMENT_TYPES) for row in segments):
        return [Violation("shape", "one 15-entry count vector per piece is required")]
    if any(value < 0 for row in segments for value in row):
        return [Violation("shape", "segment counts must be nonnegative")]
    if len(endpoints) != 2:
        return [Violation("shape", "an arc has exactly two endpoints")]
    for piece, slot in endpoints:
        if not 0 <= piece < t.piece_count or is_arc_slot(slot) or not 0 <= slot < SLOTS_PER_PIECE:
            return [Violation("shape", f"endpoint {(piece, slot)} is not a boundary-slot", (piece, slot))]

    for arc, pairing in enumerate(t.pairings):
        (p, sa), (q, sb) = pairing.a, pairing.b
        if side_multiplicity(segments[p], sa // 2) != side_multiplicity(segments[q], sb // 2):
            violations.append(Violation("matching", f"segment counts differ across arc {arc}", (arc,)))

    declared: dict[Slot, int] = {}
    for endpoint in endpoints:
        declared[tuple(endpoint)] = declared.get(tuple(endpoint), 0) + 1  # type: ignore[index]
    for piece in t.pieces():
        for c in range(SIDES_PER_PIECE):
            slot = 2 * c + 1
            ends = sum(_count(segments[piece], slot, j) for j in range(SLOTS_PER_PIECE) if j != slot)
            if ends != declared.get((piece, slot), 0):
                violations.append(
                    Violation("endpoints", f"corner {(piece, slot)} has {ends} segment ends", (piece, slot))
                )

    for piece in t.pieces():
        used = [SEGMENT_TYPES[i] for i, value in enumerate(segments[piece]) if value > 0]
        for first, second in combinations(used, 2):
            if _crossing(first, second):
                violations.append(
                    Violation("interleaving", f"segments {first} and {second} cross in piece {piece}", (piece,))
                )
    if violations:
        return violations

    try:
        route, end, remaining = _trace(t, segments, tuple(endpoints[0]))  # type: ignore[arg-type]
    except _TraceError as e:
        return [e.violation]
    if end != tuple(endpoints[1]) or any(value for row in remaining for value in row):
        return [Violation("connectivity", "segments do not form a single arc between the endpoints")]
    try:
        reduce_route(t, route)
    except RejectedInputError as e:
        return [Violation("essential", e.message)]
    return []


def normal_arc_to_dict(a: NormalArc) -> dict[str, Any]:
    return {
        "segments": [list(row) for row in a.segments],
        "endpoints": [list(endpoint) for endpoint in a.endpoints],
    }


def normal_arc_from_dict(t: Triangulation, data: dict[str, Any]) -> NormalArc:
    """Rebuild an arc from its coordinates, rejecting anything that is not a normal arc."""
    try:
        segments = [[int(value) for value in row] for row in data["segments"]]
        endpoints = [(int(piece), int(slot)) for piece, slot in data["endpoints"]]
    except (KeyError, TypeError, ValueError) as e:
        raise RejectedInputError(f"malformed arc document: {e}") from e
    violations = validate_coordinates(t, segments, endpoints)
    if violations:
        raise RejectedInputError(
            f"invalid normal arc: {violations[0].message}", {"violations": [v.code for v in violations]}
        )
    route, _, _ = _trace(t, segments, endpoints[0])
    return NormalArc.from_route(t, route)


# 🔺✅🔚
