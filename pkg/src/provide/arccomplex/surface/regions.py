#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Cutting a triangulation along a subset of its arcs."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

import attrs
import networkx as nx

from provide.arccomplex.errors import RejectedInputError
from provide.arccomplex.surface.triangulation import (
    SLOTS_PER_PIECE,
    Reversal,
    Slot,
    Triangulation,
    is_arc_slot,
    require_valid,
)

BOUNDARY_LABEL = "b"


def arc_label(arc: int) -> str:
    return f"e{arc}"


@attrs.define(frozen=True)
class Region:
    """One component of the cut surface."""

    pieces: tuple[int, ...]
    boundary_words: tuple[tuple[str, ...], ...]
    orientable: bool
    euler_characteristic: int

    @property
    def arc_sides(self) -> Counter[str]:
        return Counter(label for word in self.boundary_words for label in word if label != BOUNDARY_LABEL)

    @property
    def is_disk(self) -> bool:
        return self.orientable and self.euler_characteristic == 1 and len(self.boundary_words) == 1

    @property
    def is_hexagon(self) -> bool:
        return self.is_disk and len(self.boundary_words[0]) == SLOTS_PER_PIECE


@attrs.define(frozen=True)
class RegionReport:
    cut: frozenset[int]
    regions: tuple[Region, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum(region.euler_characteristic for region in self.regions)

    def region_of(self, piece: int) -> Region:
        for region in self.regions:
            if piece in region.pieces:
                return region
        raise RejectedInputError(f"unknown piece {piece}", {"piece": piece})


def _compress(word: list[str]) -> tuple[str, ...]:
    """Collapse cyclic runs of boundary segments into one."""
    out: list[str] = []
    for label in word:
        if label == BOUNDARY_LABEL and out and out[-1] == BOUNDARY_LABEL:
            continue
        out.append(label)
    if len(out) > 1 and out[0] == BOUNDARY_LABEL and out[-1] == BOUNDARY_LABEL:
        out.pop()
    return tuple(out)


def _trace_boundary(t: Triangulation, cut: frozenset[int]) -> list[tuple[int, list[str]]]:
    """Walk every exposed slot once; return ``(piece, labels)`` per boundary circle."""

    def exposed(slot: Slot) -> bool:
        return not is_arc_slot(slot[1]) or t.arc_at(slot) in cut

    seen: set[Slot] = set()
    circles: list[tuple[int, list[str]]] = []
    for piece in t.pieces():
        for index in range(SLOTS_PER_PIECE):
            start = (piece, index)
            if start in seen or not exposed(start):
                continue
            labels: list[str] = []
            p, j, d = piece, index, 1
            while True:
                seen.add((p, j))
                labels.append(arc_label(t.arc_at((p, j))) if is_arc_slot(j) else BOUNDARY_LABEL)
                j = (j + d) % SLOTS_PER_PIECE
                if not exposed((p, j)):
                    (q, other), reversal = t.partner((p, j))
                    at_start = d == 1
                    lands_at_start = at_start if reversal is Reversal.PARALLEL else not at_start
                    d = -1 if lands_at_start else 1
                    p, j = q, (other + d) % SLOTS_PER_PIECE
                if (p, j) == start:
                    break
            circles.append((piece, labels))
    return circles


def cut_along(t: Triangulation, arcs: Iterable[int]) -> RegionReport:
    """Cut the surface along ``arcs`` and describe the resulting regions.

    Args:
        t: A valid triangulation.
        arcs: Arc ids to cut along; all other pairings stay glued.

    Returns:
        One region per connected component of the cut surface.
    """
    require_valid(t)
    cut = frozenset(arcs)
    for arc in sorted(cut):
        t.require_arc(arc)
    uncut = [arc for arc in t.arcs() if arc not in cut]

    graph = nx.Graph()
    graph.add_nodes_from(t.pieces())
    graph.add_edges_from((t.pairings[arc].a[0], t.pairings[arc].b[0]) for arc in uncut)
    components = sorted(tuple(sorted(component)) for component in nx.connected_components(graph))
    owner = {piece: index for index, component in enumerate(components) for piece in component}

    words: dict[int, list[tuple[str, ...]]] = {index: [] for index in range(len(components))}
    for piece, labels in _trace_boundary(t, cut):
        words[owner[piece]].append(_compress(labels))

    regions = []
    for index, component in enumerate(components):
        members = set(component)
        internal = [arc for arc in uncut if t.pairings[arc].a[0] in members]
        regions.append(
            Region(
                pieces=component,
                boundary_words=tuple(words[index]),
                orientable=t.orientation_signs(internal) is not None,
                euler_characteristic=len(component) - len(internal),
            )
        )
    return RegionReport(cut=cut, regions=tuple(regions))


# 🔺✅🔚
