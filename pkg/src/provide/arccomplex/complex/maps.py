#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Simplicial maps between windows and exhaustive enumeration of endomorphisms."""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping

import attrs
from provide.foundation import logger

from provide.arccomplex.complex.window import ComplexWindow, Vertex
from provide.arccomplex.errors import RejectedInputError, TruncatedWindowError


@attrs.define(frozen=True)
class MapFlags:
    simplicial: bool
    injective: bool


@attrs.define(frozen=True, eq=False)
class SimplicialMap:
    """A vertex assignment from ``source`` to ``target``.

    The flags are recomputed from the assignment by :func:`validate_map`.
    """

    source: ComplexWindow = attrs.field(repr=False)
    target: ComplexWindow = attrs.field(repr=False)
    assignment: Mapping[Vertex, Vertex]

    def __call__(self, v: Vertex) -> Vertex:
        try:
            return self.assignment[v]
        except KeyError:
            raise RejectedInputError(f"vertex {v!r} is not in the map's domain", {"vertex": repr(v)}) from None

    def images(self) -> tuple[Vertex, ...]:
        """Images in source vertex order; equal tuples mean equal maps."""
        return tuple(self.assignment[v] for v in self.source.vertices)

    @property
    def flags(self) -> MapFlags:
        return validate_map(self)

    @property
    def bijective(self) -> bool:
        return self.flags.injective and set(self.assignment.values()) == set(self.target.vertices)

    def inverse(self) -> SimplicialMap:
        if not self.bijective:
            raise RejectedInputError("only bijections have inverses")
        return SimplicialMap(
            source=self.target,
            target=self.source,
            assignment={image: v for v, image in self.assignment.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.source is other.source and dict(self.assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash((id(self.source), self.images()))


def validate_map(m: SimplicialMap) -> MapFlags:
    """Recompute whether the assignment is simplicial and injective.

    Raises:
        RejectedInputError: The assignment is not total on the source vertices.
    """
    missing = [v for v in m.source.vertices if v not in m.assignment]
    if missing:
        raise RejectedInputError("assignment is not total on the source", {"missing": len(missing)})
    simplicial = all(
        m.target.contains_simplex(m.assignment[v] for v in facet) for facet in m.source.facets
    )
    injective = len(set(m.assignment.values())) == len(m.assignment)
    return MapFlags(simplicial=simplicial, injective=injective)


def identity_map(w: ComplexWindow) -> SimplicialMap:
    return SimplicialMap(source=w, target=w, assignment={v: v for v in w.vertices})


def compose(first: SimplicialMap, second: SimplicialMap) -> SimplicialMap:
    """The map ``v -> second(first(v))``."""
    return SimplicialMap(
        source=first.source,
        target=second.target,
        assignment={v: second(first(v)) for v in first.source.vertices},
    )


def map_from_function(w: ComplexWindow, f: Callable[[Vertex], Vertex]) -> SimplicialMap:
    return SimplicialMap(source=w, target=w, assignment={v: f(v) for v in w.vertices})


def is_automorphism(m: SimplicialMap) -> bool:
    """Simplicial bijection whose inverse is simplicial too."""
    flags = m.flags
    return flags.simplicial and m.bijective and m.inverse().flags.simplicial


def _require_full(w: ComplexWindow) -> None:
    if not w.complete:
        raise TruncatedWindowError(
            "exhaustive enumeration needs the whole complex, not a truncated window",
            {"vertices": len(w.vertices), "window": w.name},
        )


def _backtrack(w: ComplexWindow) -> Iterator[dict[Vertex, Vertex]]:
    """Injective assignments mapping edges to edges, vertices ordered by decreasing degree."""
    order = sorted(w.vertices, key=lambda v: (-w.degree(v), w.index_of(v)))
    assignment: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def extend(depth: int) -> Iterator[dict[Vertex, Vertex]]:
        if depth == len(order):
            yield dict(assignment)
            return
        v = order[depth]
        placed = [u for u in w.neighbours(v) if u in assignment]
        for candidate in w.vertices:
            if candidate in used or w.degree(candidate) < w.degree(v):
                continue
            if any(assignment[u] not in w.neighbours(candidate) for u in placed):
                continue
            assignment[v] = candidate
            used.add(candidate)
            yield from extend(depth + 1)
            del assignment[v]
            used.discard(candidate)

    yield from extend(0)


def enumerate_injective_endomorphisms(w: ComplexWindow) -> list[SimplicialMap]:
    """All injective simplicial self-maps of a finite complex.

    Raises:
        TruncatedWindowError: ``w`` is only a window of a larger complex.
    """
    _require_full(w)
    found = []
    for assignment in _backtrack(w):
        m = SimplicialMap(source=w, target=w, assignment=assignment)
        if m.flags.simplicial:
            found.append(m)
    logger.info("injective_endomorphisms_enumerated", window=w.name, vertices=len(w.vertices), count=len(found))
    return found


def enumerate_automorphisms(w: ComplexWindow) -> list[SimplicialMap]:
    _require_full(w)
    return [m for m in enumerate_injective_endomorphisms(w) if is_automorphism(m)]


# 🔺✅🔚
