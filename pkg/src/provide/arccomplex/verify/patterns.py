#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Configuration patterns and the search for arcs realising them.

A pattern names a few arcs and asks for intersection numbers between pairs of
them and for groups of them to bound a single piece of a given class. A
witness is an assignment of arcs from a flip-graph ball, together with a node
of the ball whose triangulation carries every requested piece.

Pattern files are JSON::

    {
      "name": "twisted-pair",
      "labels": ["a", "b"],
      "intersections": [{"pair": ["a", "b"], "value": 0}],
      "triangles": [{"arcs": ["a", "b"], "class": "twisted"}]
    }
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import permutations
import json
from pathlib import Path
from typing import Any

import attrs
from provide.foundation import logger

from provide.arccomplex.arcs.normal import NormalArc, normal_arc_to_dict
from provide.arccomplex.arcs.transport import intersection_number
from provide.arccomplex.errors import InconsistentPatternError, RejectedInputError
from provide.arccomplex.flips.ball import DEFAULT_MAX_NODES, BallNode, FlipGraphBall, flip_graph_ball
from provide.arccomplex.surface.builder import build_surface
from provide.arccomplex.surface.io import triangulation_to_dict
from provide.arccomplex.surface.regions import arc_label, cut_along
from provide.arccomplex.surface.triangulation import PieceClass, Triangulation, Violation

TRIANGLE_SIZES = {PieceClass.EMBEDDED: 3, PieceClass.REGULAR: 2, PieceClass.TWISTED: 2}


@attrs.define(frozen=True)
class IntersectionRequirement:
    pair: tuple[str, str]
    value: int


@attrs.define(frozen=True)
class TriangleRequirement:
    arcs: tuple[str, ...]
    piece_class: PieceClass


@attrs.define(frozen=True)
class ConfigurationPattern:
    """Labelled arcs with required intersection numbers and co-triangles."""

    name: str
    labels: tuple[str, ...]
    intersections: tuple[IntersectionRequirement, ...] = ()
    triangles: tuple[TriangleRequirement, ...] = ()

    def required(self, x: str, y: str) -> int | None:
        for requirement in self.intersections:
            if set(requirement.pair) == {x, y}:
                return requirement.value
        return None


def pattern_violations(pattern: ConfigurationPattern) -> list[Violation]:
    """Every reason the pattern cannot be realised by any arcs at all."""
    violations: list[Violation] = []
    known = set(pattern.labels)
    if not pattern.labels:
        violations.append(Violation("labels", "a pattern needs at least one label"))
    if len(known) != len(pattern.labels):
        violations.append(Violation("labels", "labels must be distinct"))

    values: dict[frozenset[str], int] = {}
    for requirement in pattern.intersections:
        pair = frozenset(requirement.pair)
        where = "-".join(requirement.pair)
        if not pair <= known:
            violations.append(Violation("unknown-label", "intersection names an unknown label", (where,)))
        if len(pair) != 2:
            violations.append(Violation("self-intersection", "an intersection needs two distinct labels", (where,)))
        if requirement.value not in (0, 1):
            violations.append(Violation("value", "intersection numbers must be 0 or 1", (where,)))
        if values.setdefault(pair, requirement.value) != requirement.value:
            violations.append(Violation("contradiction", "pair required with two different values", (where,)))

    for triangle in pattern.triangles:
        where = "-".join(triangle.arcs)
        if not set(triangle.arcs) <= known:
            violations.append(Violation("unknown-label", "triangle names an unknown label", (where,)))
        if len(set(triangle.arcs)) != len(triangle.arcs):
            violations.append(Violation("triangle-size", "triangle labels must be distinct", (where,)))
        if len(triangle.arcs) != TRIANGLE_SIZES[triangle.piece_class]:
            violations.append(
                Violation(
                    "triangle-size",
                    f"a {triangle.piece_class.value} piece is bounded by "
                    f"{TRIANGLE_SIZES[triangle.piece_class]} distinct arcs",
                    (where,),
                )
            )
        for x, y in permutations(triangle.arcs, 2):
            if values.get(frozenset((x, y))) == 1:
                violations.append(
                    Violation("co-triangle-crossing", "arcs bounding one piece are disjoint", (f"{x}-{y}",))
                )
                break
    return violations


def check_pattern(pattern: ConfigurationPattern) -> ConfigurationPattern:
    """Return ``pattern`` unchanged if it is internally consistent.

    Raises:
        InconsistentPatternError: Some requirement contradicts another.
    """
    violations = pattern_violations(pattern)
    if violations:
        raise InconsistentPatternError(
            f"pattern {pattern.name!r} is inconsistent: {violations[0].message}",
            {"pattern": pattern.name, "violations": [v.code for v in violations]},
        )
    return pattern


def pattern_from_dict(data: dict[str, Any], name: str = "pattern") -> ConfigurationPattern:
    try:
        return ConfigurationPattern(
            name=str(data.get("name", name)),
            labels=tuple(str(label) for label in data["labels"]),
            intersections=tuple(
                IntersectionRequirement(
                    pair=(str(item["pair"][0]), str(item["pair"][1])),
                    value=int(item["value"]),
                )
                for item in data.get("intersections", [])
            ),
            triangles=tuple(
                TriangleRequirement(
                    arcs=tuple(str(x) for x in item["arcs"]),
                    piece_class=PieceClass(item["class"]),
                )
                for item in data.get("triangles", [])
            ),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise RejectedInputError(f"malformed pattern document: {e}", {"error": str(e)}) from e


def pattern_to_dict(pattern: ConfigurationPattern) -> dict[str, Any]:
    return {
        "name": pattern.name,
        "labels": list(pattern.labels),
        "intersections": [{"pair": list(r.pair), "value": r.value} for r in pattern.intersections],
        "triangles": [{"arcs": list(t.arcs), "class": t.piece_class.value} for t in pattern.triangles],
    }


def load_pattern(path: Path) -> ConfigurationPattern:
    """Read and check a pattern file.

    Raises:
        RejectedInputError: The file is unreadable or malformed.
        InconsistentPatternError: The pattern contradicts itself.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise RejectedInputError(f"cannot read {path}: {e}", {"path": str(path)}) from e
    except json.JSONDecodeError as e:
        raise RejectedInputError(f"invalid JSON in {path}: {e}", {"path": str(path)}) from e
    if not isinstance(data, dict):
        raise RejectedInputError("pattern document must be a JSON object", {"path": str(path)})
    return check_pattern(pattern_from_dict(data, name=path.stem))


def _pair_pattern(name: str, piece_class: PieceClass) -> ConfigurationPattern:
    return ConfigurationPattern(
        name=name,
        labels=("a", "b"),
        intersections=(IntersectionRequirement(("a", "b"), 0),),
        triangles=(TriangleRequirement(("a", "b"), piece_class),),
    )


BUILTIN_PATTERNS: dict[str, ConfigurationPattern] = {
    "embedded-triple": ConfigurationPattern(
        name="embedded-triple",
        labels=("a", "b", "c"),
        intersections=(
            IntersectionRequirement(("a", "b"), 0),
            IntersectionRequirement(("a", "c"), 0),
            IntersectionRequirement(("b", "c"), 0),
        ),
        triangles=(TriangleRequirement(("a", "b", "c"), PieceClass.EMBEDDED),),
    ),
    "regular-pair": _pair_pattern("regular-pair", PieceClass.REGULAR),
    "twisted-pair": _pair_pattern("twisted-pair", PieceClass.TWISTED),
    "crossing-pair": ConfigurationPattern(
        name="crossing-pair",
        labels=("a", "b"),
        intersections=(IntersectionRequirement(("a", "b"), 1),),
    ),
}


def builtin_pattern(name: str) -> ConfigurationPattern:
    try:
        return BUILTIN_PATTERNS[name]
    except KeyError:
        raise RejectedInputError(
            f"unknown built-in pattern {name!r}", {"pattern": name, "known": sorted(BUILTIN_PATTERNS)}
        ) from None


@attrs.define(frozen=True)
class Witness:
    """Arcs realising a pattern, written over the ball's root.

    ``node`` is a triangulation of the ball containing every requested piece.
    """

    pattern: str
    node: int
    depth: int
    triangulation: Triangulation = attrs.field(repr=False)
    root: Triangulation = attrs.field(repr=False)
    assignment: dict[str, NormalArc] = attrs.field(repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pattern": self.pattern,
            "node": self.node,
            "depth": self.depth,
            "root": triangulation_to_dict(self.root),
            "triangulation": triangulation_to_dict(self.triangulation),
            "arcs": {label: normal_arc_to_dict(a) for label, a in sorted(self.assignment.items())},
        }


def node_pieces(node: BallNode) -> list[tuple[PieceClass, tuple[NormalArc, ...]]]:
    """Class and distinct arcs of every piece of a node, read off the cut surface.

    Cutting along every arc leaves one hexagon per piece; an arc showing up
    twice on one hexagon is glued to itself, and regluing it alone tells an
    annulus from a Möbius band.
    """
    t = node.triangulation
    labels = {arc_label(k): k for k in t.arcs()}
    report = cut_along(t, t.arcs())
    pieces = []
    for region in report.regions:
        sides = region.arc_sides
        arcs = tuple(labels[label] for label in sorted(sides, key=lambda label: labels[label]))
        doubled = [labels[label] for label, count in sides.items() if count == 2]
        if not doubled:
            piece_class = PieceClass.EMBEDDED
        else:
            glued = cut_along(t, [k for k in t.arcs() if k != doubled[0]]).region_of(region.pieces[0])
            piece_class = PieceClass.REGULAR if glued.orientable else PieceClass.TWISTED
        pieces.append((piece_class, tuple(node.arcs[k] for k in arcs)))
    return pieces


class _Search:
    def __init__(self, pattern: ConfigurationPattern, ball: FlipGraphBall) -> None:
        self.pattern = pattern
        self.candidates = sorted(ball.distinct_arcs(), key=lambda a: a.key)
        self._numbers: dict[frozenset[NormalArc], int] = {}

    def number(self, a: NormalArc, b: NormalArc) -> int:
        pair = frozenset((a, b))
        if pair not in self._numbers:
            self._numbers[pair] = intersection_number(a, b)
        return self._numbers[pair]

    def fits(self, label: str, arc: NormalArc, assignment: dict[str, NormalArc]) -> bool:
        if arc in assignment.values():
            return False
        for other, placed in assignment.items():
            wanted = self.pattern.required(label, other)
            if wanted is not None and self.number(arc, placed) != wanted:
                return False
        return True

    def place_triangles(
        self, pieces: list[tuple[PieceClass, tuple[NormalArc, ...]]], index: int, assignment: dict[str, NormalArc]
    ) -> Iterator[dict[str, NormalArc]]:
        if index == len(self.pattern.triangles):
            yield from self.place_rest(assignment)
            return
        triangle = self.pattern.triangles[index]
        for piece_class, arcs in pieces:
            if piece_class is not triangle.piece_class or len(arcs) != len(triangle.arcs):
                continue
            for ordering in permutations(arcs):
                extended = dict(assignment)
                ok = True
                for label, arc in zip(triangle.arcs, ordering, strict=True):
                    if label in extended:
                        ok = extended[label] == arc
                    elif self.fits(label, arc, extended):
                        extended[label] = arc
                    else:
                        ok = False
                    if not ok:
                        break
                if ok:
                    yield from self.place_triangles(pieces, index + 1, extended)

    def place_rest(self, assignment: dict[str, NormalArc]) -> Iterator[dict[str, NormalArc]]:
        free = [label for label in self.pattern.labels if label not in assignment]
        if not free:
            yield assignment
            return
        label = free[0]
        for arc in self.candidates:
            if self.fits(label, arc, assignment):
                yield from self.place_rest({**assignment, label: arc})


def search_ball(pattern: ConfigurationPattern, ball: FlipGraphBall) -> Witness | None:
    """First witness in node order, or ``None`` when the ball holds none."""
    check_pattern(pattern)
    search = _Search(pattern, ball)
    nodes = ball.nodes if pattern.triangles else ball.nodes[:1]
    for node in nodes:
        pieces = node_pieces(node) if pattern.triangles else []
        for assignment in search.place_triangles(pieces, 0, {}):
            logger.info("configuration_found", pattern=pattern.name, node=node.index, depth=node.depth)
            return Witness(
                pattern=pattern.name,
                node=node.index,
                depth=node.depth,
                triangulation=node.triangulation,
                root=ball.root,
                assignment=assignment,
            )
    if ball.truncated:
        logger.warning("configuration_search_truncated", pattern=pattern.name, notes=ball.truncation)
    logger.info("configuration_not_found", pattern=pattern.name, nodes=len(ball.nodes))
    return None


def find_configuration(
    pattern: ConfigurationPattern,
    genus: int,
    boundary: int,
    radius: int,
    orientable: bool = False,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> Witness | None:
    """Search the flip-graph ball of radius ``radius`` for arcs realising ``pattern``.

    Not finding a witness is a result, not an error.

    Raises:
        InconsistentPatternError: The pattern contradicts itself.
        UnsupportedSignatureError: The surface has no hexagon decomposition.
    """
    check_pattern(pattern)
    ball = flip_graph_ball(build_surface(genus, boundary, orientable), radius, max_nodes=max_nodes)
    return search_ball(pattern, ball)


# 🔺✅🔚
