#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Finite windows of the arc complex.

A window stores the maximal simplices it knows about. Each vertex is
*trusted* when its star is known to be complete, so that its degree and link
inside the window are those of the whole complex.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable

import attrs
import networkx as nx
from networkx.algorithms import isomorphism
from provide.foundation import logger

from provide.arccomplex.errors import RejectedInputError
from provide.arccomplex.flips.ball import DEFAULT_MAX_NODES, FlipGraphBall, flip_graph_ball
from provide.arccomplex.surface.builder import build_surface
from provide.arccomplex.surface.triangulation import Triangulation

Vertex = Hashable
Simplex = frozenset[Vertex]

DEFAULT_MARGIN = 2


@attrs.define(frozen=True, eq=False)
class ComplexWindow:
    """Maximal simplices of a finite piece of an arc complex.

    Attributes:
        vertices: Vertices in a fixed deterministic order.
        facets: The known maximal simplices.
        trusted: Vertices whose star lies entirely inside the window.
        complete: True when the window is the whole (finite) complex.
        symbolic: True for hand-built models with labelled vertices.
        base: The triangulation whose coordinates the vertices use, if any.
    """

    vertices: tuple[Vertex, ...]
    facets: frozenset[Simplex]
    trusted: frozenset[Vertex]
    complete: bool
    symbolic: bool = False
    base: Triangulation | None = attrs.field(default=None, repr=False)
    name: str = ""
    _star: dict[Vertex, tuple[Simplex, ...]] = attrs.field(init=False, repr=False)
    _neighbours: dict[Vertex, frozenset[Vertex]] = attrs.field(init=False, repr=False)

    def __attrs_post_init__(self) -> None:
        star: dict[Vertex, list[Simplex]] = {v: [] for v in self.vertices}
        for facet in self.facets:
            for v in facet:
                if v not in star:
                    raise RejectedInputError("facet uses a vertex outside the window", {"vertex": repr(v)})
                star[v].append(facet)
        neighbours = {v: frozenset().union(*facets) - {v} if facets else frozenset() for v, facets in star.items()}
        object.__setattr__(self, "_star", {v: tuple(facets) for v, facets in star.items()})
        object.__setattr__(self, "_neighbours", neighbours)

    @property
    def dimension(self) -> int:
        return max((len(facet) for facet in self.facets), default=0) - 1

    @property
    def finite(self) -> bool:
        return self.complete

    def require_vertex(self, v: Vertex) -> None:
        if v not in self._star:
            raise RejectedInputError(f"vertex {v!r} is not in the window", {"vertex": repr(v)})

    def star(self, v: Vertex) -> tuple[Simplex, ...]:
        self.require_vertex(v)
        return self._star[v]

    def neighbours(self, v: Vertex) -> frozenset[Vertex]:
        self.require_vertex(v)
        return self._neighbours[v]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbours(v))

    def is_trusted(self, v: Vertex) -> bool:
        self.require_vertex(v)
        return self.complete or v in self.trusted

    def contains_simplex(self, simplex: Iterable[Vertex]) -> bool:
        """Whether the vertices span a simplex of the window."""
        vertices = frozenset(simplex)
        if not vertices:
            return True
        first = next(iter(vertices))
        if first not in self._star:
            return False
        return any(vertices <= facet for facet in self._star[first])

    def index_of(self, v: Vertex) -> int:
        return self.vertices.index(v)


@attrs.define(frozen=True)
class VertexReport:
    degree: int
    link: tuple[Simplex, ...]
    trusted: bool


def vertex_degree_and_link(w: ComplexWindow, v: Vertex) -> VertexReport:
    """Degree and link of ``v`` inside the window.

    The link is given by its maximal faces, the facets through ``v`` with
    ``v`` removed.
    """
    star = w.star(v)
    link = tuple(sorted((facet - {v} for facet in star), key=lambda face: sorted(map(repr, face))))
    return VertexReport(degree=w.degree(v), link=link, trusted=w.is_trusted(v))


def complex_from_ball(ball: FlipGraphBall, margin: int = DEFAULT_MARGIN) -> ComplexWindow:
    """The subcomplex spanned by the triangulations of a flip-graph ball.

    A vertex is trusted when the ball is the whole flip graph, or when every
    node containing it is complete and lies at least ``margin`` flips inside
    the radius.
    """
    if margin < 0:
        raise RejectedInputError("margin must be nonnegative", {"margin": margin})
    vertices = tuple(sorted(ball.distinct_arcs(), key=lambda arc: arc.key))
    facets = frozenset(node.key for node in ball.nodes)
    if ball.stabilized:
        trusted = frozenset(vertices)
    else:
        limit = ball.radius - margin
        untrusted = {
            arc for node in ball.nodes if not node.complete or node.depth > limit for arc in node.arcs
        }
        trusted = frozenset(vertices) - untrusted
    window = ComplexWindow(
        vertices=vertices,
        facets=facets,
        trusted=trusted,
        complete=ball.stabilized,
        base=ball.root,
    )
    logger.info(
        "complex_window_built",
        vertices=len(vertices),
        facets=len(facets),
        trusted=len(trusted),
        complete=window.complete,
    )
    return window


def build_complex(
    genus: int,
    boundary: int,
    orientable: bool,
    radius: int,
    max_nodes: int = DEFAULT_MAX_NODES,
    margin: int = DEFAULT_MARGIN,
) -> ComplexWindow:
    """Window of the arc complex around the built triangulation of a signature.

    Raises:
        UnsupportedSignatureError: The surface has no hexagon decomposition;
            use ``explicit_small_model`` instead.
    """
    root = build_surface(genus, boundary, orientable)
    ball = flip_graph_ball(root, radius, max_nodes=max_nodes)
    window = complex_from_ball(ball, margin)
    kind = "orientable" if orientable else "nonorientable"
    return attrs.evolve(window, name=f"({genus},{boundary},{kind}) radius {radius}")


def one_skeleton(w: ComplexWindow) -> nx.Graph:
    """Vertices and edges of the window, annotated with degree and trust."""
    graph = nx.Graph()
    for v in w.vertices:
        graph.add_node(v, degree=w.degree(v), trusted=w.is_trusted(v))
    for facet in w.facets:
        ordered = sorted(facet, key=w.index_of)
        graph.add_edges_from((u, v) for i, u in enumerate(ordered) for v in ordered[i + 1 :])
    return graph


def trusted_skeleton(w: ComplexWindow) -> nx.Graph:
    graph = one_skeleton(w)
    return graph.subgraph([v for v in w.vertices if w.is_trusted(v)]).copy()


def interior_isomorphic(engine: ComplexWindow, model: ComplexWindow) -> bool:
    """Whether the trusted part of ``engine`` embeds as an induced subgraph of the trusted part of ``model``.

    Vertex degrees must agree, so each trusted engine vertex is matched with a
    model vertex of the same degree in the whole complex.
    """
    small, large = trusted_skeleton(engine), trusted_skeleton(model)
    if small.number_of_nodes() == 0:
        return True
    matcher = isomorphism.GraphMatcher(
        large, small, node_match=lambda a, b: a["degree"] == b["degree"]
    )
    return bool(matcher.subgraph_is_isomorphic())


# 🔺✅🔚
