#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Bounded breadth-first exploration of the flip graph.

Nodes are identified by their arc sets written in the root's coordinates, so
two triangulations reached along different flip paths are the same node
exactly when they consist of the same isotopy classes of arcs.
"""

from __future__ import annotations

from collections import deque

import attrs
import networkx as nx
from provide.foundation import logger

from provide.arccomplex.arcs.normal import NormalArc, base_arc
from provide.arccomplex.arcs.transport import pull_back
from provide.arccomplex.errors import NotConnectedError, RejectedInputError
from provide.arccomplex.flips.moves import FlipMove, flip, is_flippable
from provide.arccomplex.surface.triangulation import Triangulation, require_valid

DEFAULT_MAX_NODES = 20000

NodeKey = frozenset[NormalArc]


@attrs.define(eq=False)
class BallNode:
    """A triangulation in the ball.

    ``arcs[k]`` is arc ``k`` of ``triangulation`` written over the root.
    ``complete`` is set once every flip of the node lands inside the ball.
    """

    index: int
    triangulation: Triangulation
    arcs: tuple[NormalArc, ...]
    depth: int
    parent: int | None = None
    parent_move: FlipMove | None = attrs.field(default=None, repr=False)
    complete: bool = False
    key: NodeKey = attrs.field(init=False, repr=False)

    def __attrs_post_init__(self) -> None:
        self.key = frozenset(self.arcs)


@attrs.define(frozen=True)
class BallEdge:
    source: int
    target: int


@attrs.define(eq=False)
class FlipGraphBall:
    root: Triangulation
    radius: int
    max_nodes: int
    nodes: list[BallNode] = attrs.Factory(list)
    edges: list[BallEdge] = attrs.Factory(list)
    index: dict[NodeKey, int] = attrs.Factory(dict)
    stabilized: bool = False
    truncation: list[str] = attrs.Factory(list)

    @property
    def truncated(self) -> bool:
        return bool(self.truncation)

    def node(self, index: int) -> BallNode:
        if not 0 <= index < len(self.nodes):
            raise RejectedInputError(f"unknown ball node {index}", {"node": index, "nodes": len(self.nodes)})
        return self.nodes[index]

    def node_of(self, key: NodeKey) -> BallNode | None:
        found = self.index.get(key)
        return None if found is None else self.nodes[found]

    def distinct_arcs(self) -> set[NormalArc]:
        return {arc for node in self.nodes for arc in node.arcs}

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        for node in self.nodes:
            graph.add_node(node.index, depth=node.depth, complete=node.complete)
        graph.add_edges_from((edge.source, edge.target) for edge in self.edges)
        return graph


def path_from_root(ball: FlipGraphBall, node: int) -> list[FlipMove]:
    """The flips leading from the root to ``node`` along the BFS tree."""
    moves: list[FlipMove] = []
    current = ball.node(node)
    while current.parent is not None:
        assert current.parent_move is not None
        moves.append(current.parent_move)
        current = ball.nodes[current.parent]
    moves.reverse()
    return moves


def flip_graph_ball(root: Triangulation, radius: int, max_nodes: int = DEFAULT_MAX_NODES) -> FlipGraphBall:
    """Explore all triangulations within ``radius`` flips of ``root``.

    Args:
        root: A valid triangulation; its coordinates identify every node.
        radius: Maximal flip distance from the root.
        max_nodes: Hard cap on the number of nodes; hitting it is recorded as truncation.

    Returns:
        The explored ball. Nodes on the last layer are expanded to record edges
        between known nodes but never create new ones.
    """
    require_valid(root)
    if radius < 0:
        raise RejectedInputError("radius must be nonnegative", {"radius": radius})
    if max_nodes < 1:
        raise RejectedInputError("max_nodes must be positive", {"max_nodes": max_nodes})

    ball = FlipGraphBall(root=root, radius=radius, max_nodes=max_nodes)
    start = BallNode(index=0, triangulation=root, arcs=tuple(base_arc(root, k) for k in root.arcs()), depth=0)
    ball.nodes.append(start)
    ball.index[start.key] = 0
    seen_edges: set[tuple[int, int]] = set()
    capped = False
    queue = deque([0])
    layer = 0

    while queue:
        node = ball.nodes[queue.popleft()]
        if node.depth != layer:
            logger.debug("flip_ball_layer_expanded", depth=layer, nodes=len(ball.nodes), frontier=len(queue) + 1)
            layer = node.depth
        t = node.triangulation
        path = path_from_root(ball, node.index)
        complete = True
        for k in sorted(t.arcs(), key=lambda arc: node.arcs[arc].key):
            if not is_flippable(t, k):
                continue
            move: FlipMove | None = None
            if node.parent_move is not None and k == node.parent_move.arc:
                assert node.parent is not None
                new_arc = ball.nodes[node.parent].arcs[k]
            else:
                move = flip(t, k)
                new_arc = pull_back(move.replacement, path)
            key = (node.key - {node.arcs[k]}) | {new_arc}
            found = ball.index.get(key)
            if found is None:
                if node.depth >= radius:
                    complete = False
                    continue
                if len(ball.nodes) >= max_nodes:
                    complete = False
                    capped = True
                    continue
                if move is None:
                    move = flip(t, k)
                arcs = node.arcs[:k] + (new_arc,) + node.arcs[k + 1 :]
                child = BallNode(
                    index=len(ball.nodes),
                    triangulation=move.target,
                    arcs=arcs,
                    depth=node.depth + 1,
                    parent=node.index,
                    parent_move=move,
                )
                ball.nodes.append(child)
                ball.index[child.key] = child.index
                queue.append(child.index)
                found = child.index
            pair = (min(node.index, found), max(node.index, found))
            if pair not in seen_edges:
                seen_edges.add(pair)
                ball.edges.append(BallEdge(*pair))
        node.complete = complete

    if capped:
        note = f"node cap of {max_nodes} reached before radius {radius} was exhausted"
        ball.truncation.append(note)
        logger.warning("flip_ball_truncated", max_nodes=max_nodes, radius=radius, nodes=len(ball.nodes))
    ball.stabilized = not capped and all(node.complete for node in ball.nodes)
    logger.info(
        "flip_ball_built",
        radius=radius,
        nodes=len(ball.nodes),
        edges=len(ball.edges),
        arcs=len(ball.distinct_arcs()),
        stabilized=ball.stabilized,
    )
    return ball


def arc_between(ball: FlipGraphBall, source: int, target: int) -> int:
    """Arc id of ``source`` whose flip leads to ``target``."""
    u, v = ball.node(source), ball.node(target)
    removed = [k for k, arc in enumerate(u.arcs) if arc not in v.key]
    if len(removed) != 1:
        raise RejectedInputError("nodes are not adjacent", {"source": source, "target": target})
    return removed[0]


def connect_chain(ball: FlipGraphBall, n1: int, n2: int) -> list[FlipMove]:
    """A shortest chain of flips inside the ball from node ``n1`` to node ``n2``."""
    ball.node(n1)
    ball.node(n2)
    try:
        path = nx.shortest_path(ball.graph(), n1, n2)
    except nx.NetworkXNoPath as e:
        raise NotConnectedError(
            f"nodes {n1} and {n2} are not connected inside the ball", {"source": n1, "target": n2}
        ) from e
    return [flip(ball.nodes[u].triangulation, arc_between(ball, u, v)) for u, v in zip(path, path[1:], strict=False)]


# 🔺✅🔚
