#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for bounded flip-graph exploration."""

from __future__ import annotations

import random

import pytest

from provide.arccomplex.arcs.normal import base_arc
from provide.arccomplex.arcs.transport import pull_back
from provide.arccomplex.errors import NotConnectedError, RejectedInputError
from provide.arccomplex.flips.ball import (
    FlipGraphBall,
    arc_between,
    connect_chain,
    flip_graph_ball,
    path_from_root,
)
from provide.arccomplex.surface.triangulation import Triangulation, classify_surface


@pytest.mark.unit
class TestFlipGraphBall:
    """Test breadth-first exploration."""

    def test_radius_zero(self, n22: Triangulation) -> None:
        ball = flip_graph_ball(n22, 0)
        assert len(ball.nodes) == 1
        assert ball.edges == []
        assert not ball.truncated
        assert not ball.stabilized
        assert ball.nodes[0].arcs == tuple(base_arc(n22, k) for k in n22.arcs())

    def test_finite_flip_graph_stabilizes(self, n12_ball: FlipGraphBall) -> None:
        """Test the one-crosscap, two-boundary flip graph is exhausted with eight arcs."""
        assert n12_ball.stabilized
        assert not n12_ball.truncated
        assert len(n12_ball.distinct_arcs()) == 8
        assert all(node.complete for node in n12_ball.nodes)

    def test_nodes_are_distinct_triangulations(self, n22_ball: FlipGraphBall) -> None:
        keys = [node.key for node in n22_ball.nodes]
        assert len(set(keys)) == len(keys)
        assert all(len(node.key) == n22_ball.root.arc_count for node in n22_ball.nodes)
        assert all(n22_ball.node_of(node.key) is node for node in n22_ball.nodes)

    def test_edges_are_flips(self, n12_ball: FlipGraphBall) -> None:
        """Test adjacent nodes share all arcs but one and differ in depth by at most one."""
        for edge in n12_ball.edges:
            u, v = n12_ball.nodes[edge.source], n12_ball.nodes[edge.target]
            assert len(u.key & v.key) == n12_ball.root.arc_count - 1
            assert abs(u.depth - v.depth) <= 1
            assert edge.source < edge.target

    def test_root_neighbours_are_its_flips(self, n22_ball: FlipGraphBall) -> None:
        root = n22_ball.root
        flippable = sum(1 for k in root.arcs() if not root.is_self_paired(k))
        assert sum(1 for node in n22_ball.nodes if node.depth == 1) == flippable

    def test_node_triangulations_describe_the_same_surface(self, n22_ball: FlipGraphBall) -> None:
        signature = classify_surface(n22_ball.root)
        assert all(classify_surface(node.triangulation) == signature for node in n22_ball.nodes)

    def test_node_arcs_are_written_over_the_root(self, n12: Triangulation) -> None:
        """Test pulling each node's own arcs back along its tree path gives its stored arcs."""
        ball = flip_graph_ball(n12, 3)
        for node in ball.nodes:
            path = path_from_root(ball, node.index)
            assert len(path) == node.depth
            for k in node.triangulation.arcs():
                assert pull_back(base_arc(node.triangulation, k), path) == node.arcs[k]

    def test_node_cap_is_recorded(self, n22: Triangulation) -> None:
        ball = flip_graph_ball(n22, 3, max_nodes=5)
        assert len(ball.nodes) == 5
        assert ball.truncated
        assert not ball.stabilized
        assert "node cap of 5" in ball.truncation[0]

    @pytest.mark.parametrize(("radius", "max_nodes"), [(-1, 10), (2, 0)])
    def test_bad_bounds(self, n12: Triangulation, radius: int, max_nodes: int) -> None:
        with pytest.raises(RejectedInputError):
            flip_graph_ball(n12, radius, max_nodes=max_nodes)

    def test_unknown_node(self, n22_ball: FlipGraphBall) -> None:
        with pytest.raises(RejectedInputError, match="unknown ball node"):
            n22_ball.node(len(n22_ball.nodes))

    def test_graph_view(self, n12_ball: FlipGraphBall) -> None:
        graph = n12_ball.graph()
        assert graph.number_of_nodes() == len(n12_ball.nodes)
        assert graph.number_of_edges() == len(n12_ball.edges)
        assert graph.nodes[0]["depth"] == 0


@pytest.mark.unit
class TestConnectChain:
    """Test chains of flips between ball nodes."""

    def test_chain_to_self_is_empty(self, n22_ball: FlipGraphBall) -> None:
        assert connect_chain(n22_ball, 3, 3) == []

    def test_chain_from_root_has_depth_length(self, n12_ball: FlipGraphBall) -> None:
        for node in n12_ball.nodes:
            assert len(connect_chain(n12_ball, 0, node.index)) == node.depth

    def test_consecutive_triangulations_share_all_arcs_but_one(self, n12_ball: FlipGraphBall) -> None:
        """Test each step of a random chain is a single flip between ball nodes."""
        rng = random.Random(7)
        for _ in range(20):
            n1, n2 = rng.randrange(len(n12_ball.nodes)), rng.randrange(len(n12_ball.nodes))
            chain = connect_chain(n12_ball, n1, n2)
            assert len(chain) <= n12_ball.nodes[n1].depth + n12_ball.nodes[n2].depth
            if chain:
                assert chain[0].source is n12_ball.nodes[n1].triangulation
            for move in chain:
                assert move.target.arc_count == move.source.arc_count

    def test_disconnected_nodes(self, n12: Triangulation) -> None:
        ball = flip_graph_ball(n12, 1)
        ball.edges.clear()
        with pytest.raises(NotConnectedError):
            connect_chain(ball, 0, 1)

    def test_arc_between_requires_adjacent_nodes(self, n12_ball: FlipGraphBall) -> None:
        far = next(node for node in n12_ball.nodes if node.depth == 2)
        with pytest.raises(RejectedInputError, match="not adjacent"):
            arc_between(n12_ball, 0, far.index)
        edge = n12_ball.edges[0]
        k = arc_between(n12_ball, edge.source, edge.target)
        assert n12_ball.nodes[edge.source].arcs[k] not in n12_ball.nodes[edge.target].key


# 🔺✅🔚
