#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Invariant sweeps over a flip-graph ball.

Every node is checked for arc and piece counts, validity and the invariance of
the surface it describes. Flip properties, transport round-trips and
connectivity are checked on ``(node, arc)`` samples drawn from a seeded
generator, so a report is reproducible from its inputs.
"""

from __future__ import annotations

from collections import Counter
import random

from provide.foundation import logger

from provide.arccomplex.arcs.normal import NormalArc, base_arc
from provide.arccomplex.arcs.transport import carry, intersection_number, pull_back, straighten
from provide.arccomplex.complex.maps import is_automorphism
from provide.arccomplex.complex.symmetry import gluing_symmetries, induced_map, preserves_piece_classes
from provide.arccomplex.complex.window import DEFAULT_MARGIN, complex_from_ball
from provide.arccomplex.flips.ball import DEFAULT_MAX_NODES, FlipGraphBall, connect_chain, flip_graph_ball
from provide.arccomplex.flips.moves import completions, flip, inverse, is_flippable
from provide.arccomplex.surface.builder import build_surface
from provide.arccomplex.surface.triangulation import (
    SurfaceSignature,
    Triangulation,
    boundary_cycles,
    classify_surface,
    piece_class_counts,
    validate_triangulation,
)
from provide.arccomplex.verify.base import Report, ReportRunner

DEFAULT_RADIUS = 3
DEFAULT_SAMPLES = 1000
CONNECTIVITY_PAIRS = 100


def _pieces_of(t: Triangulation, arc: int) -> set[int]:
    pairing = t.pairings[arc]
    return {pairing.a[0], pairing.b[0]}


def _arcs_after(t: Triangulation, first: int, second: int) -> frozenset[NormalArc]:
    """Arcs after flipping ``first`` then ``second``, written over ``t``."""
    one = flip(t, first)
    two = flip(one.target, second)
    return frozenset(pull_back(base_arc(two.target, k), [one, two]) for k in two.target.arcs())


def _node_checks(report: Report, ball: FlipGraphBall, signature: SurfaceSignature) -> None:
    arc_counts = Counter(node.triangulation.arc_count for node in ball.nodes)
    piece_counts = Counter(node.triangulation.piece_count for node in ball.nodes)
    report.add("arc-count", [signature.expected_arc_count], sorted(arc_counts))
    report.add("piece-count", [signature.expected_piece_count], sorted(piece_counts))
    report.add("distinct-arcs-per-node", True, all(len(node.key) == len(node.arcs) for node in ball.nodes))
    report.add(
        "valid-triangulations",
        0,
        sum(1 for node in ball.nodes if validate_triangulation(node.triangulation)),
    )
    report.add(
        "surface-invariance",
        0,
        sum(1 for node in ball.nodes if classify_surface(node.triangulation) != signature),
    )
    report.add(
        "boundary-cycles",
        [signature.boundary],
        sorted({len(boundary_cycles(node.triangulation)) for node in ball.nodes}),
    )
    report.add(
        "euler-characteristic",
        [signature.euler_characteristic],
        sorted({node.triangulation.euler_characteristic for node in ball.nodes}),
    )
    report.add(
        "piece-class-totals",
        0,
        sum(
            1
            for node in ball.nodes
            if sum(piece_class_counts(node.triangulation).values()) != node.triangulation.piece_count
        ),
    )


def _flip_checks(report: Report, ball: FlipGraphBall, samples: int, rng: random.Random) -> None:
    failures: Counter[str] = Counter()
    flippable = 0
    commuting_pairs = 0
    for _ in range(samples):
        node = rng.choice(ball.nodes)
        t = node.triangulation
        e = rng.randrange(t.arc_count)
        face = [k for k in t.arcs() if k != e]
        found = completions(t, face)
        if len(found) not in (1, 2) or (len(found) == 2) != is_flippable(t, e):
            failures["completions"] += 1
        if not is_flippable(t, e):
            continue
        flippable += 1
        move = flip(t, e)
        back = flip(move.target, e)
        if pull_back(back.replacement, [move]) != base_arc(t, e):
            failures["involution"] += 1
        if intersection_number(move.removed, move.replacement) != 1:
            failures["intersection"] += 1
        others = [k for k in t.arcs() if k != e]
        if others:
            k = rng.choice(others)
            a = base_arc(t, k)
            if carry(carry(a, move), inverse(move)) != a:
                failures["round-trip"] += 1
            if intersection_number(a, move.removed) != 0:
                failures["disjoint-zero"] += 1
        disjoint = [
            f for f in others if is_flippable(t, f) and not _pieces_of(t, f) & _pieces_of(t, e)
        ]
        if disjoint:
            f = rng.choice(disjoint)
            commuting_pairs += 1
            if _arcs_after(t, e, f) != _arcs_after(t, f, e):
                failures["commute"] += 1
    report.add("sampled-flips", True, flippable > 0 or samples == 0)
    report.add("completions-one-or-two", 0, failures["completions"])
    report.add("flip-involution", 0, failures["involution"])
    report.add("flip-intersection-one", 0, failures["intersection"])
    report.add("transport-round-trip", 0, failures["round-trip"])
    report.add("disjoint-arcs-intersect-zero", 0, failures["disjoint-zero"])
    report.add("disjoint-flips-commute", 0, failures["commute"])
    logger.debug("flip_samples_checked", samples=samples, flippable=flippable, commuting_pairs=commuting_pairs)


def _straighten_checks(report: Report, ball: FlipGraphBall, samples: int, rng: random.Random) -> None:
    failures = 0
    for _ in range(samples):
        a = rng.choice(rng.choice(ball.nodes).arcs)
        result = straighten(ball.root, a)
        if len(result.moves) > a.crossing_weight:
            failures += 1
    report.add("straighten-weight-decreasing", 0, failures)


def _connectivity_checks(report: Report, ball: FlipGraphBall, pairs: int, rng: random.Random) -> None:
    failures = 0
    for _ in range(pairs):
        n1, n2 = rng.randrange(len(ball.nodes)), rng.randrange(len(ball.nodes))
        chain = connect_chain(ball, n1, n2)
        bound = ball.nodes[n1].depth + ball.nodes[n2].depth
        if (n1 == n2) != (not chain) or len(chain) > bound:
            failures += 1
    report.add("random-pair-connectivity", 0, failures)


def _symmetry_checks(report: Report, ball: FlipGraphBall, margin: int) -> None:
    window = complex_from_ball(ball, margin)
    symmetries = gluing_symmetries(ball.root)
    failures: Counter[str] = Counter()
    for sym in symmetries:
        m = induced_map(sym, window)
        if not is_automorphism(m):
            failures["automorphism"] += 1
        if not preserves_piece_classes(m, ball):
            failures["piece-classes"] += 1
        if any(window.degree(m(v)) != window.degree(v) for v in window.trusted if m(v) in window.trusted):
            failures["degrees"] += 1
    report.add("gluing-symmetries", True, len(symmetries) >= 1)
    report.add("induced-maps-are-automorphisms", 0, failures["automorphism"])
    report.add("induced-maps-preserve-piece-classes", 0, failures["piece-classes"])
    report.add("induced-maps-preserve-trusted-degrees", 0, failures["degrees"])


def run_invariant_suite(
    genus: int,
    boundary: int,
    orientable: bool,
    radius: int = DEFAULT_RADIUS,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    max_nodes: int = DEFAULT_MAX_NODES,
    margin: int = DEFAULT_MARGIN,
    symmetries: bool = True,
) -> Report:
    """Sweep a flip-graph ball around the built triangulation of a signature.

    Args:
        genus: Genus of the surface.
        boundary: Number of boundary components.
        orientable: Orientability of the surface.
        radius: Flip radius of the explored ball.
        samples: Number of ``(node, arc)`` samples for the flip properties.
        seed: Seed of the sampling generator.
        max_nodes: Node cap of the ball; hitting it is recorded as truncation.
        margin: Interiority margin of the window used for induced maps.
        symmetries: Also check the maps induced by gluing symmetries of the base.

    Returns:
        The report; a signature without hexagon decomposition yields a single
        failed check.
    """
    kind = "orientable" if orientable else "nonorientable"
    runner = ReportRunner(f"suite ({genus},{boundary},{kind}) radius {radius} seed {seed}")
    signature = runner.attempt("signature", lambda: SurfaceSignature(genus, boundary, orientable))
    root = runner.attempt("build-surface", lambda: build_surface(genus, boundary, orientable))
    if signature is None or root is None:
        return runner.finish()
    ball = runner.attempt("flip-graph-ball", lambda: flip_graph_ball(root, radius, max_nodes=max_nodes))
    if ball is None:
        return runner.finish()
    for note in ball.truncation:
        runner.report.note_truncation(note)
    runner.report.add("ball-nodes", ">= 1", len(ball.nodes), passed=len(ball.nodes) >= 1)

    rng = random.Random(seed)
    runner.section("node-invariants", lambda report: _node_checks(report, ball, signature))
    runner.section("flip-properties", lambda report: _flip_checks(report, ball, samples, rng))
    runner.section(
        "straightening", lambda report: _straighten_checks(report, ball, min(samples, CONNECTIVITY_PAIRS), rng)
    )
    runner.section(
        "connectivity", lambda report: _connectivity_checks(report, ball, min(samples, CONNECTIVITY_PAIRS), rng)
    )
    if symmetries and ball.truncated:
        runner.report.note_truncation("induced maps skipped: a capped ball is not closed under symmetries")
    elif symmetries:
        runner.section("induced-maps", lambda report: _symmetry_checks(report, ball, margin))
    return runner.finish()


# 🔺✅🔚
