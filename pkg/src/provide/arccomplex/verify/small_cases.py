#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Reproduction reports for the three smallest nonorientable surfaces.

Expected values:

* ``1,1``: one vertex, trivial automorphism group.
* ``1,2``: eight vertices, automorphism group Z2×Z2, and every injective
  simplicial self-map is one of its four automorphisms.
* ``2,1``: the symbolic model satisfies its five incidence constraints, the
  engine-built window agrees with it on trusted vertices, and shift plus
  reflection generate the infinite dihedral group.
"""

from __future__ import annotations

from provide.arccomplex.complex.groups import INFINITE_DIHEDRAL, TRIVIAL, Z2_X_Z2, automorphism_group
from provide.arccomplex.complex.maps import (
    enumerate_automorphisms,
    enumerate_injective_endomorphisms,
    is_automorphism,
)
from provide.arccomplex.complex.models import (
    DEFAULT_MODEL_SIZE,
    FINITE_MODEL_RADIUS,
    SMALL_CASES,
    explicit_small_model,
    model_constraints,
    one_crosscap_two_boundary,
    two_crosscap_window,
)
from provide.arccomplex.complex.symmetry import gluing_symmetries, induced_map
from provide.arccomplex.complex.window import DEFAULT_MARGIN, complex_from_ball, interior_isomorphic
from provide.arccomplex.errors import RejectedInputError, UnsupportedSignatureError
from provide.arccomplex.flips.ball import DEFAULT_MAX_NODES, flip_graph_ball
from provide.arccomplex.surface.builder import build_surface
from provide.arccomplex.verify.base import Report, ReportRunner

TWO_CROSSCAP_RADIUS = 6


def _one_crosscap_one_boundary(runner: ReportRunner) -> None:
    model = runner.attempt("build-model", lambda: explicit_small_model("1,1"))
    if model is None:
        return

    def vertices(report: Report) -> None:
        report.add("vertex-count", 1, len(model.vertices))
        report.add("edge-count", 0, sum(model.degree(v) for v in model.vertices) // 2)

    def group(report: Report) -> None:
        aut = automorphism_group(model)
        report.add("automorphism-order", 1, aut.order)
        report.add("automorphism-group", TRIVIAL, aut.name)
        report.add("injective-endomorphisms", 1, len(enumerate_injective_endomorphisms(model)))

    def no_decomposition(report: Report) -> None:
        try:
            build_surface(1, 1, False)
        except UnsupportedSignatureError as e:
            report.add("no-hexagon-decomposition", "UnsupportedSignatureError", type(e).__name__)
        else:
            report.add("no-hexagon-decomposition", "UnsupportedSignatureError", "built", passed=False)

    runner.section("vertices", vertices)
    runner.section("automorphisms", group)
    runner.section("no-hexagon-decomposition", no_decomposition)


def _one_crosscap_two_boundary(runner: ReportRunner, radius: int) -> None:
    model = runner.attempt("build-complex", lambda: one_crosscap_two_boundary(radius))
    if model is None:
        return

    def vertices(report: Report) -> None:
        report.add("stabilized", True, model.complete)
        report.add("vertex-count", 8, len(model.vertices))
        report.add("maximal-simplex-size", {3}, {len(facet) for facet in model.facets})

    def group(report: Report) -> None:
        aut = automorphism_group(model)
        report.add("automorphism-order", 4, aut.order)
        report.add("abelian", True, aut.abelian)
        report.add("exponent", 2, aut.exponent)
        report.add("automorphism-group", Z2_X_Z2, aut.name)

    def endomorphisms(report: Report) -> None:
        injective = enumerate_injective_endomorphisms(model)
        report.add("injective-endomorphisms", 4, len(injective))
        report.add("all-injective-are-automorphisms", True, all(is_automorphism(m) for m in injective))
        automorphisms = {m.images() for m in enumerate_automorphisms(model)}
        report.add("endomorphisms-equal-automorphisms", True, {m.images() for m in injective} == automorphisms)

    def symmetries(report: Report) -> None:
        automorphisms = {m.images() for m in enumerate_automorphisms(model)}
        induced = [induced_map(sym, model) for sym in gluing_symmetries(build_surface(1, 2, False))]
        report.add("gluing-symmetries-induce-automorphisms", True, all(m.images() in automorphisms for m in induced))

    runner.section("vertices", vertices)
    runner.section("automorphisms", group)
    runner.section("injective-endomorphisms", endomorphisms)
    runner.section("gluing-symmetries", symmetries)


def _two_crosscaps_one_boundary(runner: ReportRunner, radius: int, max_nodes: int, margin: int) -> None:
    model = runner.attempt("build-model", lambda: two_crosscap_window(max(2 * radius, DEFAULT_MODEL_SIZE)))
    if model is None:
        return

    def constraints(report: Report) -> None:
        for name, holds in model_constraints(model).items():
            report.add(name, True, holds)

    def group(report: Report) -> None:
        report.add("automorphism-group", INFINITE_DIHEDRAL, automorphism_group(model).name)

    def engine(report: Report) -> None:
        ball = flip_graph_ball(build_surface(2, 1, False), radius, max_nodes=max_nodes)
        for note in ball.truncation:
            report.note_truncation(note)
        window = complex_from_ball(ball, margin)
        report.add("engine-simplex-size", {3}, {len(facet) for facet in window.facets})
        report.add("engine-has-trusted-vertices", True, bool(window.trusted))
        report.add("interior-isomorphic-to-model", True, interior_isomorphic(window, model))

    runner.section("model-constraints", constraints)
    runner.section("automorphisms", group)
    runner.section("engine-window", engine)


def run_small_case_report(
    case: str,
    radius: int | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
    margin: int = DEFAULT_MARGIN,
) -> Report:
    """Run the acceptance checks for one small case.

    Args:
        case: ``"1,1"``, ``"1,2"`` or ``"2,1"``.
        radius: Flip radius for engine-built windows; each case has its own default.
        max_nodes: Node cap for flip-graph balls.
        margin: Interiority margin for engine-built windows.

    Raises:
        RejectedInputError: ``case`` is not one of the small cases.
    """
    normalized = case.replace(" ", "").strip("()")
    if normalized not in SMALL_CASES:
        raise RejectedInputError(f"unknown small case {case!r}", {"case": case, "known": list(SMALL_CASES)})
    runner = ReportRunner(f"small-case {normalized}")
    if normalized == "1,1":
        _one_crosscap_one_boundary(runner)
    elif normalized == "1,2":
        _one_crosscap_two_boundary(runner, FINITE_MODEL_RADIUS if radius is None else radius)
    else:
        _two_crosscaps_one_boundary(runner, TWO_CROSSCAP_RADIUS if radius is None else radius, max_nodes, margin)
    return runner.finish()


# 🔺✅🔚
