#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Explicit arc complexes for the three smallest nonorientable surfaces.

* One crosscap, one boundary component: a single arc, so one vertex.
* One crosscap, two boundary components: finite; taken from a stabilized
  flip-graph ball of the built triangulation.
* Two crosscaps, one boundary component: infinite. Its vertices are ``a``
  and two families ``b_n`` and ``c_n`` indexed by the integers, with maximal
  simplices ``{a, b_n, b_n+1}`` and ``{b_n, b_n+1, c_n}``. A window of size
  ``k`` keeps the simplices for ``-k <= n < k``.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from itertools import pairwise

import attrs

from provide.arccomplex.complex.window import ComplexWindow, Simplex, build_complex
from provide.arccomplex.errors import RejectedInputError, TruncatedWindowError

SMALL_CASES = ("1,1", "1,2", "2,1")
DEFAULT_MODEL_SIZE = 8
FINITE_MODEL_RADIUS = 10


@attrs.define(frozen=True, order=True)
class ModelVertex:
    family: str
    index: int = 0

    def __str__(self) -> str:
        return self.family if self.family == "a" else f"{self.family}_{self.index}"


A = ModelVertex("a")


def b(n: int) -> ModelVertex:
    return ModelVertex("b", n)


def c(n: int) -> ModelVertex:
    return ModelVertex("c", n)


def shift(v: ModelVertex) -> ModelVertex:
    """``b_n -> b_n+1``, ``c_n -> c_n+1``, fixing ``a``."""
    return v if v == A else ModelVertex(v.family, v.index + 1)


def reflection(v: ModelVertex) -> ModelVertex:
    """``b_n -> b_-n``, ``c_n -> c_-n-1``, fixing ``a``."""
    if v == A:
        return v
    if v.family == "b":
        return b(-v.index)
    return c(-v.index - 1)


def inverse_shift(v: ModelVertex) -> ModelVertex:
    return v if v == A else ModelVertex(v.family, v.index - 1)


def _model_facets(lower: int, upper: int) -> list[Simplex]:
    facets: list[Simplex] = []
    for n in range(lower, upper):
        facets.append(frozenset({A, b(n), b(n + 1)}))
        facets.append(frozenset({b(n), b(n + 1), c(n)}))
    return facets


def two_crosscap_window(k: int = DEFAULT_MODEL_SIZE) -> ComplexWindow:
    """Window of size ``k`` of the two-crosscap model.

    Vertices are ``a``, ``b_n`` for ``|n| <= k`` and ``c_n`` for ``-k <= n < k``.
    Each unit of ``k`` adds two ``b`` and two ``c`` vertices, so four arcs, the
    same growth as the engine's flip-graph ball per unit of radius.
    """
    if k < 1:
        raise RejectedInputError("model window size must be positive", {"k": k})
    vertices = (A, *(b(n) for n in range(-k, k + 1)), *(c(n) for n in range(-k, k)))
    trusted = frozenset([*(b(n) for n in range(-k + 1, k)), *(c(n) for n in range(-k, k))])
    return ComplexWindow(
        vertices=vertices,
        facets=frozenset(_model_facets(-k, k)),
        trusted=trusted,
        complete=False,
        symbolic=True,
        name=f"(2,1) model window {k}",
    )


def one_crosscap_one_boundary() -> ComplexWindow:
    return ComplexWindow(
        vertices=(A,),
        facets=frozenset({frozenset({A})}),
        trusted=frozenset({A}),
        complete=True,
        symbolic=True,
        name="(1,1) model",
    )


def one_crosscap_two_boundary(radius: int = FINITE_MODEL_RADIUS) -> ComplexWindow:
    window = build_complex(1, 2, False, radius)
    if not window.complete:
        raise TruncatedWindowError(
            "the (1,2) flip graph did not stabilize; raise the radius", {"radius": radius}
        )
    return attrs.evolve(window, name="(1,2) model")


def explicit_small_model(case: str, k: int = DEFAULT_MODEL_SIZE) -> ComplexWindow:
    """Arc complex of a small nonorientable surface.

    Args:
        case: ``"1,1"``, ``"1,2"`` or ``"2,1"`` as genus,boundary.
        k: Window size for the infinite ``"2,1"`` model.
    """
    normalized = case.replace(" ", "").strip("()")
    builders: dict[str, Callable[[], ComplexWindow]] = {
        "1,1": one_crosscap_one_boundary,
        "1,2": one_crosscap_two_boundary,
        "2,1": lambda: two_crosscap_window(k),
    }
    if normalized not in builders:
        raise RejectedInputError(f"unknown small case {case!r}", {"case": case, "known": list(SMALL_CASES)})
    return builders[normalized]()


def _size(w: ComplexWindow) -> int:
    return max(v.index for v in w.vertices if isinstance(v, ModelVertex) and v.family == "b")


def a_degree_unbounded(windows: Sequence[ComplexWindow]) -> bool:
    """Whether ``a`` stays untrusted and its degree grows strictly with the window size."""
    ordered = sorted(windows, key=_size)
    sizes = [_size(w) for w in ordered]
    degrees = [w.degree(A) for w in ordered]
    return (
        len(ordered) >= 2
        and all(s < t for s, t in pairwise(sizes))
        and all(d < e for d, e in pairwise(degrees))
        and not any(w.is_trusted(A) for w in ordered)
    )


def model_constraints(w: ComplexWindow, grown: ComplexWindow | None = None) -> dict[str, bool]:
    """Incidence facts of the two-crosscap model, evaluated on trusted vertices.

    Args:
        w: A window of the model.
        grown: A larger window of the same model, compared with ``w`` for the
            growth of ``degree(a)``. Defaults to the generated window of twice
            the size of ``w``.
    """
    k = _size(w)
    if grown is None:
        grown = two_crosscap_window(2 * k)
    interior = [n for n in range(-k + 1, k) if w.is_trusted(b(n))]
    b_degrees = all(
        w.neighbours(b(n)) == {A, b(n - 1), b(n + 1), c(n - 1), c(n)} for n in interior
    )
    c_degrees = all(w.neighbours(c(n)) == {b(n), b(n + 1)} for n in range(-k, k))
    a_edges = all(
        sum(1 for facet in w.star(A) if b(n) in facet) == 2 for n in interior
    )
    unique_a_free = all(
        [facet for facet in w.star(b(n)) if b(n + 1) in facet and A not in facet]
        == [frozenset({b(n), b(n + 1), c(n)})]
        for n in range(-k, k)
    )
    return {
        "a-degree-unbounded": a_degree_unbounded([w, grown]),
        "b-degree-five": b_degrees,
        "c-degree-two": c_degrees,
        "a-b-edges-in-two-facets": a_edges,
        "unique-a-free-facet": unique_a_free,
    }


# 🔺✅🔚
