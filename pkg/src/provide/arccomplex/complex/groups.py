#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Automorphism groups of windows and identification of small groups."""

from __future__ import annotations

from collections.abc import Callable
from itertools import product
from math import lcm

import attrs
from provide.foundation import logger

from provide.arccomplex.complex.maps import (
    SimplicialMap,
    compose,
    enumerate_automorphisms,
    identity_map,
    is_automorphism,
)
from provide.arccomplex.complex.models import ModelVertex, inverse_shift, reflection, shift
from provide.arccomplex.complex.window import ComplexWindow, Vertex
from provide.arccomplex.errors import RejectedInputError, TruncatedWindowError

TRIVIAL = "trivial"
Z2 = "Z2"
Z2_X_Z2 = "Z2×Z2"
Z4 = "Z4"
D4 = "D4"
INFINITE_DIHEDRAL = "Z⋊Z2"
UNKNOWN = "unknown"

INFINITE = "infinite-window"


@attrs.define(frozen=True)
class GroupInvariants:
    """What is known about a group before it is named.

    ``order`` is ``None`` for the symbolic infinite case, where the flags
    record which shift/reflection relations were verified instead.
    """

    order: int | None
    abelian: bool
    exponent: int | None = None
    dihedral_relation: bool = False
    has_shift: bool = False
    has_involution: bool = False
    inverts_shift: bool = False


@attrs.define(frozen=True)
class GroupReport:
    order: int | str
    abelian: bool
    exponent: int | None
    generators: tuple[str, ...]
    name: str
    elements: tuple[SimplicialMap, ...] = attrs.field(default=(), repr=False)


def identify_group(invariants: GroupInvariants) -> str:
    """Name a group from its invariants using the small-case table.

    Raises:
        RejectedInputError: The invariants contradict each other.
    """
    order, exponent = invariants.order, invariants.exponent
    if order is None:
        if invariants.has_shift and invariants.has_involution and invariants.inverts_shift:
            if invariants.abelian:
                raise RejectedInputError("a shift inverted by an involution cannot generate an abelian group")
            return INFINITE_DIHEDRAL
        return UNKNOWN

    if order < 1:
        raise RejectedInputError("group order must be positive", {"order": order})
    if exponent is not None and (exponent < 1 or order % exponent):
        raise RejectedInputError("exponent must divide the order", {"order": order, "exponent": exponent})
    if order < 6 and not invariants.abelian:
        raise RejectedInputError("every group of order below 6 is abelian", {"order": order})
    if invariants.dihedral_relation and order % 2:
        raise RejectedInputError("a dihedral relation needs even order", {"order": order})

    if order == 1:
        return TRIVIAL
    if order == 2:
        return Z2
    if order == 4 and exponent == 2:
        return Z2_X_Z2
    if order == 4 and exponent == 4:
        return Z4
    if order == 8 and not invariants.abelian and invariants.dihedral_relation:
        return D4
    return UNKNOWN


def _element_order(m: SimplicialMap, identity: tuple[Vertex, ...], limit: int) -> int:
    power, k = m, 1
    while power.images() != identity:
        power = compose(power, m)
        k += 1
        if k > limit:
            raise RejectedInputError("element order exceeds the group order")
    return k


def _closure(generators: list[SimplicialMap], w: ComplexWindow) -> set[tuple[Vertex, ...]]:
    identity = identity_map(w)
    seen = {identity.images(): identity}
    frontier = [identity]
    while frontier:
        current = frontier.pop()
        for g in generators:
            nxt = compose(current, g)
            if nxt.images() not in seen:
                seen[nxt.images()] = nxt
                frontier.append(nxt)
    return set(seen)


def _greedy_generators(elements: list[SimplicialMap], w: ComplexWindow) -> list[SimplicialMap]:
    identity = identity_map(w).images()
    generators: list[SimplicialMap] = []
    span = {identity}
    for m in elements:
        if m.images() not in span:
            generators.append(m)
            span = _closure(generators, w)
        if len(span) == len(elements):
            break
    return generators


def _has_dihedral_relation(elements: list[SimplicialMap], orders: dict[tuple[Vertex, ...], int]) -> bool:
    """Some ``r`` of order n/2 and involution ``s`` outside ``<r>`` with ``s r s = r^-1``."""
    half = len(elements) // 2
    for r, s in product(elements, repeat=2):
        if orders[r.images()] != half or orders[s.images()] != 2:
            continue
        if compose(compose(s, r), s).images() == r.inverse().images():
            powers = {r.images()}
            power = r
            for _ in range(half):
                power = compose(power, r)
                powers.add(power.images())
            if s.images() not in powers:
                return True
    return False


def finite_group_report(elements: list[SimplicialMap], w: ComplexWindow) -> GroupReport:
    identity = identity_map(w).images()
    order = len(elements)
    orders = {m.images(): _element_order(m, identity, order) for m in elements}
    abelian = all(
        compose(x, y).images() == compose(y, x).images() for x, y in product(elements, repeat=2)
    )
    exponent = lcm(*orders.values()) if orders else 1
    generators = _greedy_generators(elements, w)
    invariants = GroupInvariants(
        order=order,
        abelian=abelian,
        exponent=exponent,
        dihedral_relation=not abelian and _has_dihedral_relation(elements, orders),
    )
    return GroupReport(
        order=order,
        abelian=abelian,
        exponent=exponent,
        generators=tuple(
            f"order {orders[g.images()]}: moves {sum(1 for v, u in g.assignment.items() if v != u)} vertices"
            for g in generators
        ),
        name=identify_group(invariants),
        elements=tuple(elements),
    )


def symbolic_invariants(
    w: ComplexWindow,
    shift_map: Callable[[ModelVertex], ModelVertex] = shift,
    shift_inverse: Callable[[ModelVertex], ModelVertex] = inverse_shift,
    reflection_map: Callable[[ModelVertex], ModelVertex] = reflection,
) -> GroupInvariants:
    """Check a shift and a reflection on a window of the two-crosscap model.

    Facets whose image leaves the window are skipped; every facet inside it must
    map to a facet. Relations are checked on the vertices with ``|n| < 3``.
    """
    present = set(w.vertices)

    def preserves(f: Callable[[ModelVertex], ModelVertex]) -> bool:
        for facet in w.facets:
            image = frozenset(f(v) for v in facet)  # type: ignore[arg-type]
            if image <= present and image not in w.facets:
                return False
        return True

    sample = [v for v in w.vertices if isinstance(v, ModelVertex) and abs(v.index) < 3]
    return GroupInvariants(
        order=None,
        abelian=all(shift_map(reflection_map(v)) == reflection_map(shift_map(v)) for v in sample),
        has_shift=preserves(shift_map) and all(shift_inverse(shift_map(v)) == v for v in sample),
        has_involution=preserves(reflection_map) and all(reflection_map(reflection_map(v)) == v for v in sample),
        inverts_shift=all(reflection_map(shift_map(reflection_map(v))) == shift_inverse(v) for v in sample),
    )


def _symbolic_report(w: ComplexWindow) -> GroupReport:
    invariants = symbolic_invariants(w)
    return GroupReport(
        order=INFINITE,
        abelian=invariants.abelian,
        exponent=None,
        generators=("shift: b_n -> b_n+1, c_n -> c_n+1", "reflection: b_n -> b_-n, c_n -> c_-n-1"),
        name=identify_group(invariants),
    )



def automorphism_group(w: ComplexWindow) -> GroupReport:
    """Automorphism group of a finite complex, or of the symbolic two-crosscap model.

    Raises:
        TruncatedWindowError: ``w`` is a truncated window of an engine-built complex.
    """
    if w.symbolic and not w.complete:
        report = _symbolic_report(w)
    elif not w.complete:
        raise TruncatedWindowError(
            "automorphisms of a truncated window say nothing about the complex", {"window": w.name}
        )
    else:
        elements = enumerate_automorphisms(w)
        report = finite_group_report(elements, w)
    logger.info("automorphism_group_identified", window=w.name, order=report.order, name=report.name)
    return report


def is_member(m: SimplicialMap, report: GroupReport) -> bool:
    return is_automorphism(m) and any(m.images() == g.images() for g in report.elements)


# 🔺✅🔚
