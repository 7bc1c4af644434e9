#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for simplicial maps and endomorphism enumeration."""

from __future__ import annotations

import pytest

from provide.arccomplex.complex.maps import (
    SimplicialMap,
    compose,
    enumerate_automorphisms,
    enumerate_injective_endomorphisms,
    identity_map,
    is_automorphism,
    map_from_function,
    validate_map,
)
from provide.arccomplex.complex.models import b, one_crosscap_one_boundary
from provide.arccomplex.complex.window import ComplexWindow
from provide.arccomplex.errors import RejectedInputError, TruncatedWindowError


@pytest.mark.unit
class TestSimplicialMap:
    """Test map flags and algebra."""

    def test_identity(self, n12_model: ComplexWindow) -> None:
        m = identity_map(n12_model)
        flags = validate_map(m)
        assert flags.simplicial
        assert flags.injective
        assert m.bijective
        assert is_automorphism(m)
        assert m.inverse() == m

    def test_constant_map_is_simplicial_but_not_injective(self, n12_model: ComplexWindow) -> None:
        first = n12_model.vertices[0]
        m = map_from_function(n12_model, lambda v: first)
        assert m.flags.simplicial
        assert not m.flags.injective
        assert not is_automorphism(m)
        with pytest.raises(RejectedInputError, match="only bijections"):
            m.inverse()

    def test_assignment_must_be_total(self, n12_model: ComplexWindow) -> None:
        m = SimplicialMap(source=n12_model, target=n12_model, assignment={})
        with pytest.raises(RejectedInputError, match="not total"):
            validate_map(m)

    def test_vertex_outside_the_domain(self, n12_model: ComplexWindow) -> None:
        with pytest.raises(RejectedInputError, match="domain"):
            identity_map(n12_model)(b(0))

    def test_shift_is_not_simplicial_on_a_window(self, n21_model: ComplexWindow) -> None:
        """Test a swap of a boundary vertex with an interior one breaks some facet."""
        swap = {b(0): b(4), b(4): b(0)}
        m = map_from_function(n21_model, lambda v: swap.get(v, v))
        assert m.flags.injective
        assert not m.flags.simplicial

    def test_compose_with_identity(self, n12_model: ComplexWindow) -> None:
        for m in enumerate_automorphisms(n12_model):
            assert compose(m, identity_map(n12_model)) == m
            assert compose(identity_map(n12_model), m) == m
            assert compose(m, m.inverse()) == identity_map(n12_model)


@pytest.mark.unit
class TestEnumeration:
    """Test exhaustive enumeration on finite complexes."""

    def test_one_crosscap_two_boundary(self, n12_model: ComplexWindow) -> None:
        automorphisms = enumerate_automorphisms(n12_model)
        injective = enumerate_injective_endomorphisms(n12_model)
        assert len(automorphisms) == 4
        assert {m.images() for m in injective} == {m.images() for m in automorphisms}

    def test_single_vertex(self) -> None:
        assert len(enumerate_automorphisms(one_crosscap_one_boundary())) == 1

    def test_truncated_window(self, n21_model: ComplexWindow) -> None:
        with pytest.raises(TruncatedWindowError):
            enumerate_injective_endomorphisms(n21_model)
        with pytest.raises(TruncatedWindowError):
            enumerate_automorphisms(n21_model)


# 🔺✅🔚
