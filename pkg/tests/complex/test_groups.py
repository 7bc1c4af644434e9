#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for automorphism groups and small-group identification."""

from __future__ import annotations

import pytest

from provide.arccomplex.complex.groups import (
    D4,
    INFINITE,
    INFINITE_DIHEDRAL,
    TRIVIAL,
    UNKNOWN,
    Z2,
    Z2_X_Z2,
    Z4,
    GroupInvariants,
    automorphism_group,
    identify_group,
    is_member,
    symbolic_invariants,
)
from provide.arccomplex.complex.maps import identity_map, map_from_function
from provide.arccomplex.complex.models import one_crosscap_one_boundary, reflection
from provide.arccomplex.complex.window import ComplexWindow, complex_from_ball
from provide.arccomplex.errors import RejectedInputError, TruncatedWindowError
from provide.arccomplex.flips.ball import FlipGraphBall


@pytest.mark.unit
class TestIdentifyGroup:
    """Test the small-group table."""

    @pytest.mark.parametrize(
        ("invariants", "name"),
        [
            (GroupInvariants(order=1, abelian=True, exponent=1), TRIVIAL),
            (GroupInvariants(order=2, abelian=True, exponent=2), Z2),
            (GroupInvariants(order=4, abelian=True, exponent=2), Z2_X_Z2),
            (GroupInvariants(order=4, abelian=True, exponent=4), Z4),
            (GroupInvariants(order=8, abelian=False, exponent=4, dihedral_relation=True), D4),
            (GroupInvariants(order=8, abelian=False, exponent=4), UNKNOWN),
            (GroupInvariants(order=6, abelian=True, exponent=6), UNKNOWN),
            (
                GroupInvariants(
                    order=None, abelian=False, has_shift=True, has_involution=True, inverts_shift=True
                ),
                INFINITE_DIHEDRAL,
            ),
            (GroupInvariants(order=None, abelian=False, has_shift=True), UNKNOWN),
        ],
    )
    def test_table(self, invariants: GroupInvariants, name: str) -> None:
        assert identify_group(invariants) == name

    @pytest.mark.parametrize(
        "invariants",
        [
            GroupInvariants(order=0, abelian=True),
            GroupInvariants(order=4, abelian=True, exponent=3),
            GroupInvariants(order=4, abelian=False, exponent=2),
            GroupInvariants(order=9, abelian=False, exponent=3, dihedral_relation=True),
            GroupInvariants(order=None, abelian=True, has_shift=True, has_involution=True, inverts_shift=True),
        ],
    )
    def test_contradictions(self, invariants: GroupInvariants) -> None:
        with pytest.raises(RejectedInputError):
            identify_group(invariants)


@pytest.mark.unit
class TestAutomorphismGroup:
    """Test groups of the small cases."""

    def test_one_crosscap_two_boundary(self, n12_model: ComplexWindow) -> None:
        report = automorphism_group(n12_model)
        assert report.order == 4
        assert report.abelian
        assert report.exponent == 2
        assert report.name == Z2_X_Z2
        assert len(report.generators) == 2
        assert len(report.elements) == 4

    def test_single_vertex_is_trivial(self) -> None:
        report = automorphism_group(one_crosscap_one_boundary())
        assert report.name == TRIVIAL
        assert report.order == 1

    def test_two_crosscap_model_is_infinite_dihedral(self, n21_model: ComplexWindow) -> None:
        report = automorphism_group(n21_model)
        assert report.order == INFINITE
        assert report.name == INFINITE_DIHEDRAL
        assert not report.abelian
        assert report.elements == ()

    def test_truncated_engine_window(self, n22_ball: FlipGraphBall) -> None:
        with pytest.raises(TruncatedWindowError):
            automorphism_group(complex_from_ball(n22_ball))

    def test_membership(self, n12_model: ComplexWindow) -> None:
        report = automorphism_group(n12_model)
        assert is_member(identity_map(n12_model), report)
        first = n12_model.vertices[0]
        assert not is_member(map_from_function(n12_model, lambda v: first), report)


@pytest.mark.unit
class TestSymbolicInvariants:
    """Test the relations checked on the two-crosscap model window."""

    def test_shift_and_reflection(self, n21_model: ComplexWindow) -> None:
        invariants = symbolic_invariants(n21_model)
        assert invariants.has_shift
        assert invariants.has_involution
        assert invariants.inverts_shift
        assert not invariants.abelian

    def test_commuting_pair_is_abelian(self, n21_model: ComplexWindow) -> None:
        invariants = symbolic_invariants(n21_model, reflection_map=lambda v: v)
        assert invariants.abelian
        assert not invariants.inverts_shift
        assert identify_group(invariants) == UNKNOWN

    def test_abelian_dihedral_relations_are_contradictory(self, n21_model: ComplexWindow) -> None:
        """Test an involution used as its own shift passes every relation and commutes."""
        invariants = symbolic_invariants(
            n21_model, shift_map=reflection, shift_inverse=reflection, reflection_map=reflection
        )
        assert invariants.abelian
        assert invariants.has_shift and invariants.has_involution and invariants.inverts_shift
        with pytest.raises(RejectedInputError, match="abelian"):
            identify_group(invariants)


# 🔺✅🔚
