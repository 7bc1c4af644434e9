#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for normal coordinates of arcs."""

from __future__ import annotations

import pytest

from provide.arccomplex.arcs.normal import (
    SEGMENT_INDEX,
    SEGMENT_TYPES,
    NormalArc,
    Visit,
    arcs_equal,
    base_arc,
    corner,
    normal_arc_from_dict,
    normal_arc_to_dict,
    side,
    validate_coordinates,
    validate_normal_arc,
)
from provide.arccomplex.errors import RejectedInputError
from provide.arccomplex.flips.moves import flip, is_flippable
from provide.arccomplex.surface.triangulation import Triangulation


def _first_flippable(t: Triangulation) -> int:
    return next(k for k in t.arcs() if is_flippable(t, k))


@pytest.mark.unit
class TestBaseArcs:
    """Test the arcs of a triangulation in its own coordinates."""

    def test_base_arcs_are_recognised(self, n22: Triangulation) -> None:
        for k in n22.arcs():
            a = base_arc(n22, k)
            assert a.base_arc_id == k
            assert a.crossing_weight == 0
            assert a.describe() == f"e{k}"
            assert a.crossed_arcs() == []

    def test_base_arcs_are_distinct(self, n22: Triangulation) -> None:
        assert len({base_arc(n22, k) for k in n22.arcs()}) == n22.arc_count

    def test_base_arcs_are_valid(self, n21: Triangulation) -> None:
        for k in n21.arcs():
            assert validate_normal_arc(base_arc(n21, k)) == []

    def test_both_sides_of_an_arc_give_the_same_coordinates(self, n12: Triangulation) -> None:
        """Test the corner-to-corner visit on either side of an arc canonicalizes identically."""
        for k in n12.arcs():
            (p, slot_a), (q, slot_b) = n12.arc_slots(k)
            a, b = slot_a // 2, slot_b // 2
            here = NormalArc.from_route(n12, [Visit(p, corner(a - 1), corner(a))])
            there = NormalArc.from_route(n12, [Visit(q, corner(b - 1), corner(b))])
            assert here == there == base_arc(n12, k)

    def test_unknown_arc(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError):
            base_arc(n12, 3)


@pytest.mark.unit
class TestRoutes:
    """Test canonicalization of routes."""

    def test_inessential_corner_loop_rejected(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError, match="inessential"):
            NormalArc.from_route(n12, [Visit(0, corner(0), corner(0))])

    def test_route_must_start_on_the_boundary(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError, match="boundary"):
            NormalArc.from_route(n12, [Visit(0, side(0), corner(1))])

    def test_empty_route_rejected(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError, match="empty"):
            NormalArc.from_route(n12, [])

    def test_flip_replacement_crosses_the_flipped_arc_once(self, n22: Triangulation) -> None:
        e = _first_flippable(n22)
        replacement = flip(n22, e).replacement
        assert replacement.base_arc_id is None
        assert replacement.crossing_weight == 1
        assert replacement.crossed_arcs() == [e]
        assert replacement.crossings_with(e) == 1
        assert all(replacement.crossings_with(k) == 0 for k in n22.arcs() if k != e)
        assert replacement.describe().startswith("arc[")
        assert validate_normal_arc(replacement) == []

    def test_arcs_over_different_bases_are_not_compared(self, n12: Triangulation, n22: Triangulation) -> None:
        with pytest.raises(RejectedInputError, match="transport first"):
            arcs_equal(base_arc(n12, 0), base_arc(n22, 0))

    def test_arcs_equal_over_one_base(self, n12: Triangulation) -> None:
        assert arcs_equal(base_arc(n12, 0), base_arc(n12, 0))
        assert not arcs_equal(base_arc(n12, 0), base_arc(n12, 1))


@pytest.mark.unit
class TestCoordinates:
    """Test coordinate validation and the JSON form of arcs."""

    def test_segment_types(self) -> None:
        assert len(SEGMENT_TYPES) == 15
        assert SEGMENT_INDEX[(0, 5)] == 4

    def test_document_round_trip(self, n22: Triangulation) -> None:
        """Test base arcs and a crossing arc rebuild from their coordinates."""
        arcs = [base_arc(n22, k) for k in n22.arcs()]
        arcs.append(flip(n22, _first_flippable(n22)).replacement)
        for a in arcs:
            data = normal_arc_to_dict(a)
            assert len(data["segments"]) == n22.piece_count
            assert all(len(row) == 15 for row in data["segments"])
            assert normal_arc_from_dict(n22, data) == a

    def test_wrong_shape(self, n12: Triangulation) -> None:
        a = base_arc(n12, 0)
        codes = [v.code for v in validate_coordinates(n12, a.segments[:1], a.endpoints)]
        assert codes == ["shape"]

    def test_negative_counts(self, n12: Triangulation) -> None:
        segments = [list(row) for row in base_arc(n12, 0).segments]
        segments[0][0] = -1
        assert [v.code for v in validate_coordinates(n12, segments, base_arc(n12, 0).endpoints)] == ["shape"]

    def test_endpoint_on_an_arc_slot(self, n12: Triangulation) -> None:
        a = base_arc(n12, 0)
        violations = validate_coordinates(n12, a.segments, [(0, 0), a.endpoints[1]])
        assert [v.code for v in violations] == ["shape"]

    def test_extra_segment_breaks_the_endpoint_count(self, n12: Triangulation) -> None:
        """Test an added corner-to-corner segment is caught instead of traced."""
        a = base_arc(n12, 0)
        data = normal_arc_to_dict(a)
        data["segments"][0][SEGMENT_INDEX[(1, 3)]] += 1
        assert "endpoints" in {v.code for v in validate_coordinates(n12, data["segments"], a.endpoints)}
        with pytest.raises(RejectedInputError, match="invalid normal arc"):
            normal_arc_from_dict(n12, data)

    def test_malformed_document(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError, match="malformed"):
            normal_arc_from_dict(n12, {"segments": [[0] * 15]})


# 🔺✅🔚
