#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for cutting surfaces along arcs."""

from __future__ import annotations

from collections import Counter

import pytest

from provide.arccomplex.errors import RejectedInputError
from provide.arccomplex.surface.regions import arc_label, cut_along
from provide.arccomplex.surface.triangulation import Triangulation


@pytest.mark.unit
class TestCutAlong:
    """Test the regions left after cutting."""

    def test_cutting_every_arc_leaves_hexagons(self, n22: Triangulation) -> None:
        report = cut_along(n22, n22.arcs())
        assert len(report.regions) == n22.piece_count
        assert all(region.is_hexagon for region in report.regions)
        assert report.euler_characteristic == n22.piece_count

    def test_cutting_nothing_leaves_the_surface(self, n22: Triangulation) -> None:
        """Test the uncut surface is one nonorientable region of the same Euler characteristic."""
        report = cut_along(n22, [])
        (region,) = report.regions
        assert region.pieces == tuple(n22.pieces())
        assert not region.orientable
        assert region.euler_characteristic == n22.euler_characteristic
        assert not region.arc_sides

    def test_arc_sides_count_each_cut_side(self, n22: Triangulation) -> None:
        """Test every cut arc shows up on exactly two sides of the cut surface."""
        report = cut_along(n22, n22.arcs())
        totals = sum((region.arc_sides for region in report.regions), start=Counter[str]())
        assert dict(totals) == {arc_label(k): 2 for k in n22.arcs()}

    def test_self_glued_arc_shows_twice_on_its_piece(self, n21: Triangulation) -> None:
        report = cut_along(n21, n21.arcs())
        for piece in n21.pieces():
            assert sorted(report.region_of(piece).arc_sides.values()) == [1, 2]

    def test_region_of_unknown_piece(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError):
            cut_along(n12, n12.arcs()).region_of(n12.piece_count)

    def test_unknown_arc_rejected(self, n12: Triangulation) -> None:
        with pytest.raises(RejectedInputError, match="unknown arc"):
            cut_along(n12, [n12.arc_count])


# 🔺✅🔚
