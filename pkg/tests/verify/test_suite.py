#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for invariant sweeps over flip-graph balls."""

from __future__ import annotations

import pytest

from provide.arccomplex.verify.base import Report
from provide.arccomplex.verify.suite import DEFAULT_SAMPLES, run_invariant_suite


def _stable(report_dict: dict) -> dict:
    return {key: value for key, value in report_dict.items() if key != "runtime"}


@pytest.mark.integration
class TestInvariantSuite:
    """Test sweeps around built triangulations."""

    def test_one_crosscap_two_boundary(self) -> None:
        report = run_invariant_suite(1, 2, False, radius=3, samples=50, seed=3)
        assert report.passed, report.failed_checks
        names = {check.name for check in report.checks}
        assert {
            "arc-count",
            "surface-invariance",
            "flip-involution",
            "transport-round-trip",
            "random-pair-connectivity",
            "induced-maps-are-automorphisms",
        } <= names

    def test_same_seed_same_report(self) -> None:
        first = run_invariant_suite(2, 2, False, radius=1, samples=30, seed=11)
        second = run_invariant_suite(2, 2, False, radius=1, samples=30, seed=11)
        assert _stable(first.to_dict()) == _stable(second.to_dict())
        assert first.passed, first.failed_checks

    def test_surface_without_decomposition(self) -> None:
        report = run_invariant_suite(1, 1, False, radius=1, samples=5)
        assert not report.passed
        assert [check.name for check in report.failed_checks] == ["build-surface"]
        assert report.failed_checks[0].observed["error_type"] == "UnsupportedSignatureError"

    def test_malformed_signature(self) -> None:
        report = run_invariant_suite(0, 2, False, radius=1, samples=5)
        assert not report.passed
        assert report.failed_checks[0].name == "signature"

    def test_node_cap_skips_induced_maps(self) -> None:
        report = run_invariant_suite(2, 2, False, radius=3, samples=10, max_nodes=5)
        assert any("node cap of 5" in note for note in report.truncation)
        assert any("induced maps skipped" in note for note in report.truncation)
        assert not any(check.name.startswith("induced-maps") for check in report.checks)

    def test_without_symmetries(self) -> None:
        report = run_invariant_suite(1, 2, False, radius=2, samples=10, symmetries=False)
        assert not any(check.name == "gluing-symmetries" for check in report.checks)
        assert report.truncation == []

    @pytest.mark.slow
    def test_orientable_pants(self) -> None:
        report = run_invariant_suite(0, 3, True, radius=4, samples=100)
        assert report.passed, report.failed_checks


def _observed(report: Report, name: str) -> object:
    return next(check.observed for check in report.checks if check.name == name)


@pytest.mark.slow
@pytest.mark.integration
class TestFullScaleSweeps:
    """Test the default sample count on radius-3 balls and connectivity at radius 4."""

    @pytest.mark.parametrize(("genus", "boundary"), [(1, 2), (2, 1), (1, 3), (2, 2), (3, 1)])
    def test_radius_three_counts(self, genus: int, boundary: int) -> None:
        report = run_invariant_suite(genus, boundary, False, radius=3, samples=DEFAULT_SAMPLES)
        assert report.passed, report.failed_checks
        assert _observed(report, "arc-count") == [3 * genus + 3 * boundary - 6]
        assert _observed(report, "piece-count") == [2 * genus + 2 * boundary - 4]
        assert _observed(report, "euler-characteristic") == [2 - genus - boundary]
        assert _observed(report, "boundary-cycles") == [boundary]
        assert _observed(report, "surface-invariance") == 0
        assert _observed(report, "flip-involution") == 0
        assert _observed(report, "flip-intersection-one") == 0
        assert _observed(report, "disjoint-flips-commute") == 0
        assert _observed(report, "completions-one-or-two") == 0

    def test_radius_four_connectivity(self) -> None:
        report = run_invariant_suite(2, 2, False, radius=4, samples=DEFAULT_SAMPLES, seed=5)
        assert report.passed, report.failed_checks
        assert _observed(report, "random-pair-connectivity") == 0


# 🔺✅🔚
