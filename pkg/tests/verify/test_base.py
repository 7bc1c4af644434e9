#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for checks, reports and the report runner."""

from __future__ import annotations

import json
from pathlib import Path

from provide.testkit.mocking import patch
import pytest

from provide.arccomplex.errors import ExportError, RejectedInputError
from provide.arccomplex.verify.base import Check, Report, ReportGenerator, ReportRunner, save_report


@pytest.mark.unit
class TestCheck:
    """Test values recorded on checks."""

    def test_sets_are_sorted_lists(self) -> None:
        check = Check("sizes", {3, 1, 2}, (1, 2), passed=False)
        assert check.expected == [1, 2, 3]
        assert check.observed == [1, 2]

    def test_unknown_values_become_strings(self) -> None:
        check = Check("path", Path("a") / "b", {"k": Path("c")}, passed=True)
        assert check.expected == str(Path("a") / "b")
        assert check.observed == {"k": "c"}

    def test_to_dict(self) -> None:
        assert Check("n", 1, 1, True).to_dict() == {"name": "n", "expected": 1, "observed": 1, "passed": True}


@pytest.mark.unit
class TestReport:
    """Test report bookkeeping."""

    def test_add_compares_by_default(self) -> None:
        report = Report(case="demo")
        assert report.add("same", 4, 4).passed
        assert not report.add("different", 4, 5).passed
        assert report.add("override", ">= 1", 3, passed=True).passed
        assert not report.passed
        assert [check.name for check in report.failed_checks] == ["different"]

    def test_empty_report_passes(self) -> None:
        assert Report(case="empty").passed

    def test_truncation_notes_are_deduplicated(self) -> None:
        report = Report(case="demo")
        report.note_truncation("node cap")
        report.note_truncation("node cap")
        assert report.truncation == ["node cap"]

    def test_to_dict(self) -> None:
        report = Report(case="demo", runtime=1.23456)
        report.add("x", True, True)
        data = report.to_dict()
        assert data["case"] == "demo"
        assert data["passed"] is True
        assert data["runtime"] == 1.235
        assert data["checks"] == [{"name": "x", "expected": True, "observed": True, "passed": True}]


@pytest.mark.unit
class TestReportRunner:
    """Test section execution and error capture."""

    def test_sections_run_in_order(self) -> None:
        runner = ReportRunner("demo")
        runner.section("first", lambda report: report.add("a", 1, 1))
        runner.section("second", lambda report: report.add("b", 2, 2))
        report = runner.finish()
        assert [check.name for check in report.checks] == ["a", "b"]
        assert report.passed
        assert report.runtime >= 0

    def test_domain_error_becomes_failed_check(self) -> None:
        runner = ReportRunner("demo")

        def body(report: Report) -> None:
            raise RejectedInputError("bad arc", {"arc": 7})

        runner.section("flips", body)
        runner.section("after", lambda report: report.add("still-runs", True, True))
        report = runner.finish()
        failed = report.failed_checks
        assert len(failed) == 1
        assert failed[0].name == "flips"
        assert failed[0].observed == {"error_type": "RejectedInputError", "error": "bad arc", "arc": 7}
        assert report.checks[-1].name == "still-runs"

    def test_unexpected_error_becomes_failed_check(self) -> None:
        runner = ReportRunner("demo")

        def body(report: Report) -> None:
            raise ValueError("boom")

        runner.section("crash", body)
        assert runner.report.failed_checks[0].observed == {"error_type": "ValueError", "error": "boom"}

    def test_attempt(self) -> None:
        runner = ReportRunner("demo")
        assert runner.attempt("build", lambda: 42) == 42

        def fail() -> int:
            raise RejectedInputError("no")

        assert runner.attempt("broken", fail) is None
        assert [check.name for check in runner.report.checks] == ["broken"]


@pytest.mark.unit
class TestReportGenerator:
    """Test report rendering."""

    @pytest.fixture
    def report(self) -> Report:
        report = Report(case="demo", runtime=0.5)
        report.add("good", 1, 1)
        report.add("bad", 1, 2)
        report.note_truncation("node cap of 5 reached")
        return report

    def test_terminal(self, report: Report) -> None:
        text = ReportGenerator().generate(report, "terminal")
        assert "Arc Complex Report: demo" in text
        assert "✅ good" in text
        assert "❌ bad" in text
        assert "expected: 1" in text
        assert "observed: 2" in text
        assert "node cap of 5 reached" in text
        assert text.endswith("❌ demo: FAILED (1/2 checks, 0.50s)")

    def test_summary(self, report: Report) -> None:
        assert ReportGenerator().generate(report, "summary") == "❌ demo: FAILED (1/2 checks, 0.50s)"

    def test_json(self, report: Report) -> None:
        data = json.loads(ReportGenerator().generate(report, "json"))
        assert data["passed"] is False
        assert data["truncation"] == ["node cap of 5 reached"]

    def test_unsupported_format(self, report: Report) -> None:
        with pytest.raises(ValueError, match="Unsupported report format"):
            ReportGenerator().generate(report, "html")


@pytest.mark.unit
class TestSaveReport:
    """Test report files."""

    def test_writes_json(self, tmp_path: Path) -> None:
        report = Report(case="demo")
        report.add("x", 1, 1)
        path = save_report(report, tmp_path / "nested" / "report.json")
        assert json.loads(path.read_text(encoding="utf-8"))["case"] == "demo"

    def test_write_failure(self, tmp_path: Path) -> None:
        with (
            patch("provide.arccomplex.verify.base.atomic_write_text", side_effect=OSError("disk full")),
            pytest.raises(ExportError, match="disk full") as excinfo,
        ):
            save_report(Report(case="demo"), tmp_path / "report.json")
        assert excinfo.value.path == tmp_path / "report.json"


# 🔺✅🔚
