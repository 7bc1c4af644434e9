#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Checks, reports and the runner that collects them."""

from __future__ import annotations

from collections.abc import Callable
import json
from pathlib import Path
import time
from typing import Any, TypeVar

import attrs
from provide.foundation import logger
from provide.foundation.file import atomic_write_text, ensure_dir

from provide.arccomplex.errors import ArcComplexError, ExportError

T = TypeVar("T")


def _plain(value: Any) -> Any:
    """Reduce observed values to JSON-friendly data."""
    if isinstance(value, bool | int | float | str) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple | set | frozenset):
        items = [_plain(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, set | frozenset) else items
    return str(value)


@attrs.define(frozen=True)
class Check:
    """One named expectation and what was actually seen.

    Attributes:
        name: Stable check identifier, e.g. ``"vertex-count"``.
        expected: The value the check requires.
        observed: The value computed, or the error raised while computing it.
        passed: Whether ``observed`` met ``expected``.
    """

    name: str
    expected: Any = attrs.field(converter=_plain)
    observed: Any = attrs.field(converter=_plain)
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "expected": self.expected, "observed": self.observed, "passed": self.passed}


@attrs.define
class Report:
    """Checks gathered for one case; it passes iff every check passes."""

    case: str
    checks: list[Check] = attrs.field(factory=list)
    runtime: float = 0.0
    truncation: list[str] = attrs.field(factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, expected: Any, observed: Any, passed: bool | None = None) -> Check:
        """Record a check; ``passed`` defaults to ``expected == observed``."""
        check = Check(name, expected, observed, expected == observed if passed is None else passed)
        self.checks.append(check)
        if not check.passed:
            logger.warning("check_failed", case=self.case, check=name, expected=expected, observed=observed)
        return check

    def note_truncation(self, note: str) -> None:
        if note not in self.truncation:
            self.truncation.append(note)
            logger.warning("report_truncated", case=self.case, note=note)

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case,
            "passed": self.passed,
            "runtime": round(self.runtime, 3),
            "checks": [check.to_dict() for check in self.checks],
            "truncation": list(self.truncation),
        }


class ReportRunner:
    """Runs report sections in order and turns their exceptions into failed checks.

    A section is a callable that records checks on the report. When it raises,
    the runner records one failed check named after the section carrying the
    error type and message, then moves on to the next section.
    """

    def __init__(self, case: str) -> None:
        self.report = Report(case=case)
        self._start = time.perf_counter()

    def section(self, name: str, body: Callable[[Report], None]) -> None:
        try:
            body(self.report)
        except ArcComplexError as e:
            self.report.add(
                name,
                "no error",
                {"error_type": type(e).__name__, "error": e.message, **_plain(e.details)},
                passed=False,
            )
        except Exception as e:
            logger.error("check_section_crashed", case=self.report.case, section=name, error=str(e))
            self.report.add(name, "no error", {"error_type": type(e).__name__, "error": str(e)}, passed=False)

    def attempt(self, name: str, factory: Callable[[], T]) -> T | None:
        """Build something later sections need; a failure is recorded and gives ``None``."""
        built: list[T] = []
        self.section(name, lambda _report: built.append(factory()))
        return built[0] if built else None

    def finish(self) -> Report:
        self.report.runtime = time.perf_counter() - self._start
        logger.info(
            "report_finished",
            case=self.report.case,
            passed=self.report.passed,
            checks=len(self.report.checks),
            runtime=round(self.report.runtime, 3),
        )
        return self.report


class ReportGenerator:
    """Renders reports as terminal text, a one-line summary, or JSON."""

    @staticmethod
    def _status_icon(passed: bool) -> str:
        return "✅" if passed else "❌"

    @staticmethod
    def _status_text(passed: bool) -> str:
        return "PASSED" if passed else "FAILED"

    def generate(self, report: Report, format: str = "terminal") -> str:
        if format == "terminal":
            return self._generate_terminal_report(report)
        if format == "summary":
            return self._generate_summary(report)
        if format == "json":
            return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)
        raise ValueError(f"Unsupported report format: {format}")

    def _generate_summary(self, report: Report) -> str:
        passed = sum(1 for check in report.checks if check.passed)
        return (
            f"{self._status_icon(report.passed)} {report.case}: {self._status_text(report.passed)} "
            f"({passed}/{len(report.checks)} checks, {report.runtime:.2f}s)"
        )

    def _generate_terminal_report(self, report: Report) -> str:
        lines = [f"🔺 Arc Complex Report: {report.case}", "=" * 50, ""]
        for check in report.checks:
            lines.append(f"{self._status_icon(check.passed)} {check.name}")
            if not check.passed:
                lines.append(f"    expected: {check.expected}")
                lines.append(f"    observed: {check.observed}")
        if report.truncation:
            lines.append("")
            lines.append("⚠️  Truncation:")
            lines.extend(f"  - {note}" for note in report.truncation)
        lines.append("")
        lines.append(self._generate_summary(report))
        return "\n".join(lines)


def save_report(report: Report, path: Path) -> Path:
    """Write the JSON form of ``report`` atomically.

    Raises:
        ExportError: The destination cannot be written.
    """
    path = Path(path)
    try:
        ensure_dir(path.parent)
        atomic_write_text(path, ReportGenerator().generate(report, "json") + "\n")
    except OSError as e:
        raise ExportError(f"cannot write report to {path}: {e}", path) from e
    logger.info("report_saved", case=report.case, path=str(path))
    return path


# 🔺✅🔚
