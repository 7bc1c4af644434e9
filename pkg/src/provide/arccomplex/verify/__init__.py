#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Reports, configuration searches and exports behind the command line."""

from __future__ import annotations

from .base import Check, Report, ReportGenerator, ReportRunner, save_report
from .export import export_graph, load_graph, render_graph
from .patterns import (
    BUILTIN_PATTERNS,
    ConfigurationPattern,
    Witness,
    check_pattern,
    find_configuration,
    load_pattern,
    search_ball,
)
from .small_cases import run_small_case_report
from .suite import run_invariant_suite

__all__ = [
    "BUILTIN_PATTERNS",
    "Check",
    "ConfigurationPattern",
    "Report",
    "ReportGenerator",
    "ReportRunner",
    "Witness",
    "check_pattern",
    "export_graph",
    "find_configuration",
    "load_graph",
    "load_pattern",
    "render_graph",
    "run_invariant_suite",
    "run_small_case_report",
    "save_report",
    "search_ball",
]

# 🔺✅🔚
