#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Shared triangulations, balls and windows.

Everything here is deterministic, so session-scoped fixtures are safe to share
between tests that only read them."""

from __future__ import annotations

from provide.testkit import CliTestRunner
import pytest

from provide.arccomplex.complex.models import one_crosscap_two_boundary, two_crosscap_window
from provide.arccomplex.complex.window import ComplexWindow
from provide.arccomplex.flips.ball import FlipGraphBall, flip_graph_ball
from provide.arccomplex.surface.builder import build_surface
from provide.arccomplex.surface.triangulation import Triangulation


@pytest.fixture(scope="session")
def n12() -> Triangulation:
    """One crosscap, two boundary components: three arcs on two pieces."""
    return build_surface(1, 2, False)


@pytest.fixture(scope="session")
def n21() -> Triangulation:
    """Two crosscaps, one boundary component: two twisted pieces."""
    return build_surface(2, 1, False)


@pytest.fixture(scope="session")
def n22() -> Triangulation:
    """Two crosscaps, two boundary components: six arcs on four pieces."""
    return build_surface(2, 2, False)


@pytest.fixture(scope="session")
def n12_ball(n12: Triangulation) -> FlipGraphBall:
    """The whole flip graph of the one-crosscap, two-boundary surface."""
    return flip_graph_ball(n12, 10)


@pytest.fixture(scope="session")
def n22_ball(n22: Triangulation) -> FlipGraphBall:
    return flip_graph_ball(n22, 1)


@pytest.fixture(scope="session")
def n12_model() -> ComplexWindow:
    return one_crosscap_two_boundary()


@pytest.fixture(scope="session")
def n21_model() -> ComplexWindow:
    return two_crosscap_window(4)


@pytest.fixture
def cli_runner() -> CliTestRunner:
    return CliTestRunner()


# 🔺✅🔚
