#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for DOT and JSON export of balls and windows."""

from __future__ import annotations

import json
from pathlib import Path

from provide.testkit.mocking import patch
import pytest

from provide.arccomplex.complex.models import two_crosscap_window
from provide.arccomplex.complex.window import ComplexWindow
from provide.arccomplex.errors import ExportError, RejectedInputError
from provide.arccomplex.flips.ball import FlipGraphBall, flip_graph_ball
from provide.arccomplex.surface.triangulation import Triangulation
from provide.arccomplex.verify.export import export_graph, load_graph, render_graph


def _reexport(obj: FlipGraphBall | ComplexWindow, tmp_path: Path) -> tuple[bytes, bytes]:
    first = export_graph(obj, "json", tmp_path / "first.json")
    second = export_graph(load_graph(first), "json", tmp_path / "second.json")
    return first.read_bytes(), second.read_bytes()


@pytest.mark.unit
class TestJsonExport:
    """Test JSON documents."""

    def test_single_node_ball(self, n12: Triangulation) -> None:
        data = json.loads(render_graph(flip_graph_ball(n12, 0), "json"))
        assert data["kind"] == "ball"
        assert len(data["nodes"]) == 1
        assert data["edges"] == []
        assert data["nodes"][0]["parent"] is None

    def test_ball_reexports_identically(self, n12: Triangulation, tmp_path: Path) -> None:
        first, second = _reexport(flip_graph_ball(n12, 2), tmp_path)
        assert first == second

    def test_imported_ball_keeps_its_tree(self, n12: Triangulation, tmp_path: Path) -> None:
        ball = flip_graph_ball(n12, 2)
        loaded = load_graph(export_graph(ball, "json", tmp_path / "ball.json"))
        assert isinstance(loaded, FlipGraphBall)
        assert [node.key for node in loaded.nodes] == [node.key for node in ball.nodes]
        assert all(
            (node.parent_move is None) == (node.parent is None) for node in loaded.nodes
        )

    def test_finite_model_reexports_identically(self, n12_model: ComplexWindow, tmp_path: Path) -> None:
        first, second = _reexport(n12_model, tmp_path)
        assert first == second
        data = json.loads(first)
        assert data["kind"] == "complex"
        assert len(data["vertices"]) == 8
        assert all("arc" in vertex for vertex in data["vertices"])

    def test_symbolic_model_reexports_identically(self, tmp_path: Path) -> None:
        first, second = _reexport(two_crosscap_window(3), tmp_path)
        assert first == second
        labels = [vertex["label"] for vertex in json.loads(first)["vertices"]]
        assert labels[:3] == ["a", "b_-3", "b_-2"]


@pytest.mark.unit
class TestDotExport:
    """Test DOT 1-skeletons."""

    def test_finite_model(self, n12_model: ComplexWindow) -> None:
        text = render_graph(n12_model, "dot")
        assert text.startswith('graph "(1,2) model" {')
        assert sum(1 for line in text.splitlines() if "[label=" in line) == 8
        assert "trusted=true" in text

    def test_symbolic_model(self, n21_model: ComplexWindow) -> None:
        text = render_graph(n21_model, "dot")
        assert 'label="a", degree=9, trusted=false' in text
        assert sum(1 for line in text.splitlines() if " -- " in line) == 33

    def test_ball(self, n12_ball: FlipGraphBall) -> None:
        text = render_graph(n12_ball, "dot")
        assert "  0 [depth=0, complete=true];" in text
        assert sum(1 for line in text.splitlines() if " -- " in line) == len(n12_ball.edges)


@pytest.mark.unit
class TestExportErrors:
    """Test failure modes of export and import."""

    def test_unsupported_format(self, n12_model: ComplexWindow, tmp_path: Path) -> None:
        with pytest.raises(RejectedInputError, match="unsupported export format"):
            export_graph(n12_model, "svg", tmp_path / "out.svg")

    def test_write_failure(self, n12_model: ComplexWindow, tmp_path: Path) -> None:
        with (
            patch("provide.arccomplex.verify.export.atomic_write_text", side_effect=OSError("read-only")),
            pytest.raises(ExportError, match="read-only"),
        ):
            export_graph(n12_model, "dot", tmp_path / "out.dot")

    @pytest.mark.parametrize(
        ("text", "match"),
        [
            ('{"kind": "tree"}', "unknown document kind"),
            ("[1, 2]", "unknown document kind"),
            ('{"kind": "ball"}', "malformed ball document"),
            ('{"kind": "complex", "base": null}', "malformed complex document"),
            ("{", "invalid JSON"),
        ],
    )
    def test_bad_documents(self, tmp_path: Path, text: str, match: str) -> None:
        path = tmp_path / "doc.json"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(RejectedInputError, match=match):
            load_graph(path)

    def test_unknown_symbolic_label(self, tmp_path: Path) -> None:
        data = json.loads(render_graph(two_crosscap_window(1), "json"))
        data["vertices"][0]["label"] = "z_1"
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        with pytest.raises(RejectedInputError, match="unknown symbolic vertex"):
            load_graph(path)


# 🔺✅🔚
