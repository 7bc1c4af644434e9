#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""JSON and DOT export of flip-graph balls and complex windows.

JSON documents::

    ball:    {"kind": "ball", "radius", "max_nodes", "stabilized", "truncation",
              "root": <triangulation>,
              "nodes": [{"index", "depth", "parent", "complete",
                         "triangulation": <triangulation>, "arcs": [<arc>, ...]}],
              "edges": [[u, v], ...]}
    complex: {"kind": "complex", "name", "complete", "symbolic",
              "base": <triangulation> | null,
              "vertices": [{"id", "label", "degree", "trusted", "arc"?}],
              "facets": [[id, ...], ...]}

Arcs are written over the ball root (or the window base). Output is sorted and
indented so that exporting an imported document reproduces it byte for byte.
DOT output is the 1-skeleton with degree and trust annotations for windows,
and depth annotations for balls.
"""

from __future__ import annotations

import json
from pathlib import Path
import re
from typing import Any

from provide.foundation import logger
from provide.foundation.file import atomic_write_text, ensure_dir

from provide.arccomplex.arcs.normal import NormalArc, normal_arc_from_dict, normal_arc_to_dict
from provide.arccomplex.complex.models import A, ModelVertex
from provide.arccomplex.complex.window import ComplexWindow, Vertex, one_skeleton
from provide.arccomplex.config import EXPORT_FORMATS
from provide.arccomplex.errors import ExportError, RejectedInputError
from provide.arccomplex.flips.ball import BallEdge, BallNode, FlipGraphBall, arc_between
from provide.arccomplex.flips.moves import flip
from provide.arccomplex.surface.io import triangulation_from_dict, triangulation_to_dict

_MODEL_LABEL = re.compile(r"^(?P<family>[bc])_(?P<index>-?\d+)$")


def _vertex_label(v: Vertex) -> str:
    if isinstance(v, NormalArc):
        return v.describe()
    return str(v)


def _parse_model_vertex(label: str) -> ModelVertex:
    if label == str(A):
        return A
    match = _MODEL_LABEL.match(label)
    if match is None:
        raise RejectedInputError(f"unknown symbolic vertex {label!r}", {"label": label})
    return ModelVertex(match["family"], int(match["index"]))


def ball_to_dict(ball: FlipGraphBall) -> dict[str, Any]:
    return {
        "kind": "ball",
        "radius": ball.radius,
        "max_nodes": ball.max_nodes,
        "stabilized": ball.stabilized,
        "truncation": list(ball.truncation),
        "root": triangulation_to_dict(ball.root),
        "nodes": [
            {
                "index": node.index,
                "depth": node.depth,
                "parent": node.parent,
                "complete": node.complete,
                "triangulation": triangulation_to_dict(node.triangulation),
                "arcs": [normal_arc_to_dict(a) for a in node.arcs],
            }
            for node in ball.nodes
        ],
        "edges": [[edge.source, edge.target] for edge in ball.edges],
    }


def ball_from_dict(data: dict[str, Any]) -> FlipGraphBall:
    """Rebuild a ball; the flips along its tree edges are recomputed."""
    try:
        root = triangulation_from_dict(data["root"])
        ball = FlipGraphBall(
            root=root,
            radius=int(data["radius"]),
            max_nodes=int(data["max_nodes"]),
            stabilized=bool(data["stabilized"]),
            truncation=[str(note) for note in data["truncation"]],
        )
        for item in data["nodes"]:
            parent = item["parent"]
            node = BallNode(
                index=int(item["index"]),
                triangulation=triangulation_from_dict(item["triangulation"]),
                arcs=tuple(normal_arc_from_dict(root, arc) for arc in item["arcs"]),
                depth=int(item["depth"]),
                parent=None if parent is None else int(parent),
                complete=bool(item["complete"]),
            )
            if node.index != len(ball.nodes):
                raise RejectedInputError("ball nodes must be listed in index order", {"node": node.index})
            ball.nodes.append(node)
            ball.index[node.key] = node.index
            if node.parent is not None:
                source = ball.node(node.parent)
                node.parent_move = flip(source.triangulation, arc_between(ball, source.index, node.index))
        ball.edges.extend(BallEdge(int(u), int(v)) for u, v in data["edges"])
    except (KeyError, TypeError, ValueError) as e:
        raise RejectedInputError(f"malformed ball document: {e}", {"error": str(e)}) from e
    return ball


def complex_to_dict(w: ComplexWindow) -> dict[str, Any]:
    ids = {v: i for i, v in enumerate(w.vertices)}
    vertices = []
    for v in w.vertices:
        entry: dict[str, Any] = {
            "id": ids[v],
            "label": _vertex_label(v),
            "degree": w.degree(v),
            "trusted": w.is_trusted(v),
        }
        if isinstance(v, NormalArc):
            entry["arc"] = normal_arc_to_dict(v)
        vertices.append(entry)
    return {
        "kind": "complex",
        "name": w.name,
        "complete": w.complete,
        "symbolic": w.symbolic,
        "base": None if w.base is None else triangulation_to_dict(w.base),
        "vertices": vertices,
        "facets": sorted(sorted(ids[v] for v in facet) for facet in w.facets),
    }


def complex_from_dict(data: dict[str, Any]) -> ComplexWindow:
    try:
        base = None if data["base"] is None else triangulation_from_dict(data["base"])
        vertices: list[Vertex] = []
        for item in data["vertices"]:
            if "arc" in item:
                if base is None:
                    raise RejectedInputError("arc vertices need a base triangulation")
                vertices.append(normal_arc_from_dict(base, item["arc"]))
            else:
                vertices.append(_parse_model_vertex(str(item["label"])))
        trusted = frozenset(v for v, item in zip(vertices, data["vertices"], strict=True) if item["trusted"])
        return ComplexWindow(
            vertices=tuple(vertices),
            facets=frozenset(frozenset(vertices[int(i)] for i in facet) for facet in data["facets"]),
            trusted=trusted,
            complete=bool(data["complete"]),
            symbolic=bool(data["symbolic"]),
            base=base,
            name=str(data["name"]),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise RejectedInputError(f"malformed complex document: {e}", {"error": str(e)}) from e


def _dot_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return json.dumps(str(value), ensure_ascii=False)


def _dot(name: str, nodes: list[tuple[int, dict[str, Any]]], edges: list[tuple[int, int]]) -> str:
    lines = [f"graph {json.dumps(name, ensure_ascii=False)} {{"]
    for node, attributes in nodes:
        rendered = ", ".join(f"{key}={_dot_value(value)}" for key, value in attributes.items())
        lines.append(f"  {node} [{rendered}];")
    lines.extend(f"  {u} -- {v};" for u, v in sorted(edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def ball_to_dot(ball: FlipGraphBall) -> str:
    nodes = [(node.index, {"depth": node.depth, "complete": node.complete}) for node in ball.nodes]
    return _dot(f"flip graph ball radius {ball.radius}", nodes, [(e.source, e.target) for e in ball.edges])


def complex_to_dot(w: ComplexWindow) -> str:
    graph = one_skeleton(w)
    ids = {v: i for i, v in enumerate(w.vertices)}
    nodes = [
        (ids[v], {"label": _vertex_label(v), "degree": graph.nodes[v]["degree"], "trusted": graph.nodes[v]["trusted"]})
        for v in w.vertices
    ]
    edges = [(min(ids[u], ids[v]), max(ids[u], ids[v])) for u, v in graph.edges()]
    return _dot(w.name or "arc complex window", nodes, edges)


def render_graph(obj: FlipGraphBall | ComplexWindow, format: str) -> str:
    """Render a ball or window as DOT or JSON text."""
    if format not in EXPORT_FORMATS:
        raise RejectedInputError(f"unsupported export format {format!r}", {"known": list(EXPORT_FORMATS)})
    if isinstance(obj, FlipGraphBall):
        if format == "dot":
            return ball_to_dot(obj)
        return json.dumps(ball_to_dict(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if format == "dot":
        return complex_to_dot(obj)
    return json.dumps(complex_to_dict(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def export_graph(obj: FlipGraphBall | ComplexWindow, format: str, path: Path) -> Path:
    """Write a ball or window to ``path`` atomically.

    Raises:
        RejectedInputError: ``format`` is not ``"dot"`` or ``"json"``.
        ExportError: The destination cannot be written.
    """
    path = Path(path)
    text = render_graph(obj, format)
    try:
        ensure_dir(path.parent)
        atomic_write_text(path, text)
    except OSError as e:
        raise ExportError(f"cannot write {path}: {e}", path) from e
    logger.info("graph_exported", kind=type(obj).__name__, format=format, path=str(path), size=len(text))
    return path


def load_graph(path: Path) -> FlipGraphBall | ComplexWindow:
    """Read a JSON document written by :func:`export_graph`.

    Raises:
        RejectedInputError: The file is unreadable, not JSON, or of unknown kind.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise RejectedInputError(f"cannot read {path}: {e}", {"path": str(path)}) from e
    except json.JSONDecodeError as e:
        raise RejectedInputError(f"invalid JSON in {path}: {e}", {"path": str(path)}) from e
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "ball":
        return ball_from_dict(data)
    if kind == "complex":
        return complex_from_dict(data)
    raise RejectedInputError(f"unknown document kind {kind!r}", {"path": str(path)})


# 🔺✅🔚
