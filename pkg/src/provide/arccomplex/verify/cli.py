#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""CLI commands for verification runs, configuration searches and exports.

Exit status is 0 when every check passes, 1 when a check fails (or a file
cannot be written) and 2 for an invalid invocation.
"""

from __future__ import annotations

from collections.abc import Callable
import json
from pathlib import Path
import sys
from typing import Any, TypeVar

import click

from provide.arccomplex.complex.models import SMALL_CASES, explicit_small_model
from provide.arccomplex.complex.window import complex_from_ball
from provide.arccomplex.config import DEFAULT_CONFIG, EXPORT_FORMATS, REPORT_FORMATS
from provide.arccomplex.errors import ArcComplexError, ExportError
from provide.arccomplex.flips.ball import flip_graph_ball
from provide.arccomplex.surface.builder import build_surface
from provide.arccomplex.surface.triangulation import SurfaceSignature
from provide.arccomplex.verify.base import Report, ReportGenerator, ReportRunner, save_report
from provide.arccomplex.verify.export import export_graph
from provide.arccomplex.verify.patterns import (
    BUILTIN_PATTERNS,
    ConfigurationPattern,
    Witness,
    builtin_pattern,
    load_pattern,
    search_ball,
)
from provide.arccomplex.verify.small_cases import run_small_case_report
from provide.arccomplex.verify.suite import run_invariant_suite

T = TypeVar("T")


def _usage(call: Callable[[], T]) -> T:
    """Run ``call``; input errors become click usage errors (exit 2)."""
    try:
        return call()
    except ArcComplexError as e:
        raise click.UsageError(e.message) from e


def _require_signature(genus: int, boundary: int, orientable: bool) -> SurfaceSignature:
    signature = _usage(lambda: SurfaceSignature(genus, boundary, orientable))
    if not signature.admits_hexagon_decomposition:
        raise click.UsageError(
            f"surface {signature.describe()} has no hexagon decomposition; "
            "use `export --what complex --case` or `verify small-case` for the small cases"
        )
    return signature


def _emit(report: Report, format: str, out: Path | None) -> None:
    click.echo(ReportGenerator().generate(report, format))
    if out is not None:
        try:
            save_report(report, out)
        except ExportError as e:
            raise click.FileError(str(e.path), hint=e.message) from e
    if not report.passed:
        sys.exit(1)


def _signature_options(command: Callable[..., Any]) -> Callable[..., Any]:
    for decorator in reversed(
        [
            click.option("--genus", "-g", type=int, required=True, help="Genus of the surface"),
            click.option("--boundary", "-r", type=int, required=True, help="Number of boundary components"),
            click.option(
                "--orientable/--nonorientable", default=False, help="Orientability (default: nonorientable)"
            ),
            click.option("--radius", type=int, default=DEFAULT_CONFIG.radius, show_default=True, help="Flip radius"),
            click.option(
                "--max-nodes", type=int, default=DEFAULT_CONFIG.max_nodes, show_default=True, help="Node cap"
            ),
        ]
    ):
        command = decorator(command)
    return command


_format_option = click.option(
    "--format",
    type=click.Choice(REPORT_FORMATS),
    default=DEFAULT_CONFIG.format,
    show_default=True,
    help="Output format",
)
_out_option = click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), help="Also write the JSON report here"
)


@click.group(name="verify")
def verify_cli() -> None:
    """Reproduce the small cases and sweep invariants of flip-graph balls."""


@verify_cli.command("small-case")
@click.option("--case", "case", type=click.Choice(SMALL_CASES), required=True, help="Small case as genus,boundary")
@click.option("--radius", type=int, default=None, help="Flip radius for engine-built windows (per-case default)")
@click.option("--max-nodes", type=int, default=DEFAULT_CONFIG.max_nodes, show_default=True, help="Node cap")
@click.option("--margin", type=int, default=DEFAULT_CONFIG.margin, show_default=True, help="Interiority margin")
@_format_option
@_out_option
def small_case_command(
    case: str, radius: int | None, max_nodes: int, margin: int, format: str, out: Path | None
) -> None:
    """Run the acceptance checks of one small nonorientable surface."""
    if radius is not None and radius < 0:
        raise click.BadParameter("radius must be nonnegative", param_hint="--radius")
    report = _usage(lambda: run_small_case_report(case, radius=radius, max_nodes=max_nodes, margin=margin))
    _emit(report, format, out)


@verify_cli.command("suite")
@_signature_options
@click.option("--samples", type=int, default=DEFAULT_CONFIG.samples, show_default=True, help="Sampled flips")
@click.option("--seed", type=int, default=DEFAULT_CONFIG.seed, show_default=True, help="Sampling seed")
@click.option("--margin", type=int, default=DEFAULT_CONFIG.margin, show_default=True, help="Interiority margin")
@click.option("--symmetries/--no-symmetries", default=True, help="Check maps induced by gluing symmetries")
@_format_option
@_out_option
def suite_command(
    genus: int,
    boundary: int,
    orientable: bool,
    radius: int,
    max_nodes: int,
    samples: int,
    seed: int,
    margin: int,
    symmetries: bool,
    format: str,
    out: Path | None,
) -> None:
    """Sweep count, invariance, flip and connectivity checks over a ball."""
    _require_signature(genus, boundary, orientable)
    for name, value in (("--radius", radius), ("--samples", samples), ("--margin", margin)):
        if value < 0:
            raise click.BadParameter("must be nonnegative", param_hint=name)
    if max_nodes < 1:
        raise click.BadParameter("must be positive", param_hint="--max-nodes")
    report = run_invariant_suite(
        genus,
        boundary,
        orientable,
        radius=radius,
        samples=samples,
        seed=seed,
        max_nodes=max_nodes,
        margin=margin,
        symmetries=symmetries,
    )
    _emit(report, format, out)


def _witness_lines(witness: Witness) -> list[str]:
    lines = [f"  node {witness.node} at depth {witness.depth}"]
    lines.extend(f"  {label}: {arc.describe()}" for label, arc in sorted(witness.assignment.items()))
    return lines


@click.command("find-config")
@click.option("--pattern", type=click.Path(dir_okay=False, path_type=Path), help="Pattern file")
@click.option("--builtin", type=click.Choice(sorted(BUILTIN_PATTERNS)), help="Built-in pattern name")
@_signature_options
@_format_option
@_out_option
def find_config_command(
    pattern: Path | None,
    builtin: str | None,
    genus: int,
    boundary: int,
    orientable: bool,
    radius: int,
    max_nodes: int,
    format: str,
    out: Path | None,
) -> None:
    """Search a flip-graph ball for arcs realising a configuration pattern."""
    if (pattern is None) == (builtin is None):
        raise click.UsageError("give exactly one of --pattern and --builtin")
    chosen: ConfigurationPattern = _usage(
        lambda: load_pattern(pattern) if pattern is not None else builtin_pattern(str(builtin))
    )
    _require_signature(genus, boundary, orientable)
    if radius < 0:
        raise click.BadParameter("must be nonnegative", param_hint="--radius")

    runner = ReportRunner(f"find-config {chosen.name} ({genus},{boundary}) radius {radius}")
    ball = runner.attempt(
        "flip-graph-ball",
        lambda: flip_graph_ball(build_surface(genus, boundary, orientable), radius, max_nodes=max_nodes),
    )
    witness: Witness | None = None
    if ball is not None:
        for note in ball.truncation:
            runner.report.note_truncation(note)
        witness = runner.attempt("search", lambda: search_ball(chosen, ball))
        runner.report.add("witness-found", True, witness is not None)
    report = runner.finish()

    if format == "json":
        document = {**report.to_dict(), "witness": None if witness is None else witness.to_dict()}
        click.echo(json.dumps(document, indent=2, ensure_ascii=False))
    else:
        click.echo(ReportGenerator().generate(report, format))
        if witness is not None and format == "terminal":
            click.echo("\n".join(["", "Witness:", *_witness_lines(witness)]))
    if out is not None:
        try:
            save_report(report, out)
        except ExportError as e:
            raise click.FileError(str(e.path), hint=e.message) from e
    if not report.passed:
        sys.exit(1)


@click.command("export")
@click.option("--what", type=click.Choice(["ball", "complex"]), required=True, help="Object to export")
@click.option("--format", type=click.Choice(EXPORT_FORMATS), default="json", show_default=True, help="File format")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Destination file")
@click.option("--case", type=click.Choice(SMALL_CASES), help="Export an explicit small-case model instead")
@click.option("--genus", "-g", type=int, help="Genus of the surface")
@click.option("--boundary", "-r", type=int, help="Number of boundary components")
@click.option("--orientable/--nonorientable", default=False, help="Orientability (default: nonorientable)")
@click.option("--radius", type=int, default=DEFAULT_CONFIG.radius, show_default=True, help="Flip radius")
@click.option("--max-nodes", type=int, default=DEFAULT_CONFIG.max_nodes, show_default=True, help="Node cap")
@click.option("--margin", type=int, default=DEFAULT_CONFIG.margin, show_default=True, help="Interiority margin")
def export_command(
    what: str,
    format: str,
    out: Path,
    case: str | None,
    genus: int | None,
    boundary: int | None,
    orientable: bool,
    radius: int,
    max_nodes: int,
    margin: int,
) -> None:
    """Write a flip-graph ball or a complex window as DOT or JSON."""
    if case is not None:
        if what != "complex":
            raise click.UsageError("--case exports explicit models and needs --what complex")
        obj: Any = _usage(lambda: explicit_small_model(case))
    else:
        if genus is None or boundary is None:
            raise click.UsageError("give --genus and --boundary, or --case for an explicit model")
        _require_signature(genus, boundary, orientable)
        ball = _usage(lambda: flip_graph_ball(build_surface(genus, boundary, orientable), radius, max_nodes))
        obj = ball if what == "ball" else _usage(lambda: complex_from_ball(ball, margin))
    try:
        path = export_graph(obj, format, out)
    except ExportError as e:
        raise click.FileError(str(e.path), hint=e.message) from e
    click.echo(f"✅ wrote {what} ({format}) to {path}")


# 🔺✅🔚
