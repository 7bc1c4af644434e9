#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Main CLI entry point for provide-arccomplex."""

from __future__ import annotations

from pathlib import Path

import click

from provide.arccomplex.config import load_default_map
from provide.arccomplex.errors import ArcComplexError
from provide.arccomplex.verify.cli import export_command, find_config_command, verify_cli


def _load_config(ctx: click.Context, param: click.Parameter, value: Path | None) -> Path | None:
    """Install the config file as the command tree's defaults before anything else parses."""
    if value is None:
        return None
    try:
        ctx.default_map = load_default_map(value)
    except ArcComplexError as e:
        raise click.BadParameter(e.message, ctx=ctx, param=param) from e
    return value


@click.group()
@click.version_option(package_name="provide-arccomplex")
@click.option(
    "--config",
    type=click.Path(dir_okay=False, path_type=Path),
    callback=_load_config,
    is_eager=True,
    expose_value=False,
    help="Configuration file (JSON) mirroring the command-line flags",
)
def main() -> None:
    """Provide ArcComplex - flip graphs and arc complexes of surfaces with boundary."""


main.add_command(verify_cli)
main.add_command(find_config_command)
main.add_command(export_command)


if __name__ == "__main__":
    main()

# 🔺✅🔚
