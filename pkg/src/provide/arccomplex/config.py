#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Run parameters and the JSON configuration file.

The configuration file mirrors the command line, keyed by command path::

    {
      "verify": {"suite": {"genus": 2, "boundary": 2, "radius": 3, "seed": 7}},
      "find-config": {"builtin": "twisted-pair", "radius": 2},
      "export": {"what": "complex", "format": "dot"}
    }

Option names may use dashes or underscores. Values given on the command line
override the file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import attrs
from attrs import validators

from provide.arccomplex.errors import RejectedInputError

REPORT_FORMATS = ("terminal", "summary", "json")
EXPORT_FORMATS = ("dot", "json")

COMMANDS: dict[str, tuple[str, ...] | None] = {
    "verify": ("small-case", "suite"),
    "find-config": None,
    "export": None,
}

# Commands whose `format` option is not a report format.
COMMAND_FORMATS: dict[str, tuple[str, ...]] = {"export": EXPORT_FORMATS}


@attrs.define(frozen=True)
class VerifierConfig:
    """Parameters shared by every verifier command.

    Attributes:
        radius: Flip radius of explored balls.
        max_nodes: Node cap of a ball; reaching it is reported as truncation.
        samples: Number of sampled ``(node, arc)`` pairs in the invariant suite.
        seed: Seed of the sampling generator.
        margin: Flips between a trusted vertex and the edge of the ball.
        format: Report format, one of ``terminal``, ``summary`` or ``json``.
    """

    radius: int = attrs.field(default=3, validator=[validators.instance_of(int), validators.ge(0)])
    max_nodes: int = attrs.field(default=20000, validator=[validators.instance_of(int), validators.ge(1)])
    samples: int = attrs.field(default=1000, validator=[validators.instance_of(int), validators.ge(0)])
    seed: int = attrs.field(default=0, validator=validators.instance_of(int))
    margin: int = attrs.field(default=2, validator=[validators.instance_of(int), validators.ge(0)])
    format: str = attrs.field(default="terminal", validator=validators.in_(REPORT_FORMATS))

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> VerifierConfig:
        """Build from any mapping, ignoring keys that are not run parameters.

        Raises:
            RejectedInputError: A run parameter has the wrong type or range.
        """
        known = {field.name for field in attrs.fields(cls)}
        try:
            return cls(**{key: value for key, value in data.items() if key in known})
        except (TypeError, ValueError) as e:
            raise RejectedInputError(f"invalid run parameter: {e}", {"error": str(e)}) from e


DEFAULT_CONFIG = VerifierConfig()


def _normalize(section: dict[str, Any], where: str, command: str) -> dict[str, Any]:
    if not isinstance(section, dict):
        raise RejectedInputError(f"config section {where!r} must be an object", {"section": where})
    options = {key.replace("-", "_"): value for key, value in section.items()}
    shared = dict(options)
    formats = COMMAND_FORMATS.get(command)
    if formats is not None and "format" in shared:
        value = shared.pop("format")
        if value not in formats:
            raise RejectedInputError(
                f"invalid run parameter: format for {where!r} must be one of {formats} (got {value!r})",
                {"section": where, "known": list(formats)},
            )
    VerifierConfig.from_mapping(shared)
    return options


def default_map_from_dict(data: dict[str, Any]) -> dict[str, Any]:
    """Turn a configuration document into a click ``default_map``.

    Raises:
        RejectedInputError: Unknown commands or invalid run parameters.
    """
    default_map: dict[str, Any] = {}
    for command, section in data.items():
        if command not in COMMANDS:
            raise RejectedInputError(f"unknown command {command!r} in config", {"known": sorted(COMMANDS)})
        subcommands = COMMANDS[command]
        if subcommands is None:
            default_map[command] = _normalize(section, command, command)
            continue
        if not isinstance(section, dict):
            raise RejectedInputError(f"config section {command!r} must be an object", {"section": command})
        nested = {}
        for name, options in section.items():
            if name not in subcommands:
                raise RejectedInputError(
                    f"unknown command {command} {name!r} in config", {"known": list(subcommands)}
                )
            nested[name] = _normalize(options, f"{command} {name}", command)
        default_map[command] = nested
    return default_map


def load_default_map(path: Path) -> dict[str, Any]:
    """Read a JSON configuration file into a click ``default_map``.

    Raises:
        RejectedInputError: The file is unreadable, not JSON, or invalid.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise RejectedInputError(f"cannot read {path}: {e}", {"path": str(path)}) from e
    except json.JSONDecodeError as e:
        raise RejectedInputError(f"invalid JSON in {path}: {e}", {"path": str(path)}) from e
    if not isinstance(data, dict):
        raise RejectedInputError("config document must be a JSON object", {"path": str(path)})
    return default_map_from_dict(data)


# 🔺✅🔚
