#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Tests for run parameters and configuration files."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from provide.arccomplex.config import DEFAULT_CONFIG, VerifierConfig, default_map_from_dict, load_default_map
from provide.arccomplex.errors import RejectedInputError


@pytest.mark.unit
class TestVerifierConfig:
    """Test run parameter validation."""

    def test_defaults(self) -> None:
        assert DEFAULT_CONFIG == VerifierConfig(radius=3, max_nodes=20000, samples=1000, seed=0, margin=2)
        assert DEFAULT_CONFIG.format == "terminal"

    def test_from_mapping_ignores_other_keys(self) -> None:
        config = VerifierConfig.from_mapping({"radius": 5, "genus": 2, "case": "1,2"})
        assert config.radius == 5
        assert config.samples == DEFAULT_CONFIG.samples

    @pytest.mark.parametrize(
        "data",
        [{"radius": -1}, {"max_nodes": 0}, {"samples": "many"}, {"format": "html"}, {"margin": -2}],
    )
    def test_invalid_parameters(self, data: dict) -> None:
        with pytest.raises(RejectedInputError, match="invalid run parameter"):
            VerifierConfig.from_mapping(data)


@pytest.mark.unit
class TestDefaultMap:
    """Test translation of config documents into click defaults."""

    def test_nested_and_flat_commands(self) -> None:
        default_map = default_map_from_dict(
            {
                "verify": {"suite": {"genus": 2, "max-nodes": 500}, "small-case": {"case": "1,2"}},
                "find-config": {"builtin": "twisted-pair"},
                "export": {"what": "complex"},
            }
        )
        assert default_map == {
            "verify": {"suite": {"genus": 2, "max_nodes": 500}, "small-case": {"case": "1,2"}},
            "find-config": {"builtin": "twisted-pair"},
            "export": {"what": "complex"},
        }

    @pytest.mark.parametrize(
        ("data", "match"),
        [
            ({"plot": {}}, "unknown command"),
            ({"verify": {"sweep": {}}}, "unknown command verify"),
            ({"verify": []}, "must be an object"),
            ({"export": "dot"}, "must be an object"),
            ({"find-config": {"radius": -1}}, "invalid run parameter"),
            ({"export": {"format": "terminal"}}, "invalid run parameter"),
            ({"verify": {"suite": {"format": "dot"}}}, "invalid run parameter"),
        ],
    )
    def test_rejected_documents(self, data: dict, match: str) -> None:
        with pytest.raises(RejectedInputError, match=match):
            default_map_from_dict(data)

    def test_load_file(self, tmp_path: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"export": {"format": "dot"}}), encoding="utf-8")
        assert load_default_map(path) == {"export": {"format": "dot"}}

    def test_each_command_checks_its_own_formats(self) -> None:
        document = {
            "verify": {"suite": {"format": "summary"}},
            "find-config": {"format": "json"},
            "export": {"what": "complex", "format": "dot"},
        }
        assert default_map_from_dict(document) == document

    def test_load_failures(self, tmp_path: Path) -> None:
        with pytest.raises(RejectedInputError, match="cannot read"):
            load_default_map(tmp_path / "missing.json")
        broken = tmp_path / "broken.json"
        broken.write_text("{", encoding="utf-8")
        with pytest.raises(RejectedInputError, match="invalid JSON"):
            load_default_map(broken)
        listed = tmp_path / "list.json"
        listed.write_text("[]", encoding="utf-8")
        with pytest.raises(RejectedInputError, match="JSON object"):
            load_default_map(listed)


# 🔺✅🔚
