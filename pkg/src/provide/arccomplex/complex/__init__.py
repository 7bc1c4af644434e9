#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Finite windows of arc complexes, their simplicial maps and automorphisms.

Usage:
    window = build_complex(1, 2, False, radius=10)
    report = automorphism_group(window)      # Z2×Z2

    model = explicit_small_model("2,1", k=8)
    model_constraints(model)                 # all True"""

from __future__ import annotations

from .groups import (
    GroupInvariants,
    GroupReport,
    automorphism_group,
    identify_group,
    is_member,
    symbolic_invariants,
)
from .maps import (
    MapFlags,
    SimplicialMap,
    compose,
    enumerate_automorphisms,
    enumerate_injective_endomorphisms,
    identity_map,
    is_automorphism,
    validate_map,
)
from .models import ModelVertex, a_degree_unbounded, explicit_small_model, model_constraints, reflection, shift
from .symmetry import (
    Dihedral,
    GluingSymmetry,
    compose_symmetries,
    gluing_symmetries,
    identity_symmetry,
    induced_map,
    is_gluing_symmetry,
    preserves_piece_classes,
)
from .window import (
    ComplexWindow,
    VertexReport,
    build_complex,
    complex_from_ball,
    interior_isomorphic,
    one_skeleton,
    trusted_skeleton,
    vertex_degree_and_link,
)

__all__ = [
    "ComplexWindow",
    "Dihedral",
    "GluingSymmetry",
    "GroupInvariants",
    "GroupReport",
    "MapFlags",
    "ModelVertex",
    "SimplicialMap",
    "VertexReport",
    "a_degree_unbounded",
    "automorphism_group",
    "build_complex",
    "complex_from_ball",
    "compose",
    "compose_symmetries",
    "enumerate_automorphisms",
    "enumerate_injective_endomorphisms",
    "explicit_small_model",
    "gluing_symmetries",
    "identify_group",
    "identity_map",
    "identity_symmetry",
    "induced_map",
    "interior_isomorphic",
    "is_automorphism",
    "is_gluing_symmetry",
    "is_member",
    "model_constraints",
    "one_skeleton",
    "preserves_piece_classes",
    "reflection",
    "shift",
    "symbolic_invariants",
    "trusted_skeleton",
    "validate_map",
    "vertex_degree_and_link",
]

# 🔺✅🔚
