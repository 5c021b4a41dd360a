"""Spectral-radius ordering of trees under degree-preserving 2-switches."""

from .diagonalize import Comparison, DiagResult, Inertia, compare_index, diagonalize, inertia, spectral_radius
from .family import FamilyCtx, GSpec, Triple, enumerate_family, make_G_member, make_member, make_Tj
from .ordering import Catalog, SwitchEffect, build_catalog, classify_switch, invlex_compare
from .recurrences import make_ctx
from .switches import TransformKind, apply_transform, decompose, realize_switch, replay
from .tree import Tree, apply_2switch, build_tree, path, star, sun

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "Comparison",
    "DiagResult",
    "FamilyCtx",
    "GSpec",
    "Inertia",
    "SwitchEffect",
    "TransformKind",
    "Tree",
    "Triple",
    "apply_2switch",
    "apply_transform",
    "build_catalog",
    "build_tree",
    "classify_switch",
    "compare_index",
    "decompose",
    "diagonalize",
    "enumerate_family",
    "inertia",
    "invlex_compare",
    "make_G_member",
    "make_Tj",
    "make_ctx",
    "make_member",
    "path",
    "realize_switch",
    "replay",
    "spectral_radius",
    "star",
    "sun",
]
