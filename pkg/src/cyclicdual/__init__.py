"""Exact combinatorics of cyclic duality: paracyclic morphisms and orbit 2-categories."""
from . import crossed_module, equivariant_preorder, finite_group, instances, orbit_cat, para_cat
from .para_cat import ParaMorphism, compose, cyclic_dual, identity

__version__ = "0.1.0"

__all__ = [
    "ParaMorphism",
    "compose",
    "crossed_module",
    "cyclic_dual",
    "equivariant_preorder",
    "finite_group",
    "identity",
    "instances",
    "orbit_cat",
    "para_cat",
]
