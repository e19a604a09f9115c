"""Exact arithmetic for cubic extensions of F_q(x): canonical normal forms,
Galois and irreducibility criteria, explicit Galois actions, ramification,
genus, place splitting, and integral bases."""

from . import action, cfftool, galoiskit, gfq, intbasis, normalform, placegeom, polyrat

__all__ = [
    "gfq",
    "polyrat",
    "normalform",
    "galoiskit",
    "action",
    "placegeom",
    "intbasis",
    "cfftool",
]
