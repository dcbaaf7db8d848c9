"""Canonical forms and isomorphism testing for planar graphs."""

from .canonizer import Canon, canon_biconnected, canon_planar, canonical_list, relabel_and_strip
from .decompose import (
    biconnected_decompose,
    inseparable_triple,
    three_connected_separating_pairs,
    triconnected_decompose,
)
from .errors import NonPlanarError, PlanarCanonError
from .graph_model import Graph, PlaneGraph, planar_embed
from .oracle import brute_force_aut_count, brute_force_iso


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff the planar graphs ``g`` and ``h`` are isomorphic (colors respected)."""
    return canon_planar(g) == canon_planar(h)


__all__ = [
    "Canon",
    "Graph",
    "NonPlanarError",
    "PlanarCanonError",
    "PlaneGraph",
    "biconnected_decompose",
    "brute_force_aut_count",
    "brute_force_iso",
    "canon_biconnected",
    "canon_planar",
    "canonical_list",
    "inseparable_triple",
    "is_isomorphic",
    "planar_embed",
    "relabel_and_strip",
    "three_connected_separating_pairs",
    "triconnected_decompose",
]
__version__ = "0.1.0"
