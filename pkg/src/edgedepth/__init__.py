"""Edge ideals, their symbolic powers, exact depth, and star packing bounds."""

from .constructions import edge_ideal, mixed_ideal, prime_power, symbolic_power
from .graphs import Graph, is_chordal, minimal_vertex_covers, parse_graph, star_packing_number
from .homology import GF2, QQ, FieldSpec, betti_table, betti_via_taylor, depth
from .monomials import Monomial, MonomialIdeal

__all__ = [
    "FieldSpec", "GF2", "Graph", "Monomial", "MonomialIdeal", "QQ", "betti_table",
    "betti_via_taylor", "depth", "edge_ideal", "is_chordal", "minimal_vertex_covers",
    "mixed_ideal", "parse_graph", "prime_power", "star_packing_number", "symbolic_power",
]

__version__ = "0.1.0"
