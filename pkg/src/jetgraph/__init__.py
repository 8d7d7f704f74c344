"""Jets of graphs and edge ideals: covers, principal components, Betti tables."""

from .betti import BettiTable, betti_table, has_linear_resolution, independence_complex
from .graph import (
    Graph,
    VertexCover,
    complement,
    edge_ideal,
    is_chordal,
    is_cochordal,
    minimal_vertex_covers,
    parse_graph,
)
from .groebner import Limits, PolyIdeal, buchberger, ideal_equal, saturate
from .jets import (
    jets_of_graph,
    jets_of_ideal,
    jets_of_polynomial,
    principal_component_graph,
    principal_component_ideal,
    radical_of_jets,
)
from .monomial import MonomialIdeal
from .poly import MonomialOrder, Polynomial, Ring

__all__ = [
    "BettiTable", "Graph", "Limits", "MonomialIdeal", "MonomialOrder", "PolyIdeal",
    "Polynomial", "Ring", "VertexCover", "betti_table", "buchberger", "complement",
    "edge_ideal", "has_linear_resolution", "ideal_equal", "independence_complex",
    "is_chordal", "is_cochordal", "jets_of_graph", "jets_of_ideal", "jets_of_polynomial",
    "minimal_vertex_covers", "parse_graph", "principal_component_graph",
    "principal_component_ideal", "radical_of_jets", "saturate",
]
